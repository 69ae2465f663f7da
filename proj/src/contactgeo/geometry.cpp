#include <random>
#include <set>

#include "holab/contactgeo.hpp"

namespace holab {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::PROVED: return "PROVED";
    case CheckStatus::SAMPLED: return "SAMPLED";
    case CheckStatus::FAILED: return "FAILED";
  }
  return "?";
}

namespace {

int pick_pivot(const FieldMat& A, int n, int col, int from) {
  int any = -1;
  for (int r = from; r < n; ++r) {
    const RatFunc& f = A[size_t(r) * n + col];
    if (f.is_zero()) continue;
    if (f.is_constant()) return r;
    if (any < 0) any = r;
  }
  return any;
}

std::string idx_name(const std::string& what, std::initializer_list<int> ix) {
  std::string s = what + "[";
  bool first = true;
  for (int i : ix) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "]";
}

}  // namespace

FieldMat ratfunc_solve(FieldMat A, FieldMat B, int n, int k) {
  for (int c = 0; c < n; ++c) {
    int p = pick_pivot(A, n, c, c);
    if (p < 0) throw Error(Err::SINGULAR, "rational-function system is singular");
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(A[size_t(p) * n + j], A[size_t(c) * n + j]);
      for (int j = 0; j < k; ++j) std::swap(B[size_t(p) * k + j], B[size_t(c) * k + j]);
    }
    RatFunc inv = RatFunc::constant(A[0].nvars(), 1) / A[size_t(c) * n + c];
    for (int j = 0; j < n; ++j)
      if (!A[size_t(c) * n + j].is_zero()) A[size_t(c) * n + j] *= inv;
    for (int j = 0; j < k; ++j)
      if (!B[size_t(c) * k + j].is_zero()) B[size_t(c) * k + j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      RatFunc f = A[size_t(r) * n + c];
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!A[size_t(c) * n + j].is_zero()) A[size_t(r) * n + j] -= f * A[size_t(c) * n + j];
      for (int j = 0; j < k; ++j)
        if (!B[size_t(c) * k + j].is_zero()) B[size_t(r) * k + j] -= f * B[size_t(c) * k + j];
    }
  }
  return B;
}

RatFunc ratfunc_det(FieldMat A, int n) {
  int nv = A.empty() ? 0 : A[0].nvars();
  RatFunc det = RatFunc::constant(nv, 1);
  for (int c = 0; c < n; ++c) {
    int p = pick_pivot(A, n, c, c);
    if (p < 0) return RatFunc(nv);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(A[size_t(p) * n + j], A[size_t(c) * n + j]);
      det = -det;
    }
    const RatFunc piv = A[size_t(c) * n + c];
    det *= piv;
    for (int r = c + 1; r < n; ++r) {
      RatFunc f = A[size_t(r) * n + c];
      if (f.is_zero()) continue;
      f /= piv;
      for (int j = c; j < n; ++j)
        if (!A[size_t(c) * n + j].is_zero()) A[size_t(r) * n + j] -= f * A[size_t(c) * n + j];
    }
  }
  return det;
}

Geometry::Geometry(const ContactModel& model) : model_(model) {
  m = model.m;
  d = model.d();
  n = model.n();
  if (m < 1) throw Error(Err::MODEL_INVALID, "m must be positive");
  if (int(model.vars.size()) != n || int(model.theta.size()) != n)
    throw Error(Err::MODEL_INVALID, "contact form needs one coefficient per coordinate");
  if (int(model.frame.size()) != d) throw Error(Err::MODEL_INVALID, "frame must have 2m fields");
  for (const auto& E : model.frame)
    if (int(E.size()) != n) throw Error(Err::MODEL_INVALID, "frame field has wrong length");
  if (int(model.metric.size()) != d * d) throw Error(Err::MODEL_INVALID, "metric must be 2m x 2m");
  if (model.J && int(model.J->size()) != d * d) throw Error(Err::MODEL_INVALID, "J must be 2m x 2m");
  if (int(model.base_point.size()) != n) throw Error(Err::MODEL_INVALID, "base point has wrong length");
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < a; ++b)
      if (!(model.metric[size_t(a) * d + b] == model.metric[size_t(b) * d + a]))
        throw Error(Err::MODEL_INVALID, "metric is not symmetric");
  {
    Mat<Q> g0(d, d);
    try {
      for (int k = 0; k < d * d; ++k) g0.a[k] = model.metric[k].eval(model.base_point);
    } catch (const Error&) {
      throw Error(Err::POLE_AT_POINT, "metric has a pole at the base point");
    }
    // leading principal minors
    for (int k = 1; k <= d; ++k) {
      Mat<Q> minor(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor(i, j) = g0(i, j);
      Inertia in = inertia(minor);
      if (in.pos != k) throw Error(Err::MODEL_INVALID, "metric is not positive definite at the base point");
    }
  }
  build_reeb();
  build_structure();
  build_connection();
  if (model_.J) build_cr();
}

void Geometry::build_reeb() {
  const auto& th = model_.theta;
  for (int a = 0; a < d; ++a)
    if (!contract(th, model_.frame[a]).is_zero())
      throw Error(Err::MODEL_INVALID, "frame field " + std::to_string(a) + " is not in ker theta");
  TwoForm dth = exterior_d(th);
  FieldMat A(size_t(n) * n, RatFunc(n));
  for (int i = 0; i < n; ++i) A[i] = th[i];
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < n; ++i) {
      RatFunc s(n);
      for (int j = 0; j < n; ++j) {
        const RatFunc& e = model_.frame[a][j];
        if (e.is_zero()) continue;
        RatFunc w = dth.at(i, j);
        if (!w.is_zero()) s += w * e;
      }
      A[size_t(1 + a) * n + i] = s;
    }
  Mat<Q> at_base(n, n);
  try {
    for (int k = 0; k < n * n; ++k) at_base.a[k] = A[k].eval(model_.base_point);
  } catch (const Error&) {
    throw Error(Err::POLE_AT_POINT, "contact data has a pole at the base point");
  }
  if (rank_nullspace(at_base).rank < n)
    throw Error(Err::NOT_CONTACT, "theta ^ (dtheta)^m vanishes at the base point");
  FieldMat rhs(n, RatFunc(n));
  rhs[0] = RatFunc::constant(n, 1);
  reeb = ratfunc_solve(A, rhs, n, 1);

  // Frame [E_1..E_d, reeb] must be unimodular so divergences stay frame-free.
  FieldMat F(size_t(n) * n, RatFunc(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) F[size_t(i) * n + j] = j < d ? model_.frame[j][i] : reeb[i];
  RatFunc det = ratfunc_det(F, n);
  if (det.is_zero() || !det.is_constant())
    throw Error(Err::MODEL_INVALID, "frame together with the Reeb field must have constant nonzero determinant");
  FieldMat I(size_t(n) * n, RatFunc(n));
  for (int i = 0; i < n; ++i) I[size_t(i) * n + i] = RatFunc::constant(n, 1);
  frame_inv = ratfunc_solve(F, I, n, n);
  checks.push_back({"frame_unimodular", CheckStatus::PROVED, 0, ""});
}

std::vector<RatFunc> Geometry::decompose(const VField& v) const {
  std::vector<RatFunc> c(n, RatFunc(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RatFunc& f = frame_inv[size_t(i) * n + j];
      if (!f.is_zero() && !v[j].is_zero()) c[i] += f * v[j];
    }
  return c;
}

void Geometry::build_structure() {
  const auto& E = model_.frame;
  bracket.assign(size_t(d) * d * d, RatFunc(n));
  W.assign(size_t(d) * d, RatFunc(n));
  TwoForm dth = exterior_d(model_.theta);
  Check dcheck{"dtheta_on_frame", CheckStatus::PROVED, 0, ""};
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      auto c = decompose(lie_bracket(E[a], E[b]));
      for (int k = 0; k < d; ++k) {
        bracket[(size_t(a) * d + b) * d + k] = c[k];
        bracket[(size_t(b) * d + a) * d + k] = -c[k];
      }
      W[size_t(a) * d + b] = -c[d];
      W[size_t(b) * d + a] = c[d];
      if (!(dth(E[a], E[b]) == W[size_t(a) * d + b]) && dcheck.status == CheckStatus::PROVED) {
        dcheck.status = CheckStatus::FAILED;
        dcheck.witness = idx_name("W", {a, b});
      }
    }
  checks.push_back(dcheck);

  reeb_bracket.assign(size_t(d) * d, RatFunc(n));
  xi_op.assign(size_t(d) * d, RatFunc(n));
  Check hcheck{"reeb_flow_preserves_distribution", CheckStatus::PROVED, 0, ""};
  for (int a = 0; a < d; ++a) {
    auto c = decompose(lie_bracket(reeb, E[a]));
    for (int k = 0; k < d; ++k) {
      reeb_bracket[size_t(a) * d + k] = c[k];
      xi_op[size_t(k) * d + a] = c[k];
    }
    if (!c[d].is_zero() && hcheck.status == CheckStatus::PROVED) {
      hcheck.status = CheckStatus::FAILED;
      hcheck.witness = idx_name("reeb_bracket", {a});
    }
  }
  checks.push_back(hcheck);
}

void Geometry::build_connection() {
  const auto& E = model_.frame;
  g = model_.metric;
  FieldMat I(size_t(d) * d, RatFunc(n));
  for (int i = 0; i < d; ++i) I[size_t(i) * d + i] = RatFunc::constant(n, 1);
  try {
    ginv = ratfunc_solve(g, I, d, d);
  } catch (const Error&) {
    throw Error(Err::MODEL_INVALID, "metric is degenerate");
  }
  auto G = [&](int a, int b) -> const RatFunc& { return g[size_t(a) * d + b]; };
  auto C = [&](int a, int b, int c) -> const RatFunc& { return bracket[(size_t(a) * d + b) * d + c]; };
  // dg[c][a*d+b] = E_c(g_ab)
  std::vector<FieldMat> dg(d, FieldMat(size_t(d) * d, RatFunc(n)));
  for (int c = 0; c < d; ++c)
    for (int k = 0; k < d * d; ++k)
      if (!g[k].is_constant()) dg[c][k] = dir_deriv(E[c], g[k]);

  // K(a,b,e) = g(nabla_a E_b, E_e)
  std::vector<RatFunc> K(size_t(d) * d * d, RatFunc(n));
  const Q half(1, 2);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int e = 0; e < d; ++e) {
        RatFunc s = dg[a][size_t(b) * d + e] + dg[b][size_t(e) * d + a] - dg[e][size_t(a) * d + b];
        for (int f = 0; f < d; ++f) {
          if (!C(a, b, f).is_zero()) s += C(a, b, f) * G(f, e);
          if (!C(b, e, f).is_zero()) s -= C(b, e, f) * G(f, a);
          if (!C(e, a, f).is_zero()) s += C(e, a, f) * G(f, b);
        }
        if (!s.is_zero()) s *= RatFunc::constant(n, half);
        K[(size_t(a) * d + b) * d + e] = s;
      }
  gamma.assign(size_t(d) * d * d, RatFunc(n));
  conn.assign(d, FieldMat(size_t(d) * d, RatFunc(n)));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        RatFunc s(n);
        for (int e = 0; e < d; ++e) {
          const RatFunc& k = K[(size_t(a) * d + b) * d + e];
          const RatFunc& gi = ginv[size_t(c) * d + e];
          if (!k.is_zero() && !gi.is_zero()) s += gi * k;
        }
        gamma[(size_t(a) * d + b) * d + c] = s;
        conn[a][size_t(c) * d + b] = s;
      }
  auto Gm = [&](int a, int b, int c) -> const RatFunc& { return gamma[(size_t(a) * d + b) * d + c]; };

  Check metric{"metric_compatible", CheckStatus::PROVED, 0, ""};
  Check torsion{"horizontal_torsion_free", CheckStatus::PROVED, 0, ""};
  for (int a = 0; a < d && metric.status == CheckStatus::PROVED; ++a)
    for (int b = 0; b < d && metric.status == CheckStatus::PROVED; ++b)
      for (int c = b; c < d; ++c) {
        RatFunc s = dg[a][size_t(b) * d + c];
        for (int e = 0; e < d; ++e) {
          if (!Gm(a, b, e).is_zero()) s -= Gm(a, b, e) * G(e, c);
          if (!Gm(a, c, e).is_zero()) s -= Gm(a, c, e) * G(b, e);
        }
        if (!s.is_zero()) {
          metric.status = CheckStatus::FAILED;
          metric.witness = idx_name("nabla g", {a, b, c});
          break;
        }
      }
  for (int a = 0; a < d && torsion.status == CheckStatus::PROVED; ++a)
    for (int b = a + 1; b < d && torsion.status == CheckStatus::PROVED; ++b)
      for (int c = 0; c < d; ++c)
        if (!(Gm(a, b, c) - Gm(b, a, c) - C(a, b, c)).is_zero()) {
          torsion.status = CheckStatus::FAILED;
          torsion.witness = idx_name("torsion", {a, b, c});
          break;
        }
  checks.push_back(metric);
  checks.push_back(torsion);

  // tau(E_a,E_b) = 1/2 (L_reeb g)(E_a,E_b)
  subtorsion_form.assign(size_t(d) * d, RatFunc(n));
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      RatFunc s = g[size_t(a) * d + b].is_constant() ? RatFunc(n) : dir_deriv(reeb, g[size_t(a) * d + b]);
      for (int c = 0; c < d; ++c) {
        const RatFunc& xa = reeb_bracket[size_t(a) * d + c];
        const RatFunc& xb = reeb_bracket[size_t(b) * d + c];
        if (!xa.is_zero()) s -= xa * G(c, b);
        if (!xb.is_zero()) s -= G(a, c) * xb;
      }
      if (!s.is_zero()) s *= RatFunc::constant(n, half);
      subtorsion_form[size_t(a) * d + b] = s;
      subtorsion_form[size_t(b) * d + a] = s;
    }
  subtorsion.assign(size_t(d) * d, RatFunc(n));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      RatFunc s(n);
      for (int c = 0; c < d; ++c) {
        const RatFunc& x = ginv[size_t(a) * d + c];
        const RatFunc& y = subtorsion_form[size_t(c) * d + b];
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      subtorsion[size_t(a) * d + b] = s;
    }
}

namespace {

FieldMat fm_mul(const FieldMat& A, const FieldMat& B, int d, int nv) {
  FieldMat C(size_t(d) * d, RatFunc(nv));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const RatFunc& x = A[size_t(i) * d + k];
      if (x.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        const RatFunc& y = B[size_t(k) * d + j];
        if (!y.is_zero()) C[size_t(i) * d + j] += x * y;
      }
    }
  return C;
}

bool fm_equal(const FieldMat& A, const FieldMat& B) {
  for (size_t k = 0; k < A.size(); ++k)
    if (!(A[k] == B[k])) return false;
  return true;
}

}  // namespace

void Geometry::build_cr() {
  const FieldMat& J = *model_.J;
  const auto& E = model_.frame;
  CRFlags f;
  FieldMat J2 = fm_mul(J, J, d, n);
  f.j_squared_minus_one = true;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      RatFunc want = a == b ? RatFunc::constant(n, -1) : RatFunc(n);
      if (!(J2[size_t(a) * d + b] == want)) f.j_squared_minus_one = false;
    }
  if (!f.j_squared_minus_one) throw Error(Err::NOT_ALMOST_COMPLEX, "J^2 != -1 on the distribution");

  f.g_matches_dtheta_j = fm_equal(fm_mul(W, J, d, n), g);

  // J-rotated frame fields as coordinate fields.
  std::vector<VField> JE(d, VField(n, RatFunc(n)));
  for (int b = 0; b < d; ++b)
    for (int a = 0; a < d; ++a) {
      const RatFunc& c = J[size_t(a) * d + b];
      if (c.is_zero()) continue;
      for (int i = 0; i < n; ++i)
        if (!E[a][i].is_zero()) JE[b][i] += c * E[a][i];
    }
  auto apply_j = [&](const std::vector<RatFunc>& h) {
    std::vector<RatFunc> out(d, RatFunc(n));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if (!J[size_t(a) * d + b].is_zero() && !h[b].is_zero()) out[a] += J[size_t(a) * d + b] * h[b];
    return out;
  };
  f.nijenhuis_zero = true;
  for (int a = 0; a < d && f.nijenhuis_zero; ++a)
    for (int b = a + 1; b < d && f.nijenhuis_zero; ++b) {
      auto p = decompose(lie_bracket(JE[a], JE[b]));
      auto q = decompose(lie_bracket(E[a], E[b]));
      auto r = decompose(lie_bracket(JE[a], E[b]));
      auto s = decompose(lie_bracket(E[a], JE[b]));
      std::vector<RatFunc> h(d, RatFunc(n));
      for (int k = 0; k < d; ++k) h[k] = r[k] + s[k];
      auto jh = apply_j(h);
      for (int k = 0; k < d; ++k)
        if (!(p[k] - q[k] - jh[k]).is_zero()) f.nijenhuis_zero = false;
      if (!(p[d] - q[d]).is_zero()) f.nijenhuis_zero = false;
    }

  // -1/2 pi([xi,X] + J[xi,JX]); pi[xi, J e_b] = (xi(J) + Xi J) e_b.
  FieldMat xiJ(size_t(d) * d, RatFunc(n));
  for (int k = 0; k < d * d; ++k)
    if (!J[k].is_constant()) xiJ[k] = dir_deriv(reeb, J[k]);
  FieldMat inner = fm_mul(xi_op, J, d, n);
  for (int k = 0; k < d * d; ++k) inner[k] += xiJ[k];
  FieldMat jin = fm_mul(J, inner, d, n);
  tw_nomizu.assign(size_t(d) * d, RatFunc(n));
  for (int k = 0; k < d * d; ++k) {
    RatFunc s = xi_op[k] + jin[k];
    if (!s.is_zero()) s *= RatFunc::constant(n, Q(-1, 2));
    tw_nomizu[k] = s;
  }
  f.tw_equals_adapted = fm_equal(tw_nomizu, subtorsion);
  FieldMat tj = fm_mul(subtorsion, J, d, n), jt = fm_mul(J, subtorsion, d, n);
  f.torsion_anticommutes_j = true;
  for (int k = 0; k < d * d; ++k)
    if (!(tj[k] + jt[k]).is_zero()) f.torsion_anticommutes_j = false;
  cr = f;
  auto push = [&](const char* name, bool ok) {
    checks.push_back({name, ok ? CheckStatus::PROVED : CheckStatus::FAILED, 0, ok ? "" : name});
  };
  push("cr_metric_is_levi_form", f.g_matches_dtheta_j);
  push("cr_integrable", f.nijenhuis_zero);
  push("cr_webster_torsion_matches", f.tw_equals_adapted);
  push("cr_torsion_anticommutes_j", f.torsion_anticommutes_j);
}

bool Geometry::regular_at(const std::vector<Q>& p) const {
  try {
    for (const auto& E : model_.frame)
      for (const auto& f : E) f.eval(p);
    for (const auto& f : reeb) f.eval(p);
    for (const auto& f : frame_inv) f.eval(p);
    for (const auto& f : ginv) f.eval(p);
    for (const auto& f : gamma) f.eval(p);
    for (const auto& f : subtorsion) f.eval(p);
    Mat<Q> gm(d, d), wm(d, d);
    for (int k = 0; k < d * d; ++k) {
      gm.a[k] = g[k].eval(p);
      wm.a[k] = W[k].eval(p);
    }
    if (inertia(gm).pos != d) return false;
    if (rank_nullspace(wm).rank != d) return false;
    if (model_.J)
      for (const auto& f : *model_.J) f.eval(p);
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::vector<std::vector<Q>> Geometry::sample_points(int count, uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> step(-4, 4);
  std::vector<std::vector<Q>> out;
  std::set<std::vector<int>> seen;
  for (int attempt = 0; attempt < 400 && int(out.size()) < count; ++attempt) {
    std::vector<int> k(n);
    for (auto& v : k) v = step(rng);
    if (!seen.insert(k).second) continue;
    std::vector<Q> p = model_.base_point;
    for (int i = 0; i < n; ++i) {
      Q step_q(k[i], 8);
      step_q.canonicalize();
      p[i] += step_q;
    }
    if (regular_at(p)) out.push_back(p);
  }
  if (int(out.size()) < count) throw Error(Err::POLE_AT_POINT, "too few regular sample points near the base point");
  return out;
}

}  // namespace holab
