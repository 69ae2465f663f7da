#include <sstream>

#include "holab/subsym.hpp"

namespace holab {

namespace {

QuadrupleCheck check(const std::string& name) { return QuadrupleCheck{name, true, ""}; }

void fail(QuadrupleCheck& c, const std::string& witness) {
  if (!c.pass) return;
  c.pass = false;
  c.witness = witness;
}

std::string pair_str(const LieAlgebraTable& L, int i, int j) {
  auto lab = [&](int k) { return k < int(L.labels.size()) ? L.labels[k] : "e" + std::to_string(k); };
  return "(" + lab(i) + ", " + lab(j) + ")";
}

bool supported_on(const Vec<Q>& v, const std::vector<int>& idx) {
  std::vector<char> in(v.size(), 0);
  for (int i : idx) in[i] = 1;
  for (size_t k = 0; k < v.size(); ++k)
    if (!in[k] && sgn(v[k])) return false;
  return true;
}

Vec<Q> restrict_to(const Vec<Q>& v, const std::vector<int>& idx) {
  Vec<Q> out(v.size(), Q(0));
  for (int i : idx) out[i] = v[i];
  return out;
}

bool is_skew_wrt(const Mat<Q>& A, const Mat<Q>& B) { return is_zero_mat(transpose(A) * B + B * A); }

// Columns k_1..k_r, xi of h.
Mat<Q> h_frame(const SubSymQuadruple& q) {
  auto cols = q.k_basis;
  cols.push_back(q.xi);
  return columns_of(cols, q.L.dim());
}

}  // namespace

Mat<Q> SubSymQuadruple::involution() const {
  Mat<Q> s(L.dim(), L.dim());
  for (int i : p_idx) s(i, i) = -1;
  for (int i : h_idx) s(i, i) = 1;
  return s;
}

bool QuadrupleReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string QuadrupleReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name + ": " + c.witness;
  return "";
}

Mat<Q> ad_on_p(const SubSymQuadruple& q, const Vec<Q>& x) {
  const int d = q.p_dim();
  Mat<Q> A(d, d);
  for (int c = 0; c < d; ++c) {
    Vec<Q> b = q.L.bracket(x, unit_vec(q.L.dim(), q.p_idx[c]));
    for (int r = 0; r < d; ++r) A(r, c) = b[q.p_idx[r]];
  }
  return A;
}

Mat<Q> theta_form(const SubSymQuadruple& q) {
  const int d = q.p_dim(), n = q.L.dim();
  Mat<Q> H = h_frame(q);
  Mat<Q> T(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      Vec<Q> v = restrict_to(q.L.bracket_basis(q.p_idx[a], q.p_idx[b]), q.h_idx);
      Vec<Q> c = coords_in(H, v);
      T(a, b) = c.back();
      T(b, a) = -c.back();
    }
  (void)n;
  return T;
}

QuadrupleReport validate_quadruple(const SubSymQuadruple& q) {
  QuadrupleReport rep;
  const auto& L = q.L;
  const int n = L.dim(), d = q.p_dim();

  auto part = check("involution splits g into h + p");
  {
    std::vector<int> seen(n, 0);
    for (int i : q.p_idx) seen[i]++;
    for (int i : q.h_idx) seen[i]++;
    for (int i = 0; i < n; ++i)
      if (seen[i] != 1) fail(part, "basis vector " + std::to_string(i));
    if (d == 0) fail(part, "p is empty");
  }
  rep.checks.push_back(part);
  if (!part.pass) return rep;

  Mat<Q> s = q.involution();
  auto aut = check("s is an automorphism");
  auto hp = check("[h,p] in p");
  auto pp = check("[p,p] in h");
  for (int i = 0; i < n && aut.pass; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<Q> b = L.bracket_basis(i, j);
      Vec<Q> lhs(n), rhs = b;
      for (int k = 0; k < n; ++k) lhs[k] = s(k, k) * b[k];
      Q sign = s(i, i) * s(j, j);
      for (auto& x : rhs) x *= sign;
      if (lhs != rhs) {
        fail(aut, pair_str(L, i, j));
        break;
      }
    }
  for (int a : q.p_idx) {
    for (int h : q.h_idx)
      if (!supported_on(L.bracket_basis(h, a), q.p_idx)) fail(hp, pair_str(L, h, a));
    for (int b : q.p_idx)
      if (!supported_on(L.bracket_basis(a, b), q.h_idx)) fail(pp, pair_str(L, a, b));
  }
  rep.checks.push_back(aut);
  rep.checks.push_back(hp);
  rep.checks.push_back(pp);

  auto kin = check("k is a codimension-one subalgebra of h");
  Subspace<Q> ks(n), hs(n);
  for (int i : q.h_idx) hs.add(unit_vec(n, i));
  for (size_t i = 0; i < q.k_basis.size(); ++i) {
    if (!hs.contains(q.k_basis[i])) fail(kin, "k_" + std::to_string(i) + " not in h");
    if (!ks.add(q.k_basis[i])) fail(kin, "k basis is dependent");
  }
  if (!hs.contains(q.xi)) fail(kin, "xi not in h");
  if (ks.contains(q.xi)) fail(kin, "xi lies in k");
  if (ks.dim() + 1 != hs.dim()) fail(kin, "dim h - dim k = " + std::to_string(hs.dim() - ks.dim()));
  for (size_t i = 0; i < q.k_basis.size() && kin.pass; ++i)
    for (size_t j = i + 1; j < q.k_basis.size(); ++j)
      if (!ks.contains(L.bracket(q.k_basis[i], q.k_basis[j]))) {
        fail(kin, "[k_" + std::to_string(i) + ", k_" + std::to_string(j) + "] not in k");
        break;
      }
  rep.checks.push_back(kin);

  auto ideal = check("k contains no nonzero ideal of g");
  if (!q.k_basis.empty()) {
    auto I = largest_ideal_in(L, q.k_basis);
    if (I.dim() > 0) fail(ideal, "ideal of dimension " + std::to_string(I.dim()));
  }
  rep.checks.push_back(ideal);

  auto pd = check("B is symmetric positive definite");
  if (q.B.r != d || q.B.c != d) fail(pd, "B has wrong size");
  else if (!is_zero_mat(q.B - transpose(q.B))) fail(pd, "B not symmetric");
  else if (inertia(q.B).pos != d) fail(pd, "B not positive definite");
  rep.checks.push_back(pd);

  auto inv = check("B is ad_k-invariant");
  if (pd.pass)
    for (size_t i = 0; i < q.k_basis.size(); ++i)
      if (!is_skew_wrt(ad_on_p(q, q.k_basis[i]), q.B)) {
        fail(inv, "k_" + std::to_string(i));
        break;
      }
  rep.checks.push_back(inv);

  auto th = check("Theta is nontrivial");
  if (kin.pass && pp.pass) {
    if (is_zero_mat(theta_form(q))) fail(th, "Theta = 0");
  } else {
    fail(th, "not evaluated");
  }
  rep.checks.push_back(th);

  if (pp.pass) {
    Subspace<Q> br(n);
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) br.add(L.bracket_basis(q.p_idx[a], q.p_idx[b]));
    rep.transvection = br.same_span(hs);
  }
  rep.sub_torsion_free = pd.pass && inv.pass && is_skew_wrt(ad_on_p(q, q.xi), q.B);
  return rep;
}

SubSymQuadruple transvection_restrict(const SubSymQuadruple& q) {
  auto rep = validate_quadruple(q);
  if (!rep.ok()) throw Error(Err::INVALID_INPUT, "quadruple is not valid: " + rep.first_failure());
  if (rep.transvection) return q;
  const int n = q.L.dim(), d = q.p_dim();

  std::vector<Vec<Q>> pp;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) pp.push_back(q.L.bracket_basis(q.p_idx[a], q.p_idx[b]));
  auto hh = subalgebra_closure(q.L, pp);
  const auto hb = hh.basis;
  const int r = int(hb.size());

  // k-hat = k cap h-hat
  const int nk = int(q.k_basis.size());
  Mat<Q> sys(n, nk + r);
  for (int j = 0; j < nk; ++j)
    for (int i = 0; i < n; ++i) sys(i, j) = q.k_basis[j][i];
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < n; ++i) sys(i, nk + j) = -hb[j][i];
  auto ns = rank_nullspace(sys).nullspace;
  std::vector<Vec<Q>> khat;
  for (const auto& c : ns.rows()) {
    Vec<Q> v(n, Q(0));
    for (int j = 0; j < nk; ++j)
      if (sgn(c[j]))
        for (int i = 0; i < n; ++i) v[i] += c[j] * q.k_basis[j][i];
    khat.push_back(v);
  }
  if (int(khat.size()) + 1 != r) throw Error(Err::INVALID_INPUT, "[p,p] does not meet k in codimension one");

  Vec<Q> xhat;
  if (hh.span.contains(q.xi)) {
    xhat = q.xi;
  } else {
    Subspace<Q> ks(n);
    for (const auto& v : khat) ks.add(v);
    for (const auto& v : hb)
      if (!ks.contains(v)) {
        xhat = v;
        break;
      }
  }

  // new basis: p vectors, then h-hat
  std::vector<Vec<Q>> basis;
  for (int a : q.p_idx) basis.push_back(unit_vec(n, a));
  for (const auto& v : hb) basis.push_back(v);
  Mat<Q> P = columns_of(basis, n);
  const int m = int(basis.size());
  SubSymQuadruple out;
  out.L = LieAlgebraTable(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vec<Q> c = coords_in(P, q.L.bracket(basis[i], basis[j]));
      for (int k = 0; k < m; ++k) out.L.set(i, j, k, c[k]);
    }
  for (int a = 0; a < d; ++a) {
    out.p_idx.push_back(a);
    if (q.p_idx[a] < int(q.L.labels.size())) out.L.labels.push_back(q.L.labels[q.p_idx[a]]);
  }
  for (int j = 0; j < r; ++j) {
    out.h_idx.push_back(d + j);
    if (!out.L.labels.empty()) out.L.labels.push_back("h" + std::to_string(j + 1));
  }
  for (const auto& v : khat) out.k_basis.push_back(coords_in(P, v));
  out.xi = coords_in(P, xhat);
  out.B = q.B;
  out.name = q.name + "/transvection";
  auto rep2 = validate_quadruple(out);
  if (!rep2.ok()) throw Error(Err::INVALID_INPUT, "restricted quadruple invalid: " + rep2.first_failure());
  return out;
}

SubSymQuadruple from_local_data(const LocalData& ld) {
  const int d = ld.dim_p;
  if (d < 2) throw Error(Err::INVALID_INPUT, "dim_p must be at least 2");
  if (int(ld.R_W.size()) != d * d) throw Error(Err::INVALID_INPUT, "R_W needs dim_p^2 entries");
  auto square = [&](const Mat<Q>& M) { return M.r == d && M.c == d; };
  for (const auto& M : ld.R_W)
    if (!square(M)) throw Error(Err::INVALID_INPUT, "R_W entry has wrong size");
  if (!square(ld.Theta) || !square(ld.N_W)) throw Error(Err::INVALID_INPUT, "Theta or N_W has wrong size");
  for (const auto& K : ld.k_span)
    if (!square(K)) throw Error(Err::INVALID_INPUT, "k_span entry has wrong size");
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (!is_zero_mat(ld.R_W[a * d + b] + ld.R_W[b * d + a]))
        throw Error(Err::INVALID_INPUT, "R_W is not antisymmetric");
  if (!is_zero_mat(ld.Theta + transpose(ld.Theta))) throw Error(Err::INVALID_INPUT, "Theta is not antisymmetric");
  if (rank_nullspace(ld.Theta).rank != d) throw Error(Err::INVALID_INPUT, "Theta is degenerate");

  const int r = int(ld.k_span.size());
  auto ks = span_of(ld.k_span, d);
  if (ks.dim() != r) throw Error(Err::INVALID_INPUT, "k_span is linearly dependent");
  std::vector<Mat<Q>> hmats = ld.k_span;
  const bool xi_acts = !is_zero_mat(ld.N_W);
  if (xi_acts) {
    if (ks.contains(flatten(ld.N_W))) throw Error(Err::INVALID_INPUT, "N_W lies in k_span");
    hmats.push_back(ld.N_W);
  }
  std::vector<Vec<Q>> hflat;
  for (const auto& M : hmats) hflat.push_back(flatten(M));
  Mat<Q> HP = columns_of(hflat, d * d);
  auto h_coords = [&](const Mat<Q>& M, const char* what) {
    if (hmats.empty()) {
      if (!is_zero_mat(M)) throw Error(Err::VALIDATION_FAIL, std::string(what) + " outside span(k, N_W)");
      return Vec<Q>{};
    }
    try {
      return coords_in(HP, flatten(M));
    } catch (const Error&) {
      throw Error(Err::VALIDATION_FAIL, std::string(what) + " outside span(k, N_W)");
    }
  };

  const int n = d + r + 1, xi = d + r;
  LieAlgebraTable L(n);
  for (int a = 0; a < d; ++a) L.labels.push_back("e" + std::to_string(a + 1));
  for (int i = 0; i < r; ++i) L.labels.push_back("k" + std::to_string(i + 1));
  L.labels.push_back("xi");

  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      Vec<Q> c = h_coords(ld.R_W[a * d + b], "R_W");
      for (int i = 0; i < r; ++i) L.set(a, b, d + i, -c[i]);
      Q cx = ld.Theta(a, b);
      if (xi_acts) cx -= c[r];
      L.set(a, b, xi, cx);
    }
  for (int a = 0; a < d; ++a) {
    for (int i = 0; i < r; ++i)
      for (int c = 0; c < d; ++c) L.set(d + i, a, c, ld.k_span[i](c, a));
    for (int c = 0; c < d; ++c) L.set(xi, a, c, ld.N_W(c, a));
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      Mat<Q> C = commutator(ld.k_span[i], ld.k_span[j]);
      if (!ks.contains(flatten(C))) throw Error(Err::VALIDATION_FAIL, "k_span is not a subalgebra");
      Vec<Q> c = h_coords(C, "[k,k]");
      for (int l = 0; l < r; ++l) L.set(d + i, d + j, d + l, c[l]);
    }
    Vec<Q> c = h_coords(commutator(ld.N_W, ld.k_span[i]), "[N_W,k]");
    for (int l = 0; l < r; ++l) L.set(xi, d + i, d + l, c[l]);
    if (xi_acts) L.set(xi, d + i, xi, c[r]);
  }

  auto jr = jacobi_check(L);
  if (!jr.ok()) {
    std::ostringstream os;
    os << "Jacobi identity fails on (" << L.labels[jr.i] << ", " << L.labels[jr.j] << ", " << L.labels[jr.k]
       << "), residual " << jr.residual;
    throw Error(Err::JACOBI_FAIL, os.str());
  }

  SubSymQuadruple q;
  q.L = std::move(L);
  for (int a = 0; a < d; ++a) q.p_idx.push_back(a);
  for (int i = d; i < n; ++i) q.h_idx.push_back(i);
  for (int i = 0; i < r; ++i) q.k_basis.push_back(unit_vec(n, d + i));
  q.xi = unit_vec(n, xi);
  q.B = ld.B ? *ld.B : Mat<Q>::identity(d);
  q.name = ld.name;
  auto rep = validate_quadruple(q);
  if (!rep.ok()) throw Error(Err::VALIDATION_FAIL, rep.first_failure());
  return q;
}

LocalData local_data_of(const SubSymQuadruple& q) {
  const int d = q.p_dim();
  LocalData ld;
  ld.dim_p = d;
  ld.name = q.name;
  ld.B = q.B;
  ld.Theta = theta_form(q);
  ld.N_W = ad_on_p(q, q.xi);
  for (const auto& k : q.k_basis) ld.k_span.push_back(ad_on_p(q, k));
  ld.R_W.assign(size_t(d) * d, Mat<Q>(d, d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (a == b) continue;
      Vec<Q> v = q.L.bracket_basis(q.p_idx[a], q.p_idx[b]);
      for (size_t k = 0; k < v.size(); ++k) v[k] -= ld.Theta(a, b) * q.xi[k];
      ld.R_W[a * d + b] = scale(ad_on_p(q, v), Q(-1));
    }
  return ld;
}

HolonomyPair holonomy_pair(const SubSymQuadruple& q) {
  const int d = q.p_dim();
  HolonomyPair hp;
  hp.ad_xi = ad_on_p(q, q.xi);
  Mat<Q> tau_form = scale(transpose(hp.ad_xi) * q.B + q.B * hp.ad_xi, Q(-1, 2));
  hp.tau_star = mat_inverse(q.B) * tau_form;
  hp.A_xi = hp.ad_xi + hp.tau_star;
  std::vector<Mat<Q>> adk;
  for (const auto& k : q.k_basis) adk.push_back(ad_on_p(q, k));
  auto hs = span_of(adk, d);
  hp.horizontal = basis_matrices(hs, d);
  adk.push_back(hp.A_xi);
  auto as = span_of(adk, d);
  hp.adapted = basis_matrices(as, d);
  hp.horizontal_dim = hs.dim();
  hp.adapted_dim = as.dim();
  if (hp.adapted_dim - hp.horizontal_dim > 1)
    throw Error(Err::INTERNAL, "adapted holonomy exceeds horizontal by more than one");
  return hp;
}

std::vector<Mat<Q>> adapted_curvature(const SubSymQuadruple& q, const HolonomyPair& hp) {
  const int d = q.p_dim();
  Mat<Q> T = theta_form(q);
  std::vector<Mat<Q>> R(size_t(d) * d, Mat<Q>(d, d));
  // -ad_{[X,Y]} + Theta (ad_xi - A_xi) = -ad_{[X,Y]_k} - Theta A_xi
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      Mat<Q> M = scale(ad_on_p(q, q.L.bracket_basis(q.p_idx[a], q.p_idx[b])), Q(-1));
      if (sgn(T(a, b))) M = M - scale(hp.tau_star, T(a, b));
      R[a * d + b] = M;
      R[b * d + a] = scale(M, Q(-1));
    }
  return R;
}

Q adapted_scalar_curvature(const SubSymQuadruple& q, const HolonomyPair& hp) {
  const int d = q.p_dim();
  auto R = adapted_curvature(q, hp);
  Mat<Q> Binv = mat_inverse(q.B);
  Q scal = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (sgn(Binv(a, b)) == 0) continue;
      Q ric = 0;  // tr(Z -> R(Z, e_a) e_b)
      for (int c = 0; c < d; ++c) ric += R[c * d + a](c, b);
      scal += Binv(a, b) * ric;
    }
  return scal;
}

}  // namespace holab
