#include <algorithm>
#include <bit>
#include <map>

#include "holab/liealg.hpp"
#include "holab/spinrep.hpp"

namespace holab {

// ---- sparse operators ----

SpOp SpOp::identity(int n) {
  SpOp I(n);
  for (int i = 0; i < n; ++i) I.add(i, i, QC(1));
  return I;
}

void SpOp::add(int row, int col, const QC& v) {
  if (holab::is_zero(v)) return;
  auto& c = cols_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    it->second += v;
    if (holab::is_zero(it->second)) c.erase(it);
  } else {
    c.insert(it, {row, v});
  }
}

SpOp SpOp::operator*(const SpOp& o) const {
  SpOp out(n());
  for (int j = 0; j < n(); ++j)
    for (const auto& [k, v] : o.cols_[j])
      for (const auto& [i, u] : cols_[k]) out.add(i, j, u * v);
  return out;
}

SpOp SpOp::operator+(const SpOp& o) const {
  SpOp out = *this;
  for (int j = 0; j < n(); ++j)
    for (const auto& [i, v] : o.cols_[j]) out.add(i, j, v);
  return out;
}

SpOp SpOp::operator-(const SpOp& o) const { return *this + o.scaled(QC(-1)); }

SpOp SpOp::scaled(const QC& s) const {
  SpOp out(n());
  for (int j = 0; j < n(); ++j)
    for (const auto& [i, v] : cols_[j]) out.add(i, j, v * s);
  return out;
}

bool SpOp::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

Mat<QC> SpOp::dense() const {
  Mat<QC> M(n(), n());
  for (int j = 0; j < n(); ++j)
    for (const auto& [i, v] : cols_[j]) M(i, j) = v;
  return M;
}

// ---- spinor module ----

namespace {

QC sign_of(int s) { return QC(s); }

// (-1)^{#bits of S below k}
int fermion_sign(int S, int k) { return std::popcount(unsigned(S) & ((1u << k) - 1)) % 2 ? -1 : 1; }

SpOp creation(int m, int k) {
  const int n = 1 << m;
  SpOp A(n);
  for (int S = 0; S < n; ++S)
    if (!(S & (1 << k))) A.add(S | (1 << k), S, sign_of(fermion_sign(S, k)));
  return A;
}

SpOp annihilation(int m, int k) {
  const int n = 1 << m;
  SpOp A(n);
  for (int S = 0; S < n; ++S)
    if (S & (1 << k)) A.add(S ^ (1 << k), S, sign_of(fermion_sign(S, k)));
  return A;
}

SpOp commutator(const SpOp& a, const SpOp& b) { return a * b - b * a; }

}  // namespace

int SpinRep::pair_index(int a, int b) const {
  const int n = 2 * m;
  if (a > b) std::swap(a, b);
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

SpOp SpinRep::rho(const Mat<Q>& A) const {
  const int n = 2 * m;
  if (A.r != n || A.c != n) throw Error(Err::INVALID_INPUT, "matrix has wrong size for so(2m)");
  if (!is_zero_mat(A + transpose(A))) throw Error(Err::INVALID_INPUT, "matrix is not skew");
  SpOp out(dim);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (sgn(A(b, a))) out = out + biv[pair_index(a, b)].scaled(QC(A(b, a)));
  return out;
}

SpOp SpinRep::kaehler() const {
  SpOp out(dim);
  for (int k = 0; k < m; ++k) out = out + gamma[k] * gamma[m + k];
  return out;
}

SpinSelfCheck spin_self_check(const SpinRep& rep) {
  SpinSelfCheck c{true, true, true};
  const int n = 2 * rep.m;
  const SpOp I = SpOp::identity(rep.dim);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      SpOp ac = rep.gamma[a] * rep.gamma[b] + rep.gamma[b] * rep.gamma[a];
      if (!(a == b ? ac + I.scaled(QC(2)) : ac).is_zero()) c.clifford = false;
    }
  // [rho(e_a ^ e_b), gamma_c] = gamma((e_a ^ e_b) e_c)
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const SpOp& R = rep.biv[rep.pair_index(a, b)];
      for (int cc = 0; cc < n; ++cc) {
        SpOp want(rep.dim);
        if (cc == a) want = rep.gamma[b];
        if (cc == b) want = rep.gamma[a].scaled(QC(-1));
        if (!(commutator(R, rep.gamma[cc]) - want).is_zero()) c.equivariant = false;
      }
    }
  // rho([W_p, W_q]) = [rho(W_p), rho(W_q)], W_ab = e_b e_a^T - e_a e_b^T
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
  auto entries = [](int a, int b) {
    return std::vector<std::tuple<int, int, int>>{{b, a, 1}, {a, b, -1}};
  };
  for (size_t p = 0; p < pairs.size() && c.homomorphism; ++p)
    for (size_t q = p + 1; q < pairs.size(); ++q) {
      auto [a, b] = pairs[p];
      auto [cc, d] = pairs[q];
      if (a != cc && a != d && b != cc && b != d) continue;  // commuting, both sides vanish
      std::map<std::pair<int, int>, int> C;
      for (auto [r1, c1, v1] : entries(a, b))
        for (auto [r2, c2, v2] : entries(cc, d)) {
          if (c1 == r2) C[{r1, c2}] += v1 * v2;
          if (c2 == r1) C[{r2, c1}] -= v1 * v2;
        }
      SpOp lhs(rep.dim);
      for (const auto& [rc, v] : C)
        if (rc.first > rc.second && v) lhs = lhs + rep.biv[rep.pair_index(rc.second, rc.first)].scaled(QC(v));
      SpOp rhs = commutator(rep.biv[p], rep.biv[q]);
      if (!(lhs - rhs).is_zero()) {
        c.homomorphism = false;
        break;
      }
    }
  return c;
}

SpinRep build_spin_rep(int m) {
  if (m < 2 || m > 7) throw Error(Err::SIZE_GUARD, "spin representation supports 2 <= m <= 7");
  SpinRep rep;
  rep.m = m;
  rep.dim = 1 << m;
  std::vector<SpOp> g(2 * m);
  for (int k = 0; k < m; ++k) {
    SpOp a = annihilation(m, k), ad = creation(m, k);
    g[k] = a - ad;
    g[m + k] = (a + ad).scaled(QC::i());
  }
  rep.gamma = g;
  const int n = 2 * m;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) rep.biv.push_back(commutator(g[a], g[b]).scaled(QC(Q(1, 4))));
  auto c = spin_self_check(rep);
  if (!c.clifford || !c.equivariant || !c.homomorphism)
    throw Error(Err::INTERNAL, "spin representation failed its self-check");
  return rep;
}

WeightDecomposition weight_decomposition(const SpinRep& rep) {
  const int m = rep.m;
  SpOp K = rep.kaehler();
  WeightDecomposition wd;
  wd.levels.resize(m + 1);
  std::vector<bool> seen(m + 1, false);
  bool diagonal = true;
  for (int S = 0; S < rep.dim; ++S) {
    const auto& col = K.col(S);
    QC ev;
    if (col.size() > 1 || (col.size() == 1 && col[0].first != S)) diagonal = false;
    if (col.size() == 1) ev = col[0].second;
    int k = std::popcount(unsigned(S));
    auto& L = wd.levels[k];
    if (!seen[k]) {
      seen[k] = true;
      L.k = k;
      L.kaehler_eigenvalue = ev;
      L.rho_J_eigenvalue = ev * QC(Q(1, 2));
    } else if (L.kaehler_eigenvalue != ev) {
      diagonal = false;
    }
    L.multiplicity++;
    L.basis.push_back(S);
  }
  if (!diagonal) return wd;
  for (int sigma : {1, -1}) {
    bool ok = true;
    for (const auto& L : wd.levels)
      if (L.kaehler_eigenvalue != QC(Q(0), Q(sigma * (m - 2 * L.k)))) ok = false;
    if (ok) {
      wd.sigma = sigma;
      break;
    }
  }
  return wd;
}

// ---- embeddings ----

const char* embed_label_name(EmbedLabel l) {
  switch (l) {
    case EmbedLabel::U: return "U";
    case EmbedLabel::SU: return "SU";
    case EmbedLabel::SO_LAGRANGIAN: return "SO_LAGRANGIAN";
    case EmbedLabel::SO_PLUS_U1: return "SO_PLUS_U1";
    case EmbedLabel::SP: return "SP";
    case EmbedLabel::SP_PLUS_U1: return "SP_PLUS_U1";
  }
  return "?";
}

EmbedLabel embed_label_from_name(const std::string& s) {
  for (auto l : {EmbedLabel::U, EmbedLabel::SU, EmbedLabel::SO_LAGRANGIAN, EmbedLabel::SO_PLUS_U1, EmbedLabel::SP,
                 EmbedLabel::SP_PLUS_U1})
    if (s == embed_label_name(l)) return l;
  static const std::pair<const char*, EmbedLabel> short_names[] = {
      {"u", EmbedLabel::U},           {"su", EmbedLabel::SU},         {"so", EmbedLabel::SO_LAGRANGIAN},
      {"so+u1", EmbedLabel::SO_PLUS_U1}, {"sp", EmbedLabel::SP}, {"sp+u1", EmbedLabel::SP_PLUS_U1}};
  for (const auto& [n, l] : short_names)
    if (s == n) return l;
  throw Error(Err::LABEL_DOMAIN, "unknown algebra label '" + s + "'");
}

namespace {

using MQ = Mat<Q>;

MQ blocks(const MQ& A, const MQ& B, const MQ& C, const MQ& D) {
  const int m = A.r;
  MQ X(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      X(i, j) = A(i, j);
      X(i, m + j) = B(i, j);
      X(m + i, j) = C(i, j);
      X(m + i, m + j) = D(i, j);
    }
  return X;
}

MQ unit(int m, int i, int j) {
  MQ E(m, m);
  E(i, j) = 1;
  return E;
}

MQ complex_J(int m) {
  MQ Z(m, m);
  return blocks(Z, scale(MQ::identity(m), Q(-1)), MQ::identity(m), Z);
}

// Second complex structure anticommuting with J, pairing e_{2p} with e_{2p+1}.
MQ quaternion_K(int m) {
  MQ K(2 * m, 2 * m);
  for (int p = 0; 2 * p + 1 < m; ++p) {
    int a = 2 * p, b = 2 * p + 1;
    K(b, a) = 1;
    K(a, b) = -1;
    K(m + b, m + a) = -1;
    K(m + a, m + b) = 1;
  }
  return K;
}

std::vector<MQ> so_basis(int n) {
  std::vector<MQ> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.push_back(unit(n, b, a) - unit(n, a, b));
  return out;
}

std::vector<MQ> skew_commutant(const std::vector<MQ>& ops, int n) {
  auto W = so_basis(n);
  std::vector<Vec<Q>> cols;
  for (const auto& w : W) {
    Vec<Q> v;
    for (const auto& O : ops) {
      auto f = flatten(commutator(w, O));
      v.insert(v.end(), f.begin(), f.end());
    }
    cols.push_back(v);
  }
  MQ sys = columns_of(cols, int(cols[0].size()));
  auto ns = rank_nullspace(sys).nullspace;
  std::vector<MQ> out;
  for (const auto& c : ns.rows()) {
    MQ X(n, n);
    for (size_t k = 0; k < W.size(); ++k)
      if (sgn(c[k])) X = X + scale(W[k], c[k]);
    out.push_back(X);
  }
  return out;
}

}  // namespace

std::vector<Mat<Q>> embed_algebra(EmbedLabel l, int m) {
  if (m < 1) throw Error(Err::LABEL_DOMAIN, "m must be positive");
  const MQ Z(m, m);
  std::vector<MQ> out;
  auto add_so = [&] {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        MQ A = unit(m, i, j) - unit(m, j, i);
        out.push_back(blocks(A, Z, Z, A));
      }
  };
  auto add_sym = [&](bool traceless) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        MQ B = unit(m, i, j) + unit(m, j, i);
        out.push_back(blocks(Z, B, scale(B, Q(-1)), Z));
      }
    if (traceless) {
      for (int i = 0; i + 1 < m; ++i) {
        MQ B = unit(m, i, i) - unit(m, i + 1, i + 1);
        out.push_back(blocks(Z, B, scale(B, Q(-1)), Z));
      }
    } else {
      for (int i = 0; i < m; ++i) out.push_back(blocks(Z, unit(m, i, i), scale(unit(m, i, i), Q(-1)), Z));
    }
  };
  switch (l) {
    case EmbedLabel::U:
      add_so();
      add_sym(false);
      break;
    case EmbedLabel::SU:
      add_so();
      add_sym(true);
      break;
    case EmbedLabel::SO_LAGRANGIAN: add_so(); break;
    case EmbedLabel::SO_PLUS_U1:
      add_so();
      out.push_back(complex_J(m));
      break;
    case EmbedLabel::SP:
    case EmbedLabel::SP_PLUS_U1: {
      if (m % 2) throw Error(Err::LABEL_DOMAIN, "sp needs even m");
      const int k = m / 2;
      out = skew_commutant({complex_J(m), quaternion_K(m)}, 2 * m);
      if (int(out.size()) != k * (2 * k + 1)) throw Error(Err::INTERNAL, "sp(k) commutant has wrong dimension");
      if (l == EmbedLabel::SP_PLUS_U1) out.push_back(complex_J(m));
      break;
    }
  }
  return out;
}

// ---- annihilator ----

Annihilator annihilator(const SpinRep& rep, const std::vector<Mat<Q>>& h) {
  const int n = rep.dim;
  Annihilator out;
  std::vector<SpOp> ops;
  for (const auto& H : h) {
    SpOp r = rep.rho(H);
    if (!r.is_zero()) ops.push_back(std::move(r));
  }
  if (ops.empty()) {
    for (int i = 0; i < n; ++i) {
      Vec<QC> v(n, QC(0));
      v[i] = QC(1);
      out.basis.push_back(v);
    }
  } else {
    Mat<QC> sys(int(ops.size()) * n, n);
    for (size_t t = 0; t < ops.size(); ++t)
      for (int j = 0; j < n; ++j)
        for (const auto& [i, v] : ops[t].col(j)) sys(int(t) * n + i, j) = v;
    auto ns = rank_nullspace(sys).nullspace;
    for (const auto& r : ns.rows()) out.basis.push_back(r);
  }
  out.dim = int(out.basis.size());
  out.profile.assign(rep.m + 1, 0);
  for (int k = 0; k <= rep.m; ++k) {
    Subspace<QC> proj(n);
    for (const auto& v : out.basis) {
      Vec<QC> p(n, QC(0));
      for (int S = 0; S < n; ++S)
        if (std::popcount(unsigned(S)) == k) p[S] = v[S];
      proj.add(p);
    }
    out.profile[k] = proj.dim();
  }
  return out;
}

// ---- parallel spinor verdicts ----

SpinorVerdict parallel_spinor_report(const SpinorQuery& q) {
  SpinorVerdict v;
  const HolLabel L = q.horizontal;
  if (L == HolLabel::OTHER && !q.algebra)
    throw Error(Err::UNSUPPORTED_LABEL, "no theorem case for an unclassified holonomy algebra");

  auto in_case1_list = [](HolLabel l) { return l == HolLabel::SU_M || l == HolLabel::SO_M_LAGRANGIAN; };
  auto never = [](HolLabel l) { return l == HolLabel::U_M || l == HolLabel::SO_M_PLUS_U1; };

  if (L == HolLabel::OTHER) {
    v.detail = "unclassified algebra: direct annihilator only";
  } else if (q.tau_nonzero) {
    if (in_case1_list(L)) {
      v.theorem_case = 1;
      v.predicted = true;
      v.expected_dim = 2;
    } else if (never(L)) {
      v.predicted = false;
    } else {
      v.detail = "label outside the torsion classification";
    }
  } else if (!q.adapted_differs) {
    v.detail = "adapted holonomy not supplied; case 2/3 undecided";
  } else if (*q.adapted_differs) {
    if (in_case1_list(L)) {
      v.theorem_case = 2;
      v.predicted = true;
      v.expected_dim = 2;
      v.detail = "hol contained in su(D, g, J)";
    } else if (never(L)) {
      v.predicted = false;
    } else {
      v.detail = "trivial horizontal holonomy is not covered by case 2";
    }
  } else {
    if (L == HolLabel::TRIVIAL || L == HolLabel::SU_M) {
      v.theorem_case = 3;
      v.predicted = true;
    } else if (never(L)) {
      v.predicted = false;
    } else {
      v.detail = "not a Riemannian holonomy algebra; case 3 undecided";
    }
  }

  if (q.m < 2 || q.m > 7) {
    v.detail += (v.detail.empty() ? "" : "; ") + std::string("m outside the spinor size guard");
    return v;
  }
  std::vector<Mat<Q>> h;
  if (q.algebra) {
    bool skew = true;
    for (const auto& H : *q.algebra)
      if (H.r != 2 * q.m || !is_zero_mat(H + transpose(H))) skew = false;
    if (!skew) {
      v.detail += (v.detail.empty() ? "" : "; ") + std::string("algebra not in an orthonormal frame");
      return v;
    }
    h = *q.algebra;
    v.computed_from = "algebra";
  } else {
    switch (L) {
      case HolLabel::SU_M: h = embed_algebra(EmbedLabel::SU, q.m); break;
      case HolLabel::U_M: h = embed_algebra(EmbedLabel::U, q.m); break;
      case HolLabel::SO_M_LAGRANGIAN: h = embed_algebra(EmbedLabel::SO_LAGRANGIAN, q.m); break;
      case HolLabel::SO_M_PLUS_U1: h = embed_algebra(EmbedLabel::SO_PLUS_U1, q.m); break;
      default: break;
    }
    v.computed_from = "model embedding";
  }
  auto rep = build_spin_rep(q.m);
  v.computed_dim = annihilator(rep, h).dim;
  if (v.predicted && *v.predicted != (*v.computed_dim > 0)) v.consistent = false;
  if (v.expected_dim && *v.expected_dim != *v.computed_dim) v.consistent = false;
  return v;
}

}  // namespace holab
