#include <algorithm>
#include <numeric>

#include "holab/numkit.hpp"

namespace holab {

namespace {

template <class T>
bool nz(const T& x, double tol) {
  return !is_zero(x, tol);
}

double mag(double x) { return std::fabs(x); }

template <class T>
constexpr bool is_float = std::is_same_v<T, double>;

inline bool is_zero_ring(const mpz_class& x) { return sgn(x) == 0; }
inline bool is_zero_ring(const QC& x) { return is_zero(x); }
inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline QC exact_div(const QC& a, const QC& b) { return a / b; }

// Fraction-free forward elimination in a ring R with exact division.
// On return rows [0, rank) are in echelon form with the listed pivot columns.
template <class R>
int bareiss(std::vector<std::vector<R>>& m, int cols, std::vector<int>& piv) {
  int rows = int(m.size());
  int rank = 0;
  R prev(1);
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (!is_zero_ring(m[i][col])) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    const R& pv = m[rank][col];
    for (int i = rank + 1; i < rows; ++i) {
      R f = m[i][col];
      for (int j = col + 1; j < cols; ++j) {
        R t = pv * m[i][j] - f * m[rank][j];
        m[i][j] = exact_div(t, prev);
      }
      m[i][col] = R(0);
    }
    prev = m[rank][col];
    piv.push_back(col);
    ++rank;
  }
  return rank;
}


// Echelon rows (any scaling) to reduced form over the field.
template <class T>
RRef<T> finish_rref(std::vector<Vec<T>> rows, const std::vector<int>& piv, int cols) {
  int rank = int(piv.size());
  for (int k = 0; k < rank; ++k) {
    T inv = T(1) / rows[k][piv[k]];
    for (auto& v : rows[k]) v *= inv;
  }
  for (int k = rank - 1; k >= 0; --k)
    for (int i = 0; i < k; ++i) {
      T f = rows[i][piv[k]];
      if (is_zero(f)) continue;
      for (int j = piv[k]; j < cols; ++j) rows[i][j] -= f * rows[k][j];
    }
  RRef<T> out;
  out.rank = rank;
  out.pivots = piv;
  out.rows = Mat<T>(rank, cols);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < cols; ++j) out.rows(i, j) = rows[i][j];
  return out;
}

}  // namespace

template <>
RRef<Q> rref(const Mat<Q>& m, double) {
  std::vector<std::vector<mpz_class>> z(m.r, std::vector<mpz_class>(m.c));
  for (int i = 0; i < m.r; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.c; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < m.c; ++j) z[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  std::vector<int> piv;
  int rank = bareiss(z, m.c, piv);
  std::vector<Vec<Q>> rows(rank, Vec<Q>(m.c));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < m.c; ++j) rows[i][j] = Q(z[i][j]);
  return finish_rref(std::move(rows), piv, m.c);
}

template <>
RRef<QC> rref(const Mat<QC>& m, double) {
  std::vector<std::vector<QC>> z(m.r, std::vector<QC>(m.c));
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.c; ++j) z[i][j] = m(i, j);
  std::vector<int> piv;
  int rank = bareiss(z, m.c, piv);
  z.resize(rank);
  return finish_rref(std::move(z), piv, m.c);
}

template <>
RRef<double> rref(const Mat<double>& m, double tol) {
  Mat<double> a = m;
  std::vector<int> piv;
  int rank = 0;
  for (int col = 0; col < a.c && rank < a.r; ++col) {
    int p = rank;
    for (int i = rank + 1; i < a.r; ++i)
      if (std::fabs(a(i, col)) > std::fabs(a(p, col))) p = i;
    if (std::fabs(a(p, col)) <= tol) {
      for (int i = rank; i < a.r; ++i) a(i, col) = 0;
      continue;
    }
    for (int j = 0; j < a.c; ++j) std::swap(a(p, j), a(rank, j));
    double inv = 1.0 / a(rank, col);
    for (int j = 0; j < a.c; ++j) a(rank, j) *= inv;
    for (int i = 0; i < a.r; ++i) {
      if (i == rank) continue;
      double f = a(i, col);
      if (f == 0) continue;
      for (int j = 0; j < a.c; ++j) a(i, j) -= f * a(rank, j);
    }
    piv.push_back(col);
    ++rank;
  }
  RRef<double> out;
  out.rank = rank;
  out.pivots = piv;
  out.rows = Mat<double>(rank, a.c);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < a.c; ++j) out.rows(i, j) = a(i, j);
  return out;
}

// ---- Subspace

template <class T>
Vec<T> Subspace<T>::reduce(Vec<T> v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    T f = v[piv_[k]];
    if (is_zero(f, 0.0)) continue;
    const auto& row = rows_[k];
    for (int j = 0; j < n_; ++j)
      if (!is_zero(row[j], 0.0)) v[j] -= f * row[j];
    v[piv_[k]] = T(0);
  }
  return v;
}

template <class T>
bool Subspace<T>::contains(const Vec<T>& v) const {
  auto r = reduce(v);
  for (const auto& x : r)
    if (nz(x, tol_)) return false;
  return true;
}

template <class T>
bool Subspace<T>::add(const Vec<T>& v) {
  auto r = reduce(v);
  int p = -1;
  if constexpr (is_float<T>) {
    double best = tol_;
    for (int j = 0; j < n_; ++j)
      if (mag(r[j]) > best) { best = mag(r[j]); p = j; }
  } else {
    for (int j = 0; j < n_; ++j)
      if (nz(r[j], 0.0)) { p = j; break; }
  }
  if (p < 0) return false;
  T inv = T(1) / r[p];
  for (auto& x : r) x *= inv;
  r[p] = T(1);
  for (auto& row : rows_) {
    T f = row[p];
    if (is_zero(f, 0.0)) continue;
    for (int j = 0; j < n_; ++j)
      if (!is_zero(r[j], 0.0)) row[j] -= f * r[j];
    row[p] = T(0);
  }
  auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
  piv_.insert(piv_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

template <class T>
bool Subspace<T>::subset_of(const Subspace& o) const {
  for (const auto& row : rows_)
    if (!o.contains(row)) return false;
  return true;
}

template <class T>
Vec<T> Subspace<T>::coords(const Vec<T>& v) const {
  Vec<T> c(rows_.size());
  for (size_t k = 0; k < rows_.size(); ++k) c[k] = v[piv_[k]];
  return c;
}

// ---- rank / nullspace / inverse

template <class T>
static Subspace<T> null_from_rref(const RRef<T>& e, int cols, double tol) {
  Subspace<T> ns(cols, tol);
  std::vector<char> is_piv(cols, 0);
  for (int p : e.pivots) is_piv[p] = 1;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec<T> v(cols, T(0));
    v[f] = T(1);
    for (int i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.rows(i, f);
    ns.add(v);
  }
  return ns;
}

template <class T>
RankNull<T> rank_nullspace(const Mat<T>& m, double tol) {
  auto e = rref(m, tol);
  RankNull<T> out;
  out.rank = e.rank;
  out.nullspace = null_from_rref(e, m.c, tol);
  return out;
}

template <class T>
Mat<T> mat_inverse(const Mat<T>& m, double tol) {
  if (!m.square()) throw Error(Err::INVALID_INPUT, "inverse of non-square matrix");
  int n = m.r;
  Mat<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto e = rref(aug, tol);
  if (e.rank < n || e.pivots[n - 1] != n - 1) throw Error(Err::SINGULAR, "matrix is singular");
  Mat<T> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.rows(i, n + j);
  return inv;
}

// ---- Lie closure and commutant

template <class T>
Closure<T> bracket_closure(const std::vector<Mat<T>>& gens, int n, int max_rounds, double tol) {
  Closure<T> out;
  out.span = Subspace<T>(n * n, tol);
  for (const auto& g : gens)
    if (out.span.add(flatten(g))) out.elements.push_back(g);
  size_t old_end = 0;
  while (old_end < out.elements.size()) {
    if (out.rounds >= max_rounds) {
      out.fixpoint = false;
      break;
    }
    ++out.rounds;
    size_t end = out.elements.size();
    // new elements are [old_end, end); bracket them with everything before end
    for (size_t i = old_end; i < end; ++i)
      for (size_t j = 0; j < i; ++j) {
        auto c = commutator(out.elements[i], out.elements[j]);
        if (out.span.add(flatten(c))) out.elements.push_back(std::move(c));
      }
    old_end = end;
  }
  return out;
}

template <class T>
Subspace<T> commutant(const std::vector<Mat<T>>& h, int n, double tol) {
  int N = n * n;
  Subspace<T> constraints(N, tol);
  for (const auto& H : h) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec<T> row(N, T(0));
        for (int k = 0; k < n; ++k) {
          row[i * n + k] += H(k, j);
          row[k * n + j] -= H(i, k);
        }
        constraints.add(row);
      }
    if (constraints.dim() == N) break;
  }
  RRef<T> e;
  e.rank = constraints.dim();
  e.pivots = constraints.pivots();
  e.rows = Mat<T>(e.rank, N);
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < N; ++j) e.rows(i, j) = constraints.rows()[i][j];
  return null_from_rref(e, N, tol);
}

std::vector<ComplexCandidate> invariant_complex_structures(const std::vector<Mat<Q>>& h,
                                                           const Mat<Q>& g) {
  int n = g.r;
  auto comm = basis_matrices(commutant(h, n), n);
  std::vector<ComplexCandidate> out;
  if (comm.empty()) return out;
  // g-skew part of the commutant: coefficients c with sum c_i (gB_i + B_i^T g) = 0
  Mat<Q> sys(n * n, int(comm.size()));
  for (size_t k = 0; k < comm.size(); ++k) {
    auto gb = g * comm[k];
    auto s = gb + transpose(gb);
    for (int e = 0; e < n * n; ++e) sys(e, int(k)) = s.a[e];
  }
  auto ns = rank_nullspace(sys).nullspace;
  std::vector<Mat<Q>> skew;
  for (const auto& c : ns.rows()) {
    Mat<Q> K(n, n);
    for (size_t k = 0; k < comm.size(); ++k)
      if (sgn(c[k]) != 0) K = K + scale(comm[k], c[k]);
    skew.push_back(K);
  }
  auto consider = [&](const Mat<Q>& K) {
    auto K2 = K * K;
    Q lam = K2(0, 0);
    if (sgn(lam) >= 0) return;
    if (!is_zero_mat(K2 - scale(Mat<Q>::identity(n), lam))) return;
    for (int s : {1, -1}) {
      ComplexCandidate cc;
      cc.raw = scale(K, Q(s));
      cc.neg_lambda = -lam;
      Q root;
      if (is_rational_square(cc.neg_lambda, &root)) {
        cc.exact = true;
        cc.exact_J = scale(cc.raw, Q(1) / root);
        cc.approx_J = to_double(cc.exact_J);
      } else {
        cc.approx_J = to_double(cc.raw);
        double r = std::sqrt(cc.neg_lambda.get_d());
        for (auto& v : cc.approx_J.a) v /= r;
      }
      out.push_back(std::move(cc));
    }
  };
  for (const auto& K : skew) consider(K);
  return out;
}

// ---- polynomials

std::vector<Q> charpoly(const Mat<Q>& A) {
  int n = A.r;
  std::vector<Q> c(n + 1);
  c[n] = 1;
  Mat<Q> M(n, n);
  auto I = Mat<Q>::identity(n);
  for (int k = 1; k <= n; ++k) {
    M = A * M + scale(I, c[n - k + 1]);
    c[n - k] = -trace(A * M) / Q(k);
  }
  return c;
}

Q poly_eval(const std::vector<Q>& p, const Q& x) {
  Q s = 0;
  for (size_t k = p.size(); k-- > 0;) s = s * x + p[k];
  return s;
}

std::vector<std::complex<double>> poly_roots(const std::vector<Q>& p) {
  std::vector<Q> q = p;
  while (!q.empty() && sgn(q.back()) == 0) q.pop_back();
  int d = int(q.size()) - 1;
  if (d < 1) return {};
  std::vector<std::complex<double>> a(d + 1);
  for (int k = 0; k <= d; ++k) a[k] = Q(q[k] / q[d]).get_d();
  double bound = 1;
  for (int k = 0; k < d; ++k) bound = std::max(bound, 1 + std::abs(a[k]));
  std::vector<std::complex<double>> z(d);
  const std::complex<double> seed(0.4, 0.9);
  for (int k = 0; k < d; ++k) z[k] = bound * 0.5 * std::pow(seed, k);
  for (int it = 0; it < 2000; ++it) {
    double moved = 0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> den = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) den *= (z[i] - z[j]);
      std::complex<double> f = 1;
      for (int k = d - 1; k >= 0; --k) f = f * z[i] + a[k];
      if (std::abs(den) == 0) den = 1e-12;
      auto step = f / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-15) break;
  }
  return z;
}

namespace {
Q rationalize(double x, long max_den) {
  // continued fraction
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double f = x;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(f);
    long ai = long(a);
    long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (std::labs(k2) > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    double frac = f - a;
    if (std::fabs(frac) < 1e-13) break;
    f = 1.0 / frac;
  }
  if (k1 == 0) return Q(0);
  Q r(h1, k1);
  r.canonicalize();
  return r;
}
}  // namespace

std::vector<Q> rational_roots(const std::vector<Q>& p) {
  std::vector<Q> out;
  auto add = [&](const Q& r) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  };
  std::vector<Q> q = p;
  while (!q.empty() && sgn(q.back()) == 0) q.pop_back();
  if (q.size() < 2) return out;
  size_t lo = 0;
  while (lo < q.size() && sgn(q[lo]) == 0) ++lo;
  if (lo > 0) add(Q(0));
  std::vector<Q> rest(q.begin() + lo, q.end());
  for (const auto& z : poly_roots(rest)) {
    if (std::fabs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
    for (long md : {1000L, 1000000L}) {
      Q r = rationalize(z.real(), md);
      if (sgn(poly_eval(rest, r)) == 0) {
        add(r);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Inertia inertia(const Mat<Q>& sym) {
  Inertia res;
  Mat<Q> A = sym;
  std::vector<int> idx(A.r);
  std::iota(idx.begin(), idx.end(), 0);
  while (!idx.empty()) {
    int piv = -1;
    for (int i : idx)
      if (sgn(A(i, i)) != 0) { piv = i; break; }
    if (piv >= 0) {
      Q d = A(piv, piv);
      (sgn(d) > 0 ? res.pos : res.neg)++;
      idx.erase(std::find(idx.begin(), idx.end(), piv));
      for (int i : idx) {
        if (sgn(A(i, piv)) == 0) continue;
        Q f = A(i, piv) / d;
        for (int j : idx) A(i, j) -= f * A(piv, j);
      }
      continue;
    }
    int pi = -1, pj = -1;
    for (size_t a = 0; a < idx.size() && pi < 0; ++a)
      for (size_t b = a + 1; b < idx.size(); ++b)
        if (sgn(A(idx[a], idx[b])) != 0) { pi = idx[a]; pj = idx[b]; break; }
    if (pi < 0) {
      res.zero += int(idx.size());
      break;
    }
    // block [[0,b],[b,0]]: one positive, one negative direction
    res.pos++;
    res.neg++;
    Q b = A(pi, pj);
    idx.erase(std::find(idx.begin(), idx.end(), pi));
    idx.erase(std::find(idx.begin(), idx.end(), pj));
    // Schur complement: A_rr - C B^{-1} C^T with B^{-1} = [[0,1/b],[1/b,0]]
    Mat<Q> next = A;
    for (int i : idx)
      for (int j : idx) next(i, j) = A(i, j) - (A(i, pi) * A(pj, j) + A(i, pj) * A(pi, j)) / b;
    A = next;
  }
  return res;
}

Mat<Q> cayley(const Mat<Q>& S) {
  auto I = Mat<Q>::identity(S.r);
  return mat_inverse(I - S) * (I + S);
}

#define HOLAB_INST(T)                                                                       \
  template class Subspace<T>;                                                               \
  template RankNull<T> rank_nullspace(const Mat<T>&, double);                               \
  template Mat<T> mat_inverse(const Mat<T>&, double);                                       \
  template Closure<T> bracket_closure(const std::vector<Mat<T>>&, int, int, double);        \
  template Subspace<T> commutant(const std::vector<Mat<T>>&, int, double);
HOLAB_INST(Q)
HOLAB_INST(QC)
HOLAB_INST(double)
#undef HOLAB_INST

}  // namespace holab
