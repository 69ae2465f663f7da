#pragma once
// Scalars (exact rational, Gaussian rational, float with tolerance) and the
// dense linear algebra shared by every other module.
#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <optional>
#include <type_traits>
#include <string>
#include <variant>
#include <vector>

#include "holab/error.hpp"

namespace holab {

using Q = mpq_class;

inline constexpr double kDefaultTol = 1e-9;

struct QC {
  Q re, im;
  QC() : re(0), im(0) {}
  QC(int v) : re(v), im(0) {}
  QC(const Q& r) : re(r), im(0) {}
  QC(const Q& r, const Q& i) : re(r), im(i) {}
  static QC i() { return QC(Q(0), Q(1)); }
  QC conj() const { return QC(re, -im); }
  QC& operator+=(const QC& o) { re += o.re; im += o.im; return *this; }
  QC& operator-=(const QC& o) { re -= o.re; im -= o.im; return *this; }
  QC& operator*=(const QC& o) {
    Q r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  QC& operator/=(const QC& o) {
    Q d = o.re * o.re + o.im * o.im;
    Q r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
  }
};
inline QC operator+(QC a, const QC& b) { return a += b; }
inline QC operator-(QC a, const QC& b) { return a -= b; }
inline QC operator*(QC a, const QC& b) { return a *= b; }
inline QC operator/(QC a, const QC& b) { return a /= b; }
inline QC operator-(const QC& a) { return QC(-a.re, -a.im); }
inline bool operator==(const QC& a, const QC& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const QC& a, const QC& b) { return !(a == b); }

inline bool is_zero(const Q& x, double = 0) { return sgn(x) == 0; }
inline bool is_zero(const QC& x, double = 0) { return sgn(x.re) == 0 && sgn(x.im) == 0; }
inline bool is_zero(double x, double tol) { return std::fabs(x) <= tol; }
// The single float comparator.
inline bool approx_equal(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::string to_string(const Q& x);
std::string to_string(const QC& x);
std::string to_string(double x);
Q parse_rational(const std::string& s);
bool is_rational_square(const Q& x, Q* root = nullptr);

template <class T>
using Vec = std::vector<T>;

template <class T>
struct Mat {
  int r = 0, c = 0;
  std::vector<T> a;
  Mat() = default;
  Mat(int rows, int cols) : r(rows), c(cols), a(size_t(rows) * cols, T(0)) {}
  T& operator()(int i, int j) { return a[size_t(i) * c + j]; }
  const T& operator()(int i, int j) const { return a[size_t(i) * c + j]; }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  bool square() const { return r == c; }
};

template <class T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
  Mat<T> z = x;
  for (size_t k = 0; k < z.a.size(); ++k) z.a[k] += y.a[k];
  return z;
}
template <class T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
  Mat<T> z = x;
  for (size_t k = 0; k < z.a.size(); ++k) z.a[k] -= y.a[k];
  return z;
}
template <class T>
Mat<T> operator-(const Mat<T>& x) {
  Mat<T> z = x;
  for (auto& v : z.a) v = -v;
  return z;
}
template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
  Mat<T> z(x.r, y.c);
  for (int i = 0; i < x.r; ++i)
    for (int k = 0; k < x.c; ++k) {
      const T& v = x(i, k);
      if (is_zero(v, 0.0)) continue;
      for (int j = 0; j < y.c; ++j)
        if (!is_zero(y(k, j), 0.0)) z(i, j) += v * y(k, j);
    }
  return z;
}
template <class T>
Mat<T> scale(const Mat<T>& x, const std::type_identity_t<T>& s) {
  Mat<T> z = x;
  for (auto& v : z.a) v *= s;
  return z;
}
template <class T>
Mat<T> transpose(const Mat<T>& x) {
  Mat<T> z(x.c, x.r);
  for (int i = 0; i < x.r; ++i)
    for (int j = 0; j < x.c; ++j) z(j, i) = x(i, j);
  return z;
}
template <class T>
Mat<T> commutator(const Mat<T>& x, const Mat<T>& y) {
  return x * y - y * x;
}
template <class T>
bool is_zero_mat(const Mat<T>& x, double tol = kDefaultTol) {
  for (const auto& v : x.a)
    if (!is_zero(v, tol)) return false;
  return true;
}
template <class T>
T trace(const Mat<T>& x) {
  T s(0);
  for (int i = 0; i < x.r; ++i) s += x(i, i);
  return s;
}
template <class T>
Vec<T> flatten(const Mat<T>& x) {
  return x.a;
}
template <class T>
Mat<T> unflatten(const Vec<T>& v, int rows, int cols) {
  Mat<T> m(rows, cols);
  m.a = v;
  return m;
}

Mat<double> to_double(const Mat<Q>& m);
Mat<QC> to_complex(const Mat<Q>& m);
double max_abs(const Mat<double>& m);
Q max_abs(const Mat<Q>& m);

// Span kept in reduced row echelon form; pivots strictly increase.
template <class T>
class Subspace {
public:
  explicit Subspace(int ambient = 0, double tol = kDefaultTol) : n_(ambient), tol_(tol) {}
  int ambient() const { return n_; }
  int dim() const { return int(rows_.size()); }
  const std::vector<Vec<T>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return piv_; }
  Vec<T> reduce(Vec<T> v) const;
  bool contains(const Vec<T>& v) const;
  bool add(const Vec<T>& v);
  bool subset_of(const Subspace& o) const;
  bool same_span(const Subspace& o) const { return dim() == o.dim() && subset_of(o); }
  // Coordinates of a member vector with respect to rows().
  Vec<T> coords(const Vec<T>& v) const;

private:
  int n_;
  double tol_;
  std::vector<Vec<T>> rows_;
  std::vector<int> piv_;
};

template <class T>
struct RRef {
  Mat<T> rows;  // rank x cols, pivot entries 1
  std::vector<int> pivots;
  int rank = 0;
};

// Exact backends go through fraction-free (Bareiss) elimination.
template <class T>
RRef<T> rref(const Mat<T>& m, double tol = kDefaultTol);

template <class T>
struct RankNull {
  int rank = 0;
  Subspace<T> nullspace;
};
template <class T>
RankNull<T> rank_nullspace(const Mat<T>& m, double tol = kDefaultTol);

template <class T>
Mat<T> mat_inverse(const Mat<T>& m, double tol = kDefaultTol);

template <class T>
struct Closure {
  Subspace<T> span;
  std::vector<Mat<T>> elements;  // matrices spanning `span`
  bool fixpoint = true;
  int rounds = 0;
};
template <class T>
Closure<T> bracket_closure(const std::vector<Mat<T>>& gens, int n, int max_rounds = 32,
                           double tol = kDefaultTol);

template <class T>
Subspace<T> commutant(const std::vector<Mat<T>>& h, int n, double tol = kDefaultTol);

template <class T>
std::vector<Mat<T>> basis_matrices(const Subspace<T>& s, int n) {
  std::vector<Mat<T>> out;
  for (const auto& row : s.rows()) out.push_back(unflatten(row, n, n));
  return out;
}

template <class T>
Subspace<T> span_of(const std::vector<Mat<T>>& ms, int n, double tol = kDefaultTol) {
  Subspace<T> s(n * n, tol);
  for (const auto& m : ms) s.add(flatten(m));
  return s;
}

// K in the commutant of h, g-skew, K^2 = lambda*I with lambda < 0.
struct ComplexCandidate {
  Mat<Q> raw;       // K before normalisation
  Q neg_lambda;     // -lambda > 0
  bool exact = false;
  Mat<Q> exact_J;   // K / sqrt(-lambda) when that root is rational
  Mat<double> approx_J;
};
std::vector<ComplexCandidate> invariant_complex_structures(const std::vector<Mat<Q>>& h,
                                                           const Mat<Q>& g);

// Coefficients low to high, monic.
std::vector<Q> charpoly(const Mat<Q>& m);
std::vector<Q> rational_roots(const std::vector<Q>& poly);
std::vector<std::complex<double>> poly_roots(const std::vector<Q>& poly);
Q poly_eval(const std::vector<Q>& poly, const Q& x);

struct Inertia {
  int pos = 0, zero = 0, neg = 0;
};
Inertia inertia(const Mat<Q>& sym);

// Cayley transform (I - S)^{-1}(I + S) of a skew matrix: an exact rotation.
Mat<Q> cayley(const Mat<Q>& skew);

// Runtime-tagged scalars for the backend contract.
enum class Backend { RATIONAL, GAUSS_RATIONAL, FLOAT64 };

class Scalar {
public:
  Scalar() : v_(Q(0)) {}
  Scalar(const Q& x) : v_(x) {}
  Scalar(const QC& x) : v_(x) {}
  Scalar(double x) : v_(x) {}
  Backend backend() const { return Backend(v_.index()); }
  const Q& rational() const { return std::get<Q>(v_); }
  const QC& gauss() const { return std::get<QC>(v_); }
  double real() const { return std::get<double>(v_); }
  std::string str() const;

private:
  std::variant<Q, QC, double> v_;
};

class AnyMat {
public:
  static AnyMat from_scalars(int rows, int cols, const std::vector<Scalar>& entries);
  Backend backend() const { return Backend(m_.index()); }
  const Mat<Q>& rational() const { return std::get<Mat<Q>>(m_); }
  const Mat<QC>& gauss() const { return std::get<Mat<QC>>(m_); }
  const Mat<double>& real() const { return std::get<Mat<double>>(m_); }

private:
  std::variant<Mat<Q>, Mat<QC>, Mat<double>> m_;
};

struct AnyRankNull {
  int rank = 0;
  std::vector<std::vector<Scalar>> nullspace;
};
AnyRankNull rank_nullspace(const AnyMat& m, std::optional<double> tol);

}  // namespace holab
