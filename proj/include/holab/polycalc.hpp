#pragma once
// Sparse multivariate polynomials over Q, rational functions, a small
// expression parser, vector fields, and truncated Taylor jets at a point.
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "holab/numkit.hpp"

namespace holab {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxDegree = 64;

// Exponents packed one byte per variable; variable 0 sits in the top byte of
// w[0], so comparing (deg, w[0], w[1]) is graded lex with x1 > x2 > ...
struct Mono {
  uint64_t w[2] = {0, 0};
  uint32_t deg = 0;
  int exp(int i) const { return int((w[i >> 3] >> (8 * (7 - (i & 7)))) & 0xff); }
  void set(int i, int e);
  Mono operator*(const Mono& o) const;
  bool divides(const Mono& o) const;
  Mono operator/(const Mono& o) const;  // requires divides
  static Mono var(int i, int e = 1) {
    Mono m;
    m.set(i, e);
    return m;
  }
};
inline bool operator==(const Mono& a, const Mono& b) {
  return a.deg == b.deg && a.w[0] == b.w[0] && a.w[1] == b.w[1];
}
inline bool operator<(const Mono& a, const Mono& b) {
  if (a.deg != b.deg) return a.deg < b.deg;
  if (a.w[0] != b.w[0]) return a.w[0] < b.w[0];
  return a.w[1] < b.w[1];
}
Mono mono_gcd(const Mono& a, const Mono& b);

class Poly {
public:
  using Term = std::pair<Mono, Q>;
  Poly() = default;
  explicit Poly(int nvars) : n_(nvars) {}
  static Poly constant(int nvars, const Q& c);
  static Poly variable(int nvars, int i);
  static Poly from_terms(int nvars, std::vector<Term> terms);  // normalises

  int nvars() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.deg == 0); }
  Q constant_term() const;
  int degree() const { return t_.empty() ? -1 : int(t_.front().first.deg); }
  const Term& lead() const { return t_.front(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  Poly scaled(const Q& c) const;
  Poly mul_mono(const Mono& m, const Q& c) const;
  // Product dropping all terms of degree > max_deg (max_deg < 0: keep all).
  static Poly mul(const Poly& a, const Poly& b, int max_deg = -1);
  Poly truncated(int max_deg) const;

  Poly deriv(int i) const;
  Q eval(const std::vector<Q>& point) const;
  double eval_d(const std::vector<double>& point) const;
  // p(x + shift)
  Poly shifted(const std::vector<Q>& shift) const;

  // Exact quotient a / b if it exists.
  static bool divexact(const Poly& a, const Poly& b, Poly* quotient);
  Q content() const;  // positive, num gcd over den lcm
  Mono mono_content() const;
  std::string str(const std::vector<std::string>& names) const;

private:
  int n_ = 0;
  std::vector<Term> t_;  // descending, no zero coefficients
  void normalise();
};
Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
bool operator==(const Poly& a, const Poly& b);

class RatFunc {
public:
  RatFunc() = default;
  explicit RatFunc(int nvars) : num_(nvars), den_(Poly::constant(nvars, 1)) {}
  RatFunc(const Poly& p);
  RatFunc(const Poly& n, const Poly& d);  // throws DIVIDE_BY_ZERO_POLY
  static RatFunc constant(int nvars, const Q& c) { return RatFunc(Poly::constant(nvars, c)); }

  int nvars() const { return num_.nvars(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // Exact constancy: n * d(x+e_i) style test via derivatives n' d - n d' = 0.
  bool is_constant() const;
  Q constant_value() const;  // valid when is_constant()

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc deriv(int i) const;
  Q eval(const std::vector<Q>& p) const;  // POLE_AT_POINT on zero denominator
  double eval_d(const std::vector<double>& p) const;
  std::string str(const std::vector<std::string>& names) const;

private:
  Poly num_, den_;
  void normalise();
};
RatFunc operator+(RatFunc a, const RatFunc& b);
RatFunc operator-(RatFunc a, const RatFunc& b);
RatFunc operator*(RatFunc a, const RatFunc& b);
RatFunc operator/(RatFunc a, const RatFunc& b);
bool operator==(const RatFunc& a, const RatFunc& b);
inline RatFunc deriv(const RatFunc& f, int i) { return f.deriv(i); }

std::vector<std::string> default_var_names(int n);
// Grammar: sums of products of powers of numbers, variables and parentheses;
// '/' yields rational functions.
RatFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& names);
Poly parse_poly(const std::string& text, const std::vector<std::string>& names);

// Truncated Taylor expansion at a fixed point, stored in the shifted
// coordinates u = x - p. ord = kExact marks an exact polynomial.
class Jet {
public:
  static constexpr int kExact = 1 << 20;
  Jet() = default;
  Jet(const Poly& p, int ord) : p_(p), ord_(ord) { if (ord_ != kExact) p_ = p_.truncated(ord_); }
  static Jet constant(int nvars, const Q& c) { return Jet(Poly::constant(nvars, c), kExact); }
  // Expansion of f at point to order ord.
  static Jet of(const RatFunc& f, const std::vector<Q>& point, int ord);

  int nvars() const { return p_.nvars(); }
  int ord() const { return ord_; }
  const Poly& poly() const { return p_; }
  Q value() const {
    if (ord_ < 0) throw Error(Err::INTERNAL, "jet differentiated past its order");
    return p_.constant_term();
  }
  bool is_zero() const { return p_.is_zero(); }

  Jet operator-() const { return Jet(-p_, ord_); }
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet inverse() const;
  Jet deriv(int i) const;
  // Truncation used when an exact, non-constant jet has to be inverted.
  static int& series_order();

private:
  Poly p_;
  int ord_ = kExact;
};
Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(Jet a, const Jet& b);
Jet operator/(Jet a, const Jet& b);
inline Jet deriv(const Jet& f, int i) { return f.deriv(i); }

struct SeriesOrderScope {
  int saved;
  explicit SeriesOrderScope(int k) : saved(Jet::series_order()) { Jet::series_order() = k; }
  ~SeriesOrderScope() { Jet::series_order() = saved; }
};

// Fields in the coordinate frame with rational coefficients.
using VField = std::vector<RatFunc>;
using OneForm = std::vector<RatFunc>;
RatFunc dir_deriv(const VField& X, const RatFunc& f);
VField lie_bracket(const VField& X, const VField& Y);
RatFunc contract(const OneForm& w, const VField& X);

// Covariant 2-tensor storing one triangle; Sym selects symmetric or
// antisymmetric completion.
template <bool Sym>
class Tensor2 {
public:
  Tensor2() = default;
  explicit Tensor2(int n) : n_(n), tri_(size_t(n) * (n + 1) / 2, RatFunc(n)) {}
  int dim() const { return n_; }
  RatFunc at(int i, int j) const {
    if (i == j) return Sym ? tri_[idx(i, i)] : RatFunc(n_);
    if (i < j) return tri_[idx(i, j)];
    return Sym ? tri_[idx(j, i)] : -tri_[idx(j, i)];
  }
  void set(int i, int j, const RatFunc& f) {
    if (i == j && !Sym) {
      if (!f.is_zero()) throw Error(Err::INVALID_INPUT, "antisymmetric tensor with diagonal entry");
      return;
    }
    if (i <= j) tri_[idx(i, j)] = f;
    else tri_[idx(j, i)] = Sym ? f : -f;
  }
  RatFunc operator()(const VField& X, const VField& Y) const {
    RatFunc s(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (X[i].is_zero() || Y[j].is_zero()) continue;
        auto v = at(i, j);
        if (!v.is_zero()) s += v * X[i] * Y[j];
      }
    return s;
  }
  bool is_zero() const {
    for (const auto& f : tri_)
      if (!f.is_zero()) return false;
    return true;
  }

private:
  int n_ = 0;
  std::vector<RatFunc> tri_;
  size_t idx(int i, int j) const { return size_t(i) * n_ - size_t(i) * (i - 1) / 2 + (j - i); }
};
using TwoForm = Tensor2<false>;
using SymTensor = Tensor2<true>;

TwoForm exterior_d(const OneForm& w);
OneForm lie_derivative(const VField& V, const OneForm& w);
TwoForm lie_derivative(const VField& V, const TwoForm& w);
SymTensor lie_derivative(const VField& V, const SymTensor& t);
// Pointwise values; POLE_AT_POINT names the offending coefficient.
std::vector<Q> evaluate(const std::vector<RatFunc>& f, const std::vector<Q>& p, const std::string& what);
template <bool Sym>
Mat<Q> evaluate(const Tensor2<Sym>& t, const std::vector<Q>& p, const std::string& what) {
  Mat<Q> m(t.dim(), t.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) {
      try {
        m(i, j) = t.at(i, j).eval(p);
      } catch (const Error&) {
        throw Error(Err::POLE_AT_POINT, what + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
      }
    }
  return m;
}

}  // namespace holab
