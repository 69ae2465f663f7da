#include <algorithm>
#include <sstream>

#include "holab/polycalc.hpp"

namespace holab {

namespace {
constexpr uint64_t kHigh = 0x8080808080808080ULL;
}

void Mono::set(int i, int e) {
  if (i < 0 || i >= kMaxVars) throw Error(Err::INVALID_INPUT, "variable index out of range");
  if (e < 0 || e > 255) throw Error(Err::DEGREE_OVERFLOW, "exponent out of range");
  int old = exp(i);
  int shift = 8 * (7 - (i & 7));
  w[i >> 3] = (w[i >> 3] & ~(uint64_t(0xff) << shift)) | (uint64_t(e) << shift);
  deg = deg - old + e;
}

Mono Mono::operator*(const Mono& o) const {
  Mono m;
  m.w[0] = w[0] + o.w[0];
  m.w[1] = w[1] + o.w[1];
  m.deg = deg + o.deg;
  return m;
}

bool Mono::divides(const Mono& o) const {
  if (deg > o.deg) return false;
  // bytes stay below 128 under the degree guard, so no borrow crosses lanes
  return (((o.w[0] | kHigh) - w[0]) & kHigh) == kHigh &&
         (((o.w[1] | kHigh) - w[1]) & kHigh) == kHigh;
}

Mono Mono::operator/(const Mono& o) const {
  Mono m;
  m.w[0] = w[0] - o.w[0];
  m.w[1] = w[1] - o.w[1];
  m.deg = deg - o.deg;
  return m;
}

Mono mono_gcd(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = std::min(a.exp(i), b.exp(i));
    if (e) m.set(i, e);
  }
  return m;
}

Poly Poly::constant(int nvars, const Q& c) {
  Poly p(nvars);
  if (sgn(c) != 0) p.t_.push_back({Mono(), c});
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  p.t_.push_back({Mono::var(i), Q(1)});
  return p;
}

Poly Poly::from_terms(int nvars, std::vector<Term> terms) {
  Poly p(nvars);
  p.t_ = std::move(terms);
  p.normalise();
  return p;
}

void Poly::normalise() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return b.first < a.first; });
  size_t out = 0;
  for (size_t i = 0; i < t_.size();) {
    size_t j = i + 1;
    Q c = t_[i].second;
    while (j < t_.size() && t_[j].first == t_[i].first) c += t_[j++].second;
    if (sgn(c) != 0) {
      t_[out].first = t_[i].first;
      t_[out].second = c;
      ++out;
    }
    i = j;
  }
  t_.resize(out);
}

Q Poly::constant_term() const {
  if (!t_.empty() && t_.back().first.deg == 0) return t_.back().second;
  return Q(0);
}

static void merge_into(std::vector<Poly::Term>& dst, const std::vector<Poly::Term>& src, bool negate) {
  std::vector<Poly::Term> out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && src[j].first < dst[i].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || dst[i].first < src[j].first) {
      out.push_back({src[j].first, negate ? Q(-src[j].second) : src[j].second});
      ++j;
    } else {
      Q c = negate ? Q(dst[i].second - src[j].second) : Q(dst[i].second + src[j].second);
      if (sgn(c) != 0) out.push_back({dst[i].first, c});
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
  n_ = std::max(n_, o.n_);
  merge_into(t_, o.t_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  n_ = std::max(n_, o.n_);
  merge_into(t_, o.t_, true);
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.t_) t.second = -t.second;
  return p;
}

Poly Poly::scaled(const Q& c) const {
  if (sgn(c) == 0) return Poly(n_);
  Poly p = *this;
  for (auto& t : p.t_) t.second *= c;
  return p;
}

Poly Poly::mul_mono(const Mono& m, const Q& c) const {
  Poly p(n_);
  if (sgn(c) == 0) return p;
  if (m.deg + uint32_t(std::max(degree(), 0)) > uint32_t(kMaxDegree) && !t_.empty())
    throw Error(Err::DEGREE_OVERFLOW, "polynomial degree exceeds guard");
  p.t_.reserve(t_.size());
  for (const auto& t : t_) p.t_.push_back({t.first * m, t.second * c});
  return p;
}

Poly Poly::mul(const Poly& a, const Poly& b, int max_deg) {
  Poly p(std::max(a.n_, b.n_));
  if (a.t_.empty() || b.t_.empty()) return p;
  if (max_deg < 0 && a.degree() + b.degree() > kMaxDegree)
    throw Error(Err::DEGREE_OVERFLOW, "polynomial degree exceeds guard");
  if (a.t_.size() == 1 && max_deg < 0) return b.mul_mono(a.t_[0].first, a.t_[0].second);
  if (b.t_.size() == 1 && max_deg < 0) return a.mul_mono(b.t_[0].first, b.t_[0].second);
  p.t_.reserve(a.t_.size() * b.t_.size());
  for (const auto& x : a.t_) {
    for (auto it = b.t_.rbegin(); it != b.t_.rend(); ++it) {  // ascending degree
      if (max_deg >= 0 && int(x.first.deg + it->first.deg) > max_deg) break;
      p.t_.push_back({x.first * it->first, x.second * it->second});
    }
  }
  p.normalise();
  return p;
}

Poly Poly::truncated(int max_deg) const {
  Poly p(n_);
  for (const auto& t : t_)
    if (int(t.first.deg) <= max_deg) p.t_.push_back(t);
  return p;
}

Poly Poly::deriv(int i) const {
  Poly p(n_);
  for (const auto& t : t_) {
    int e = t.first.exp(i);
    if (!e) continue;
    Mono m = t.first;
    m.set(i, e - 1);
    p.t_.push_back({m, t.second * e});
  }
  p.normalise();
  return p;
}

Q Poly::eval(const std::vector<Q>& x) const {
  std::vector<std::vector<Q>> pw(n_);
  Q s = 0;
  for (const auto& t : t_) {
    Q v = t.second;
    for (int i = 0; i < n_ && v != 0; ++i) {
      int e = t.first.exp(i);
      if (!e) continue;
      auto& c = pw[i];
      if (c.empty()) c.push_back(Q(1));
      while (int(c.size()) <= e) c.push_back(c.back() * x[i]);
      v *= c[e];
    }
    s += v;
  }
  return s;
}

double Poly::eval_d(const std::vector<double>& x) const {
  double s = 0;
  for (const auto& t : t_) {
    double v = t.second.get_d();
    for (int i = 0; i < n_; ++i) {
      int e = t.first.exp(i);
      for (int k = 0; k < e; ++k) v *= x[i];
    }
    s += v;
  }
  return s;
}

Poly Poly::shifted(const std::vector<Q>& shift) const {
  std::vector<Term> acc;
  std::vector<Term> cur, next;
  for (const auto& t : t_) {
    cur.assign(1, {Mono(), t.second});
    for (int i = 0; i < n_; ++i) {
      int e = t.first.exp(i);
      if (!e) continue;
      if (sgn(shift[i]) == 0) {
        Mono v = Mono::var(i, e);
        for (auto& c : cur) c.first = c.first * v;
        continue;
      }
      // (x + s)^e = sum_k C(e,k) s^(e-k) x^k
      std::vector<Q> coef(e + 1);
      mpz_class binom = 1;
      Q spow = 1;
      std::vector<Q> sp(e + 1);
      for (int k = 0; k <= e; ++k) { sp[k] = spow; spow *= shift[i]; }
      for (int k = 0; k <= e; ++k) {
        coef[k] = Q(binom) * sp[e - k];
        binom = binom * (e - k) / (k + 1);
      }
      next.clear();
      for (const auto& c : cur)
        for (int k = 0; k <= e; ++k) {
          Mono m = c.first;
          if (k) m = m * Mono::var(i, k);
          next.push_back({m, c.second * coef[k]});
        }
      std::swap(cur, next);
    }
    acc.insert(acc.end(), cur.begin(), cur.end());
  }
  return from_terms(n_, std::move(acc));
}

bool Poly::divexact(const Poly& a, const Poly& b, Poly* quotient) {
  if (b.is_zero()) throw Error(Err::DIVIDE_BY_ZERO_POLY, "division by the zero polynomial");
  Poly q(std::max(a.n_, b.n_));
  Poly r = a;
  const auto& lb = b.lead();
  while (!r.is_zero()) {
    const auto& lr = r.lead();
    if (!lb.first.divides(lr.first)) return false;
    Mono m = lr.first / lb.first;
    Q c = lr.second / lb.second;
    q.t_.push_back({m, c});  // quotient terms arrive in descending order
    r -= b.mul_mono(m, c);
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

Q Poly::content() const {
  if (t_.empty()) return Q(1);
  mpz_class g = 0, l = 1;
  for (const auto& t : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  }
  Q c(g, l);
  c.canonicalize();
  return abs(c);
}

Mono Poly::mono_content() const {
  if (t_.empty()) return Mono();
  Mono g = t_[0].first;
  for (const auto& t : t_) {
    if (g.deg == 0) break;
    g = mono_gcd(g, t.first);
  }
  return g;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    Q a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (a != 1 || m.deg == 0) {
      os << a.get_str();
      wrote = true;
    }
    for (int i = 0; i < n_; ++i) {
      int e = m.exp(i);
      if (!e) continue;
      if (wrote) os << "*";
      os << (i < int(names.size()) ? names[i] : "x" + std::to_string(i + 1));
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(const Poly& a, const Poly& b) { return Poly::mul(a, b); }
bool operator==(const Poly& a, const Poly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (!(x[i].first == y[i].first) || x[i].second != y[i].second) return false;
  return true;
}

}  // namespace holab
