#include <algorithm>

#include "holab/polycalc.hpp"

namespace holab {

int& Jet::series_order() {
  thread_local int k = 4;
  return k;
}

Jet Jet::of(const RatFunc& f, const std::vector<Q>& point, int ord) {
  Poly n = f.num().shifted(point);
  Poly d = f.den().shifted(point);
  Q c = d.constant_term();
  if (sgn(c) == 0) throw Error(Err::POLE_AT_POINT, "denominator vanishes at the expansion point");
  if (d.is_constant()) return Jet(n.scaled(Q(1) / c), kExact);
  return Jet(n, ord) * Jet(d, ord).inverse();
}

Jet& Jet::operator+=(const Jet& o) {
  p_ += o.p_;
  if (o.ord_ < ord_) {
    ord_ = o.ord_;
    p_ = p_.truncated(ord_);
  }
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  p_ -= o.p_;
  if (o.ord_ < ord_) {
    ord_ = o.ord_;
    p_ = p_.truncated(ord_);
  }
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  ord_ = std::min(ord_, o.ord_);
  if (p_.is_zero() || o.p_.is_zero()) {
    p_ = Poly(std::max(p_.nvars(), o.p_.nvars()));
    return *this;
  }
  p_ = Poly::mul(p_, o.p_, ord_ == kExact ? -1 : ord_);
  return *this;
}

Jet Jet::inverse() const {
  Q c = p_.constant_term();
  if (sgn(c) == 0) throw Error(Err::POLE_AT_POINT, "inverting a jet that vanishes at the point");
  if (p_.is_constant()) return Jet(Poly::constant(p_.nvars(), Q(1) / c), ord_);
  int k = ord_ == kExact ? series_order() : ord_;
  // 1/(c(1+h)) = (1/c) sum (-h)^j
  Poly h = p_.scaled(Q(-1) / c);
  h += Poly::constant(p_.nvars(), 1);  // h now holds -(p/c - 1)
  h = h.truncated(k);
  Poly sum = Poly::constant(p_.nvars(), 1);
  Poly term = sum;
  for (int j = 1; j <= k; ++j) {
    term = Poly::mul(term, h, k);
    if (term.is_zero()) break;
    sum += term;
  }
  return Jet(sum.scaled(Q(1) / c), k);
}

Jet& Jet::operator/=(const Jet& o) { return *this *= o.inverse(); }

Jet Jet::deriv(int i) const {
  return Jet(p_.deriv(i), ord_ == kExact ? kExact : ord_ - 1);
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(Jet a, const Jet& b) { return a *= b; }
Jet operator/(Jet a, const Jet& b) { return a /= b; }

}  // namespace holab
