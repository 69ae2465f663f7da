#include "holab/polycalc.hpp"

namespace holab {

RatFunc::RatFunc(const Poly& p) : num_(p), den_(Poly::constant(p.nvars(), 1)) { normalise(); }

RatFunc::RatFunc(const Poly& n, const Poly& d) : num_(n), den_(d) {
  if (d.is_zero()) throw Error(Err::DIVIDE_BY_ZERO_POLY, "denominator is the zero polynomial");
  normalise();
}

namespace {
Q qgcd(const Q& a, const Q& b) {
  mpz_class n, d;
  mpz_gcd(n.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_lcm(d.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Q r(n, d);
  r.canonicalize();
  return r;
}
}  // namespace

// Integer coefficients with joint content 1 and positive leading denominator
// coefficient; monomial factors and exact polynomial quotients are cancelled.
void RatFunc::normalise() {
  int n = std::max(num_.nvars(), den_.nvars());
  if (num_.is_zero()) {
    num_ = Poly(n);
    den_ = Poly::constant(n, 1);
    return;
  }
  if (!den_.is_constant()) {
    Mono g = mono_gcd(num_.mono_content(), den_.mono_content());
    if (g.deg) {
      Poly gm = Poly::from_terms(n, {{g, Q(1)}});
      Poly::divexact(Poly(num_), gm, &num_);
      Poly::divexact(Poly(den_), gm, &den_);
    }
    Poly q;
    if (num_.degree() >= den_.degree() && Poly::divexact(num_, den_, &q)) {
      num_ = q;
      den_ = Poly::constant(n, 1);
    } else if (!num_.is_constant() && Poly::divexact(den_, num_, &q)) {
      num_ = Poly::constant(n, 1);
      den_ = q;
    }
  }
  Q k = Q(1) / qgcd(num_.content(), den_.content());
  if (sgn(den_.lead().second) < 0) k = -k;
  num_ = num_.scaled(k);
  den_ = den_.scaled(k);
}

bool RatFunc::is_constant() const {
  if (num_.is_zero()) return true;
  if (num_.is_constant() && den_.is_constant()) return true;
  const auto& ln = num_.lead();
  const auto& ld = den_.lead();
  if (!(ln.first == ld.first)) return false;
  return num_ == den_.scaled(ln.second / ld.second);
}

Q RatFunc::constant_value() const {
  if (num_.is_zero()) return Q(0);
  return num_.lead().second / den_.lead().second;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  Poly q;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (o.den_.is_constant() || Poly::divexact(den_, o.den_, &q)) {
    if (o.den_.is_constant()) q = den_.scaled(Q(1) / o.den_.constant_term());
    num_ += Poly::mul(o.num_, q);
  } else if (den_.is_constant() || Poly::divexact(o.den_, den_, &q)) {
    if (den_.is_constant()) q = o.den_.scaled(Q(1) / den_.constant_term());
    num_ = Poly::mul(num_, q) + o.num_;
    den_ = o.den_;
  } else {
    num_ = Poly::mul(num_, o.den_) + Poly::mul(o.num_, den_);
    den_ = Poly::mul(den_, o.den_);
  }
  normalise();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc(std::max(nvars(), o.nvars()));
  Poly a = num_, b = o.num_, c = den_, d = o.den_;
  Poly q;
  auto cancel = [&q](Poly& top, Poly& bot) {
    if (bot.is_constant() || top.is_constant()) return;
    if (Poly::divexact(top, bot, &q)) {
      top = q;
      bot = Poly::constant(bot.nvars(), 1);
    } else if (Poly::divexact(bot, top, &q)) {
      bot = q;
      top = Poly::constant(top.nvars(), 1);
    }
  };
  cancel(a, d);
  cancel(b, c);
  num_ = Poly::mul(a, b);
  den_ = Poly::mul(c, d);
  normalise();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error(Err::DIVIDE_BY_ZERO_POLY, "division by the zero function");
  RatFunc inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  inv.normalise();
  return *this *= inv;
}

RatFunc RatFunc::deriv(int i) const {
  if (den_.is_constant()) return RatFunc(num_.deriv(i), den_);
  Poly dn = num_.deriv(i), dd = den_.deriv(i);
  if (dd.is_zero()) return RatFunc(dn, den_);
  return RatFunc(Poly::mul(dn, den_) - Poly::mul(num_, dd), Poly::mul(den_, den_));
}

Q RatFunc::eval(const std::vector<Q>& p) const {
  Q d = den_.eval(p);
  if (sgn(d) == 0) throw Error(Err::POLE_AT_POINT, "denominator vanishes at the point");
  return num_.eval(p) / d;
}

double RatFunc::eval_d(const std::vector<double>& p) const {
  double d = den_.eval_d(p);
  if (d == 0) throw Error(Err::POLE_AT_POINT, "denominator vanishes at the point");
  return num_.eval_d(p) / d;
}

std::string RatFunc::str(const std::vector<std::string>& names) const {
  if (den_.is_constant()) return num_.scaled(Q(1) / den_.constant_term()).str(names);
  return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
bool operator==(const RatFunc& a, const RatFunc& b) {
  return (Poly::mul(a.num(), b.den()) - Poly::mul(b.num(), a.den())).is_zero();
}

}  // namespace holab
