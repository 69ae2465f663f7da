#include <algorithm>
#include <cctype>

#include "holab/polycalc.hpp"

namespace holab {

std::vector<std::string> default_var_names(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

namespace {

class Parser {
public:
  Parser(const std::string& s, const std::vector<std::string>& names) : s_(s), names_(names) {}

  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

private:
  const std::string& s_;
  const std::vector<std::string>& names_;
  size_t pos_ = 0;
  int n() const { return int(names_.size()); }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(Err::SYNTAX_ERROR, what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        size_t at = pos_;
        RatFunc d = unary();
        if (d.is_zero()) {
          pos_ = at;
          throw Error(Err::DIVIDE_BY_ZERO_POLY, "division by zero at position " + std::to_string(at));
        }
        r /= d;
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc b = primary();
    if (!eat('^')) return b;
    skip();
    bool neg = eat('-');
    skip();
    size_t st = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (st == pos_) fail("expected integer exponent");
    if (pos_ - st > 3) fail("exponent too large");
    int e = std::stoi(s_.substr(st, pos_ - st));
    if (e > kMaxDegree) throw Error(Err::DEGREE_OVERFLOW, "exponent exceeds degree guard");
    RatFunc r = RatFunc::constant(n(), 1);
    for (int k = 0; k < e; ++k) r *= b;
    if (neg) {
      if (r.is_zero()) throw Error(Err::DIVIDE_BY_ZERO_POLY, "negative power of zero");
      r = RatFunc::constant(n(), 1) / r;
    }
    return r;
  }

  RatFunc primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t st = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      std::string lit = s_.substr(st, pos_ - st);
      if (lit == "." || std::count(lit.begin(), lit.end(), '.') > 1) {
        pos_ = st;
        fail("malformed number");
      }
      return RatFunc::constant(n(), parse_rational(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t st = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id = s_.substr(st, pos_ - st);
      for (int i = 0; i < n(); ++i)
        if (names_[i] == id) return RatFunc(Poly::variable(n(), i));
      throw Error(Err::UNKNOWN_VARIABLE, "unknown variable '" + id + "' at position " + std::to_string(st));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& names) {
  if (int(names.size()) > kMaxVars) throw Error(Err::INVALID_INPUT, "too many variables");
  return Parser(text, names).run();
}

Poly parse_poly(const std::string& text, const std::vector<std::string>& names) {
  RatFunc r = parse_ratfunc(text, names);
  if (!r.is_polynomial()) throw Error(Err::SYNTAX_ERROR, "expected a polynomial: " + text);
  return r.num();
}

}  // namespace holab
