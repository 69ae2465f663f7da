#include <cstdio>
#include <sstream>

#include "holab/numkit.hpp"

namespace holab {

const char* err_name(Err e) {
  switch (e) {
    case Err::MIXED_BACKEND: return "MIXED_BACKEND";
    case Err::MISSING_TOLERANCE: return "MISSING_TOLERANCE";
    case Err::SINGULAR: return "SINGULAR";
    case Err::NO_FIXPOINT: return "NO_FIXPOINT";
    case Err::SYNTAX_ERROR: return "SYNTAX_ERROR";
    case Err::UNKNOWN_VARIABLE: return "UNKNOWN_VARIABLE";
    case Err::DIVIDE_BY_ZERO_POLY: return "DIVIDE_BY_ZERO_POLY";
    case Err::DEGREE_OVERFLOW: return "DEGREE_OVERFLOW";
    case Err::POLE_AT_POINT: return "POLE_AT_POINT";
    case Err::NOT_CONTACT: return "NOT_CONTACT";
    case Err::NOT_ALMOST_COMPLEX: return "NOT_ALMOST_COMPLEX";
    case Err::POLE_ON_PATH: return "POLE_ON_PATH";
    case Err::THEOREM_VIOLATION: return "THEOREM_VIOLATION";
    case Err::SPLIT_INCOMPLETE: return "SPLIT_INCOMPLETE";
    case Err::INVALID_INPUT: return "INVALID_INPUT";
    case Err::JACOBI_FAIL: return "JACOBI_FAIL";
    case Err::PARAM_DOMAIN: return "PARAM_DOMAIN";
    case Err::VALIDATION_FAIL: return "VALIDATION_FAIL";
    case Err::MISMATCH: return "MISMATCH";
    case Err::SIZE_GUARD: return "SIZE_GUARD";
    case Err::LABEL_DOMAIN: return "LABEL_DOMAIN";
    case Err::UNSUPPORTED_LABEL: return "UNSUPPORTED_LABEL";
    case Err::PARSE_ERROR: return "PARSE_ERROR";
    case Err::MODEL_INVALID: return "MODEL_INVALID";
    case Err::INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

std::string to_string(const Q& x) { return x.get_str(); }

std::string to_string(const QC& x) {
  if (sgn(x.im) == 0) return x.re.get_str();
  std::string s = sgn(x.re) == 0 ? "" : x.re.get_str();
  if (sgn(x.im) > 0 && !s.empty()) s += "+";
  return s + x.im.get_str() + "i";
}

std::string to_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Q parse_rational(const std::string& s) {
  auto dot = s.find('.');
  try {
    if (dot == std::string::npos) {
      Q q(s);
      q.canonicalize();
      if (sgn(q.get_den()) == 0) throw Error(Err::INVALID_INPUT, "zero denominator: " + s);
      return q;
    }
    // decimal literal, read exactly
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    mpz_class den = 1;
    for (size_t k = dot + 1; k < s.size(); ++k) den *= 10;
    if (digits.empty() || digits == "-" || digits == "+") throw Error(Err::INVALID_INPUT, s);
    if (digits[0] == '+') digits.erase(0, 1);
    Q q{mpz_class(digits), den};
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(Err::INVALID_INPUT, "not a rational: " + s);
  }
}

bool is_rational_square(const Q& x, Q* root) {
  if (sgn(x) < 0) return false;
  mpz_class n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    *root = Q(rn, rd);
    root->canonicalize();
  }
  return true;
}

Mat<double> to_double(const Mat<Q>& m) {
  Mat<double> z(m.r, m.c);
  for (size_t k = 0; k < m.a.size(); ++k) z.a[k] = m.a[k].get_d();
  return z;
}

Mat<QC> to_complex(const Mat<Q>& m) {
  Mat<QC> z(m.r, m.c);
  for (size_t k = 0; k < m.a.size(); ++k) z.a[k] = QC(m.a[k]);
  return z;
}

double max_abs(const Mat<double>& m) {
  double s = 0;
  for (double v : m.a) s = std::max(s, std::fabs(v));
  return s;
}

Q max_abs(const Mat<Q>& m) {
  Q s = 0;
  for (const auto& v : m.a)
    if (abs(v) > s) s = abs(v);
  return s;
}

std::string Scalar::str() const {
  return std::visit([](const auto& v) { return to_string(v); }, v_);
}

AnyMat AnyMat::from_scalars(int rows, int cols, const std::vector<Scalar>& e) {
  if (rows < 0 || cols < 0 || e.size() != size_t(rows) * cols)
    throw Error(Err::INVALID_INPUT, "entry count does not match shape");
  Backend b = e.empty() ? Backend::RATIONAL : e[0].backend();
  for (const auto& s : e)
    if (s.backend() != b) throw Error(Err::MIXED_BACKEND, "matrix entries use different scalar backends");
  AnyMat out;
  switch (b) {
    case Backend::RATIONAL: {
      Mat<Q> m(rows, cols);
      for (size_t k = 0; k < e.size(); ++k) m.a[k] = e[k].rational();
      out.m_ = std::move(m);
      break;
    }
    case Backend::GAUSS_RATIONAL: {
      Mat<QC> m(rows, cols);
      for (size_t k = 0; k < e.size(); ++k) m.a[k] = e[k].gauss();
      out.m_ = std::move(m);
      break;
    }
    case Backend::FLOAT64: {
      Mat<double> m(rows, cols);
      for (size_t k = 0; k < e.size(); ++k) m.a[k] = e[k].real();
      out.m_ = std::move(m);
      break;
    }
  }
  return out;
}

template <class T>
static AnyRankNull pack(const RankNull<T>& rn) {
  AnyRankNull out;
  out.rank = rn.rank;
  for (const auto& row : rn.nullspace.rows()) {
    std::vector<Scalar> v;
    for (const auto& x : row) v.emplace_back(x);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

AnyRankNull rank_nullspace(const AnyMat& m, std::optional<double> tol) {
  switch (m.backend()) {
    case Backend::RATIONAL: return pack(rank_nullspace(m.rational()));
    case Backend::GAUSS_RATIONAL: return pack(rank_nullspace(m.gauss()));
    case Backend::FLOAT64:
      if (!tol) throw Error(Err::MISSING_TOLERANCE, "float backend requires an explicit tolerance");
      return pack(rank_nullspace(m.real(), *tol));
  }
  throw Error(Err::INTERNAL, "backend");
}

}  // namespace holab
