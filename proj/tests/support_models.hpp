#pragma once
// Heisenberg-coordinate model builders shared by the tests.
#include "holab/contactgeo.hpp"

namespace holab::testing {

// theta = dz - sum y_i dx_i + sum x_i dy_i; X_i = dx_i + y_i dz, Y_i = dy_i - x_i dz.
inline ContactModel heisenberg(int m, const std::string& metric_expr_s = "", bool with_j = false,
                        const std::string& twist = "") {
  ContactModel M;
  M.name = "heis";
  M.m = m;
  int n = 2 * m + 1, d = 2 * m;
  for (int i = 1; i <= m; ++i) M.vars.push_back("x" + std::to_string(i));
  for (int i = 1; i <= m; ++i) M.vars.push_back("y" + std::to_string(i));
  M.vars.push_back("z");
  auto P = [&](const std::string& s) { return parse_ratfunc(s, M.vars); };
  M.theta.assign(n, RatFunc(n));
  for (int i = 0; i < m; ++i) {
    M.theta[i] = P("-" + M.vars[m + i]);
    M.theta[m + i] = P(M.vars[i]);
  }
  M.theta[n - 1] = P("1");
  for (int i = 0; i < m; ++i) {
    VField X(n, RatFunc(n)), Y(n, RatFunc(n));
    X[i] = P("1");
    X[n - 1] = P(M.vars[m + i]);
    Y[m + i] = P("1");
    Y[n - 1] = P("-" + M.vars[i]);
    M.frame.push_back(X);
    M.frame.push_back(Y);
  }
  // reorder to X_1..X_m, Y_1..Y_m
  std::vector<VField> fr;
  for (int i = 0; i < m; ++i) fr.push_back(M.frame[2 * i]);
  for (int i = 0; i < m; ++i) fr.push_back(M.frame[2 * i + 1]);
  M.frame = fr;
  M.metric.assign(size_t(d) * d, RatFunc(n));
  for (int a = 0; a < d; ++a) M.metric[size_t(a) * d + a] = P(with_j ? "2" : "1");
  if (!metric_expr_s.empty()) {
    // z-dependent symmetric perturbation in the (0,1) slot plus a diagonal stretch
    M.metric[0] = P("1 + " + metric_expr_s);
    M.metric[1] = P(metric_expr_s);
    M.metric[size_t(d)] = P(metric_expr_s);
  }
  if (with_j) {
    M.J = FieldMat(size_t(d) * d, RatFunc(n));
    for (int i = 0; i < m; ++i) {
      (*M.J)[size_t(m + i) * d + i] = P("1");
      (*M.J)[size_t(i) * d + m + i] = P("-1");
    }
    if (!twist.empty()) {
      // J = A J0 A^-1 with A = I + t N, N symplectic nilpotent in the (x1,y1) block; g = W J.
      std::string t = twist;
      FieldMat& Jm = *M.J;
      Jm[0] = P(t);
      Jm[size_t(m) * d + m] = P("-(" + t + ")");
      Jm[m] = P("-1 - (" + t + ")^2");
      FieldMat W(size_t(d) * d, RatFunc(n));
      for (int i = 0; i < m; ++i) {
        W[size_t(i) * d + m + i] = P("2");
        W[size_t(m + i) * d + i] = P("-2");
      }
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          RatFunc s(n);
          for (int c = 0; c < d; ++c) s += W[size_t(a) * d + c] * Jm[size_t(c) * d + b];
          M.metric[size_t(a) * d + b] = s;
        }
    }
  }
  M.base_point.assign(n, Q(0));
  return M;
}


// theta' = lambda theta on the standard CR structure. E_1 is rescaled by
// lambda so that (E, reeb) stays unimodular; g is the Levi form dtheta'(., J .).
inline ContactModel heisenberg_conformal(int m, const std::string& lambda) {
  ContactModel M = heisenberg(m, "", true);
  int n = 2 * m + 1, d = 2 * m;
  RatFunc lam = parse_ratfunc(lambda, M.vars);
  for (auto& c : M.theta) c *= lam;
  for (auto& c : M.frame[0]) c *= lam;
  FieldMat& J = *M.J;
  J[size_t(m) * d] = lam;
  J[size_t(m)] = -(RatFunc::constant(n, 1) / lam);
  TwoForm dth = exterior_d(M.theta);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      RatFunc s(n);
      for (int c = 0; c < d; ++c) {
        RatFunc w = dth(M.frame[a], M.frame[c]);
        if (!w.is_zero() && !J[size_t(c) * d + b].is_zero()) s += w * J[size_t(c) * d + b];
      }
      M.metric[size_t(a) * d + b] = s;
    }
  return M;
}

}  // namespace holab::testing
