#include "holab/polycalc.hpp"

namespace holab {

RatFunc dir_deriv(const VField& X, const RatFunc& f) {
  RatFunc s(f.nvars());
  for (size_t i = 0; i < X.size(); ++i)
    if (!X[i].is_zero()) s += X[i] * f.deriv(int(i));
  return s;
}

VField lie_bracket(const VField& X, const VField& Y) {
  VField Z(X.size());
  for (size_t j = 0; j < X.size(); ++j) Z[j] = dir_deriv(X, Y[j]) - dir_deriv(Y, X[j]);
  return Z;
}

RatFunc contract(const OneForm& w, const VField& X) {
  RatFunc s(X.empty() ? 0 : X[0].nvars());
  for (size_t i = 0; i < X.size(); ++i)
    if (!w[i].is_zero() && !X[i].is_zero()) s += w[i] * X[i];
  return s;
}

TwoForm exterior_d(const OneForm& w) {
  int n = int(w.size());
  TwoForm d(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) d.set(a, b, w[b].deriv(a) - w[a].deriv(b));
  return d;
}

OneForm lie_derivative(const VField& V, const OneForm& w) {
  int n = int(w.size());
  OneForm out(n);
  for (int i = 0; i < n; ++i) {
    RatFunc s = dir_deriv(V, w[i]);
    for (int k = 0; k < n; ++k)
      if (!w[k].is_zero()) s += w[k] * V[k].deriv(i);
    out[i] = s;
  }
  return out;
}

template <bool Sym>
static Tensor2<Sym> lie_d2(const VField& V, const Tensor2<Sym>& t) {
  int n = t.dim();
  std::vector<std::vector<RatFunc>> dV(n, std::vector<RatFunc>(n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) dV[k][i] = V[k].deriv(i);
  Tensor2<Sym> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = Sym ? i : i + 1; j < n; ++j) {
      RatFunc s = dir_deriv(V, t.at(i, j));
      for (int k = 0; k < n; ++k) {
        if (!dV[k][i].is_zero()) s += t.at(k, j) * dV[k][i];
        if (!dV[k][j].is_zero()) s += t.at(i, k) * dV[k][j];
      }
      out.set(i, j, s);
    }
  return out;
}

TwoForm lie_derivative(const VField& V, const TwoForm& w) { return lie_d2(V, w); }
SymTensor lie_derivative(const VField& V, const SymTensor& t) { return lie_d2(V, t); }

std::vector<Q> evaluate(const std::vector<RatFunc>& f, const std::vector<Q>& p, const std::string& what) {
  std::vector<Q> out;
  for (size_t i = 0; i < f.size(); ++i) {
    try {
      out.push_back(f[i].eval(p));
    } catch (const Error&) {
      throw Error(Err::POLE_AT_POINT, what + "[" + std::to_string(i) + "]");
    }
  }
  return out;
}

}  // namespace holab
