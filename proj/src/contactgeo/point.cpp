#include "holab/contactgeo.hpp"

namespace holab {

JetMat jm_zero(int d, int nvars) { return JetMat(size_t(d) * d, Jet::constant(nvars, 0)); }

bool jm_is_zero(const JetMat& A) {
  for (const auto& x : A)
    if (!x.is_zero()) return false;
  return true;
}

JetMat jm_mul(const JetMat& A, const JetMat& B, int d) {
  JetMat C = jm_zero(d, A[0].nvars());
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const Jet& x = A[size_t(i) * d + k];
      if (x.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        const Jet& y = B[size_t(k) * d + j];
        if (!y.is_zero()) C[size_t(i) * d + j] += x * y;
      }
    }
  return C;
}

JetMat jm_add(const JetMat& A, const JetMat& B) {
  JetMat C = A;
  for (size_t k = 0; k < C.size(); ++k)
    if (!B[k].is_zero()) C[k] += B[k];
  return C;
}

JetMat jm_sub(const JetMat& A, const JetMat& B) {
  JetMat C = A;
  for (size_t k = 0; k < C.size(); ++k)
    if (!B[k].is_zero()) C[k] -= B[k];
  return C;
}

JetMat jm_scale(const JetMat& A, const Jet& s) {
  JetMat C = A;
  for (auto& x : C)
    if (!x.is_zero()) x *= s;
  return C;
}

JetMat jm_comm(const JetMat& A, const JetMat& B, int d) {
  if (jm_is_zero(A) || jm_is_zero(B)) return jm_zero(d, A[0].nvars());
  return jm_sub(jm_mul(A, B, d), jm_mul(B, A, d));
}

JetMat jm_transpose(const JetMat& A, int d) {
  JetMat C = A;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) C[size_t(i) * d + j] = A[size_t(j) * d + i];
  return C;
}

JetMat jm_inverse(const JetMat& A0, int d) {
  int nv = A0[0].nvars();
  JetMat A = A0, B = jm_zero(d, nv);
  for (int i = 0; i < d; ++i) B[size_t(i) * d + i] = Jet::constant(nv, 1);
  for (int c = 0; c < d; ++c) {
    int p = -1;
    for (int r = c; r < d; ++r)
      if (sgn(A[size_t(r) * d + c].poly().constant_term()) != 0) {
        p = r;
        break;
      }
    if (p < 0) throw Error(Err::SINGULAR, "jet matrix is singular at the point");
    for (int j = 0; j < d; ++j) {
      std::swap(A[size_t(p) * d + j], A[size_t(c) * d + j]);
      std::swap(B[size_t(p) * d + j], B[size_t(c) * d + j]);
    }
    Jet inv = A[size_t(c) * d + c].inverse();
    for (int j = 0; j < d; ++j) {
      if (!A[size_t(c) * d + j].is_zero()) A[size_t(c) * d + j] *= inv;
      if (!B[size_t(c) * d + j].is_zero()) B[size_t(c) * d + j] *= inv;
    }
    for (int r = 0; r < d; ++r) {
      if (r == c) continue;
      Jet f = A[size_t(r) * d + c];
      if (f.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (!A[size_t(c) * d + j].is_zero()) A[size_t(r) * d + j] -= f * A[size_t(c) * d + j];
        if (!B[size_t(c) * d + j].is_zero()) B[size_t(r) * d + j] -= f * B[size_t(c) * d + j];
      }
    }
  }
  return B;
}

JetMat PointGeom::lift(const FieldMat& f) const {
  JetMat out;
  out.reserve(f.size());
  for (const auto& x : f) out.push_back(Jet::of(x, point, order));
  return out;
}

Mat<Q> PointGeom::value(const JetMat& A, int d) {
  Mat<Q> m(d, d);
  for (int k = 0; k < d * d; ++k) m.a[k] = A[k].value();
  return m;
}

PointGeom::PointGeom(const Geometry& geo_, const std::vector<Q>& p, int ord)
    : geo(geo_), point(p), d(geo_.d), n(geo_.n), order(ord) {
  SeriesOrderScope scope(ord);
  const auto& M = geo.model();
  frame.resize(d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < n; ++i) frame[a].push_back(Jet::of(M.frame[a][i], point, order));
  for (int i = 0; i < n; ++i) reeb.push_back(Jet::of(geo.reeb[i], point, order));
  g = lift(geo.g);
  ginv = lift(geo.ginv);
  W = lift(geo.W);
  subtorsion_form = lift(geo.subtorsion_form);
  subtorsion = lift(geo.subtorsion);
  xi_op = lift(geo.xi_op);
  if (M.J) J = lift(*M.J);
  for (const auto& c : geo.conn) conn.push_back(lift(c));
  bracket = lift(geo.bracket);
  reeb_bracket = lift(geo.reeb_bracket);
  gamma = lift(geo.gamma);

  R.assign(size_t(d) * d, jm_zero(d, n));
  JetMat none = jm_zero(d, n);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      R[size_t(a) * d + b] = curv(a, b, none);
      JetMat neg = R[size_t(a) * d + b];
      for (auto& x : neg) x = -x;
      R[size_t(b) * d + a] = neg;
    }
  beta = jm_inverse(W, d);
  for (auto& x : beta) x *= Jet::constant(n, 2);
  wagner = jm_scale(contract(beta, R), Jet::constant(n, Q(1, 2 * d)));
}

Jet PointGeom::along(int a, const Jet& f) const {
  Jet s = Jet::constant(n, 0);
  for (int i = 0; i < n; ++i)
    if (!frame[a][i].is_zero()) {
      Jet df = f.deriv(i);
      if (!df.is_zero()) s += frame[a][i] * df;
      else if (df.ord() < s.ord()) s += df;  // keep the order bookkeeping honest
    }
  return s;
}

Jet PointGeom::along_reeb(const Jet& f) const {
  Jet s = Jet::constant(n, 0);
  for (int i = 0; i < n; ++i)
    if (!reeb[i].is_zero()) {
      Jet df = f.deriv(i);
      if (!df.is_zero()) s += reeb[i] * df;
      else if (df.ord() < s.ord()) s += df;
    }
  return s;
}

JetMat PointGeom::along(int a, const JetMat& A) const {
  JetMat out = A;
  for (size_t k = 0; k < A.size(); ++k) out[k] = along(a, A[k]);
  return out;
}

JetMat PointGeom::along_reeb(const JetMat& A) const {
  JetMat out = A;
  for (size_t k = 0; k < A.size(); ++k) out[k] = along_reeb(A[k]);
  return out;
}

JetMat PointGeom::cov(int a, const JetMat& A) const {
  return jm_add(along(a, A), jm_comm(conn[a], A, d));
}

JetMat PointGeom::cov_reeb(const JetMat& N, const JetMat& A) const {
  return jm_add(along_reeb(A), jm_comm(jm_add(xi_op, N), A, d));
}

JetMat PointGeom::curv(int a, int b, const JetMat& N) const {
  JetMat r = jm_sub(along(a, conn[b]), along(b, conn[a]));
  r = jm_add(r, jm_comm(conn[a], conn[b], d));
  for (int e = 0; e < d; ++e) {
    const Jet& c = bracket[(size_t(a) * d + b) * d + e];
    if (!c.is_zero()) r = jm_sub(r, jm_scale(conn[e], c));
  }
  const Jet& w = W[size_t(a) * d + b];
  if (!w.is_zero()) r = jm_add(r, jm_scale(jm_add(xi_op, N), w));
  return r;
}

JetMat PointGeom::curv_reeb(int a, const JetMat& N) const {
  JetMat M = jm_add(xi_op, N);
  JetMat r = jm_sub(along_reeb(conn[a]), along(a, M));
  r = jm_add(r, jm_comm(M, conn[a], d));
  for (int e = 0; e < d; ++e) {
    const Jet& c = reeb_bracket[size_t(a) * d + e];
    if (!c.is_zero()) r = jm_sub(r, jm_scale(conn[e], c));
  }
  return r;
}

JetMat PointGeom::contract(const JetMat& bv, const std::vector<JetMat>& form) const {
  JetMat s = jm_zero(d, n);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Jet& c = bv[size_t(a) * d + b];
      if (!c.is_zero() && !jm_is_zero(form[size_t(a) * d + b])) s = jm_add(s, jm_scale(form[size_t(a) * d + b], c));
    }
  return s;
}

JetMat PointGeom::nomizu(Extension e, const std::optional<FieldMat>& custom) const {
  switch (e) {
    case Extension::ADAPTED: return subtorsion;
    case Extension::WAGNER: return wagner;
    case Extension::CUSTOM:
      if (!custom) throw Error(Err::INVALID_INPUT, "custom extension needs an endomorphism");
      return lift(*custom);
  }
  return subtorsion;
}

}  // namespace holab
