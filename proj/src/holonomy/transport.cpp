#include <array>
#include <cmath>

#include "holab/holonomy.hpp"

namespace holab {

namespace {

using UPoly = std::vector<Q>;  // coefficients low to high

UPoly up_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, Q(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

void up_add(UPoly& a, const UPoly& b, const Q& s) {
  if (a.size() < b.size()) a.resize(b.size(), Q(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
}

UPoly up_deriv(const UPoly& a) {
  UPoly d;
  for (size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * Q(long(k)));
  return d;
}

double up_eval(const UPoly& a, double t) {
  double s = 0;
  for (size_t k = a.size(); k-- > 0;) s = s * t + a[k].get_d();
  return s;
}

Q up_integral01(const UPoly& a) {
  Q s = 0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] / Q(long(k + 1));
  return s;
}

// Pull-back of a polynomial along the segment.
UPoly compose(const Poly& p, const PathSegment& seg) {
  UPoly out;
  for (const auto& [mono, c] : p.terms()) {
    UPoly t{Q(1)};
    for (int i = 0; i < p.nvars(); ++i)
      for (int e = 0; e < mono.exp(i); ++e) t = up_mul(t, seg[i]);
    up_add(out, t, c);
  }
  return out;
}

// 10-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 5> kGLx = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                                        0.8650633666889845, 0.9739065285171717};
constexpr std::array<double, 5> kGLw = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                                        0.1494513491505806, 0.0666713443086881};

double eval_checked(const RatFunc& f, const std::vector<double>& x) {
  double den = f.den().eval_d(x);
  if (std::fabs(den) < 1e-12 || !std::isfinite(den)) throw Error(Err::POLE_ON_PATH, "pole on the path");
  return f.num().eval_d(x) / den;
}

Mat<double> eval_mat(const FieldMat& F, int d, const std::vector<double>& x) {
  Mat<double> M(d, d);
  for (int k = 0; k < d * d; ++k) M.a[k] = F[k].is_zero() ? 0.0 : eval_checked(F[k], x);
  return M;
}

void check_path(const Path& path, int n) {
  if (path.empty()) throw Error(Err::INVALID_INPUT, "empty path");
  for (const auto& seg : path)
    if (int(seg.size()) != n) throw Error(Err::INVALID_INPUT, "path segment has wrong arity");
}

}  // namespace

Path square_loop(const std::vector<Q>& p, int i, int j, const Q& h) {
  const int n = int(p.size());
  std::vector<Q> corner[4] = {p, p, p, p};
  corner[1][i] += h;
  corner[2][i] += h;
  corner[2][j] += h;
  corner[3][j] += h;
  Path path;
  for (int s = 0; s < 4; ++s) {
    const auto& a = corner[s];
    const auto& b = corner[(s + 1) % 4];
    PathSegment seg(n);
    for (int k = 0; k < n; ++k) {
      Q delta = b[k] - a[k];
      seg[k] = sgn(delta) ? UPoly{a[k], delta} : UPoly{a[k]};
    }
    path.push_back(seg);
  }
  return path;
}

ThetaTransport theta_transport(const ContactModel& model, const Path& path, bool force_quadrature) {
  const int n = model.n();
  check_path(path, n);
  bool polynomial = true;
  for (const auto& t : model.theta)
    if (!t.is_polynomial()) polynomial = false;
  ThetaTransport out;
  if (polynomial) {
    Q total = 0;
    for (const auto& seg : path)
      for (int i = 0; i < n; ++i) {
        const auto& th = model.theta[i];
        if (th.is_zero()) continue;
        Poly p = th.num().scaled(Q(1) / th.den().constant_term());
        total += up_integral01(up_mul(compose(p, seg), up_deriv(seg[i])));
      }
    out.exact = total;
    out.integral = total.get_d();
  }
  if (!polynomial || force_quadrature) {
    double total = 0;
    std::vector<double> x(n);
    for (const auto& seg : path) {
      std::vector<UPoly> vel;
      for (int i = 0; i < n; ++i) vel.push_back(up_deriv(seg[i]));
      for (int k = 0; k < 10; ++k) {
        double node = k < 5 ? -kGLx[4 - k] : kGLx[k - 5];
        double w = k < 5 ? kGLw[4 - k] : kGLw[k - 5];
        double t = 0.5 * (node + 1);
        for (int i = 0; i < n; ++i) x[i] = up_eval(seg[i], t);
        double s = 0;
        for (int i = 0; i < n; ++i)
          if (!model.theta[i].is_zero()) s += eval_checked(model.theta[i], x) * up_eval(vel[i], t);
        total += 0.5 * w * s;
      }
    }
    out.integral = total;
  }
  out.factor = std::exp(-out.integral);
  return out;
}

Mat<double> parallel_transport(const Geometry& geo, const Path& path, const TransportOptions& opt) {
  const int d = geo.d, n = geo.n;
  check_path(path, n);
  if (opt.steps < 1) throw Error(Err::INVALID_INPUT, "steps must be positive");
  if (opt.conn == ConnTag::CUSTOM && !opt.custom) throw Error(Err::INVALID_INPUT, "custom extension missing");

  // -A(x, v): frame components obey Y' = -A Y.
  auto generator = [&](const std::vector<double>& x, const std::vector<double>& v) {
    std::vector<double> c(n, 0.0);
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) {
        const auto& f = geo.frame_inv[size_t(r) * n + k];
        if (!f.is_zero() && v[k] != 0) c[r] += eval_checked(f, x) * v[k];
      }
    Mat<double> A(d, d);
    for (int a = 0; a < d; ++a)
      if (c[a] != 0) A = A + scale(eval_mat(geo.conn[a], d, x), c[a]);
    const double cx = c[d];
    if (opt.conn == ConnTag::SCHOUTEN) {
      if (std::fabs(cx) > 1e-12) throw Error(Err::INVALID_INPUT, "Schouten transport needs a horizontal path");
    } else if (cx != 0) {
      Mat<double> M = eval_mat(geo.xi_op, d, x);
      switch (opt.conn) {
        case ConnTag::ADAPTED: M = M + eval_mat(geo.subtorsion, d, x); break;
        case ConnTag::CUSTOM: M = M + eval_mat(*opt.custom, d, x); break;
        case ConnTag::WAGNER: {
          std::vector<Q> px(n);
          for (int i = 0; i < n; ++i) px[i] = Q(x[i]);
          PointGeom pg(geo, px, 1);
          M = M + to_double(PointGeom::value(pg.wagner, d));
          break;
        }
        default: break;
      }
      A = A + scale(M, cx);
    }
    return A;
  };

  Mat<double> Phi = Mat<double>::identity(d);
  std::vector<double> x(n), v(n);
  for (const auto& seg : path) {
    std::vector<UPoly> vel;
    for (int i = 0; i < n; ++i) vel.push_back(up_deriv(seg[i]));
    auto rhs = [&](double t, const Mat<double>& Y) {
      for (int i = 0; i < n; ++i) {
        x[i] = up_eval(seg[i], t);
        v[i] = up_eval(vel[i], t);
      }
      return scale(generator(x, v) * Y, -1.0);
    };
    const double h = 1.0 / opt.steps;
    for (int s = 0; s < opt.steps; ++s) {
      double t = s * h;
      auto k1 = rhs(t, Phi);
      auto k2 = rhs(t + h / 2, Phi + scale(k1, h / 2));
      auto k3 = rhs(t + h / 2, Phi + scale(k2, h / 2));
      auto k4 = rhs(t + h, Phi + scale(k3, h));
      Phi = Phi + scale(k1 + scale(k2, 2.0) + scale(k3, 2.0) + k4, h / 6);
    }
  }
  return Phi;
}

Mat<Q> coordinate_curvature(const Geometry& geo, const std::vector<Q>& point, int i, int j,
                            ConnTag conn, const std::optional<FieldMat>& custom) {
  const int d = geo.d, n = geo.n;
  PointGeom pg(geo, point, 2);
  JetMat N = jm_zero(d, n);
  if (conn == ConnTag::WAGNER) N = pg.wagner;
  else if (conn == ConnTag::CUSTOM) N = pg.nomizu(Extension::CUSTOM, custom);
  else if (conn == ConnTag::ADAPTED) N = pg.subtorsion;
  std::vector<Q> cu(n), cv(n);
  for (int r = 0; r < n; ++r) {
    cu[r] = geo.frame_inv[size_t(r) * n + i].eval(point);
    cv[r] = geo.frame_inv[size_t(r) * n + j].eval(point);
  }
  Mat<Q> out(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Q c = cu[a] * cv[b];
      if (sgn(c) && a != b) out = out + scale(PointGeom::value(pg.curv(a, b, N), d), c);
    }
  for (int a = 0; a < d; ++a) {
    Q c = cu[d] * cv[a] - cu[a] * cv[d];
    if (sgn(c)) out = out + scale(PointGeom::value(pg.curv_reeb(a, N), d), c);
  }
  return out;
}

Mat<double> matrix_log(const Mat<double>& T) {
  const int d = T.r;
  Mat<double> X = T - Mat<double>::identity(d);
  if (max_abs(X) > 0.5) throw Error(Err::INVALID_INPUT, "matrix_log needs T close to the identity");
  Mat<double> out(d, d), P = X;
  for (int k = 1; k <= 80; ++k) {
    out = out + scale(P, (k % 2 ? 1.0 : -1.0) / k);
    P = P * X;
    if (max_abs(P) < 1e-300) break;
  }
  return out;
}

}  // namespace holab
