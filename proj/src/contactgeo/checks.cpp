#include "holab/contactgeo.hpp"

namespace holab {

namespace {

using MQ = Mat<Q>;

MQ col_vec(const MQ& A, int c) {
  MQ v(A.r, 1);
  for (int i = 0; i < A.r; ++i) v(i, 0) = A(i, c);
  return v;
}

MQ unit(int d, int a) {
  MQ v(d, 1);
  v(a, 0) = 1;
  return v;
}

// (u ^ v)(w) = g(u,w) v - g(v,w) u
MQ wedge(const MQ& u, const MQ& v, const MQ& g) {
  return v * transpose(u) * g - u * transpose(v) * g;
}

std::vector<MQ> values(const std::vector<JetMat>& fam, int d) {
  std::vector<MQ> out;
  for (const auto& x : fam) out.push_back(PointGeom::value(x, d));
  return out;
}

// Ric(X,Y) = tr(Z -> R(Z,X)Y)
MQ ricci(const std::vector<MQ>& R, int d) {
  MQ ric(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) ric(a, b) += R[size_t(c) * d + a](c, b);
  return ric;
}

bool bianchi_zero(const std::vector<MQ>& R, int d, const std::vector<MQ>* rhs = nullptr) {
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int c = b + 1; c < d; ++c) {
        MQ s = col_vec(R[size_t(a) * d + b], c) + col_vec(R[size_t(b) * d + c], a) +
               col_vec(R[size_t(c) * d + a], b);
        if (rhs)
          s = s - (col_vec((*rhs)[size_t(a) * d + b], c) + col_vec((*rhs)[size_t(b) * d + c], a) +
                   col_vec((*rhs)[size_t(c) * d + a], b));
        if (!is_zero_mat(s)) return false;
      }
  return true;
}

std::vector<MQ> rotate_pairs(const std::vector<MQ>& R, const MQ& J, int d) {
  std::vector<MQ> out(size_t(d) * d, MQ(d, d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          Q k = J(c, a) * J(e, b);
          if (sgn(k) != 0) out[size_t(a) * d + b] = out[size_t(a) * d + b] + scale(R[size_t(c) * d + e], k);
        }
  return out;
}

struct Tally {
  Check c;
  explicit Tally(std::string name) { c.name = std::move(name); c.status = CheckStatus::SAMPLED; }
  void record(bool ok, int point, const std::string& what) {
    ++c.points;
    if (!ok && c.status != CheckStatus::FAILED) {
      c.status = CheckStatus::FAILED;
      c.witness = "point " + std::to_string(point) + ": " + what;
    }
  }
};

}  // namespace

std::vector<MQ> rtau_tensor(const MQ& g, const MQ& J, const MQ& tau, int d) {
  std::vector<MQ> out(size_t(d) * d, MQ(d, d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      MQ X = unit(d, a), Y = unit(d, b);
      MQ s = wedge(J * X, tau * Y, g) + wedge(tau * X, J * Y, g) + wedge(X, tau * J * Y, g) +
             wedge(tau * J * X, Y, g);
      out[size_t(a) * d + b] = scale(s, Q(-1, 2));
    }
  return out;
}

std::vector<Check> identity_suite(const Geometry& geo, const IdentityOptions& opt) {
  const int d = geo.d, n = geo.n, m = geo.m;
  auto pts = geo.sample_points(opt.points, opt.seed);

  // Metric extension by a g-skew polynomial perturbation of tau.
  FieldMat skew(size_t(d) * d, RatFunc(n));
  {
    Poly k = Poly::variable(n, 0) + Poly::variable(n, n - 1) + Poly::constant(n, 1);
    skew[1] = RatFunc(k);
    skew[size_t(d)] = -RatFunc(k);
  }
  FieldMat custom(size_t(d) * d, RatFunc(n));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      RatFunc s = geo.subtorsion[size_t(a) * d + b];
      for (int c = 0; c < d; ++c)
        if (!skew[size_t(c) * d + b].is_zero() && !geo.ginv[size_t(a) * d + c].is_zero())
          s += geo.ginv[size_t(a) * d + c] * skew[size_t(c) * d + b];
      custom[size_t(a) * d + b] = s;
    }

  Tally skewsym("curvature_skew_defect"), bianchi("schouten_bianchi"), ext_bianchi("adapted_bianchi"),
      pairs("adapted_pair_symmetry_defect"), reeb_lemma("adapted_reeb_curvature_codazzi"),
      swap_t("reeb_swap_adapted"), swap_w("reeb_swap_wagner"), swap_c("reeb_swap_metric_extension"),
      metric_w("wagner_metric_extension"), metric_c("custom_metric_extension"),
      diff("wagner_adapted_reeb_difference"), wag_trace("wagner_bivector_trace"),
      pairing("dtheta_beta_pairing"), pairing_j("dtheta_betaJ_pairing");

  for (int ip = 0; ip < int(pts.size()); ++ip) {
    PointGeom pg(geo, pts[ip], opt.order);
    MQ g = PointGeom::value(pg.g, d), W = PointGeom::value(pg.W, d);
    MQ T = PointGeom::value(pg.subtorsion, d), tl = PointGeom::value(pg.subtorsion_form, d);
    auto R = values(pg.R, d);
    std::vector<MQ> Rt(R.size()), WT(R.size());
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        WT[size_t(a) * d + b] = scale(T, W(a, b));
        Rt[size_t(a) * d + b] = R[size_t(a) * d + b] + WT[size_t(a) * d + b];
      }

    bool ok = true;
    for (int a = 0; a < d && ok; ++a)
      for (int b = 0; b < d && ok; ++b) {
        MQ gr = g * R[size_t(a) * d + b];
        ok = is_zero_mat(gr + transpose(gr) + scale(tl, 2 * W(a, b)));
      }
    skewsym.record(ok, ip, "g R + (g R)^T + 2 W tau");
    bianchi.record(bianchi_zero(R, d), ip, "cyclic sum");
    ext_bianchi.record(bianchi_zero(Rt, d, &WT), ip, "cyclic sum");

    ok = true;
    for (int a = 0; a < d && ok; ++a)
      for (int b = 0; b < d && ok; ++b)
        for (int c = 0; c < d && ok; ++c)
          for (int e = 0; e < d && ok; ++e) {
            Q lhs = (g * Rt[size_t(a) * d + b])(e, c) - (g * Rt[size_t(c) * d + e])(b, a);
            Q rhs = W(b, c) * tl(e, a) - W(a, c) * tl(e, b) - W(b, e) * tl(c, a) + W(a, e) * tl(c, b);
            ok = lhs == rhs;
          }
    pairs.record(ok, ip, "pair exchange");

    std::vector<MQ> covT(d), rxiT(d);
    for (int a = 0; a < d; ++a) {
      covT[a] = PointGeom::value(pg.cov(a, pg.subtorsion), d);
      rxiT[a] = PointGeom::value(pg.curv_reeb(a, pg.subtorsion), d);
    }
    ok = true;
    for (int a = 0; a < d && ok; ++a)
      for (int b = 0; b < d && ok; ++b)
        for (int c = 0; c < d && ok; ++c)
          ok = (g * rxiT[a])(c, b) == (g * covT[b])(c, a) - (g * covT[c])(b, a);
    reeb_lemma.record(ok, ip, "g R(xi,e_a)");

    auto swap_ok = [&](const JetMat& N) {
      std::vector<MQ> rx(d), cv(d);
      for (int a = 0; a < d; ++a) {
        rx[a] = PointGeom::value(pg.curv_reeb(a, N), d);
        cv[a] = PointGeom::value(pg.cov(a, N), d);
      }
      for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
          if (!is_zero_mat(col_vec(rx[a], b) - col_vec(rx[b], a) + col_vec(cv[a], b) - col_vec(cv[b], a)))
            return false;
      return true;
    };
    JetMat Ncustom = pg.nomizu(Extension::CUSTOM, custom);
    swap_t.record(swap_ok(pg.subtorsion), ip, "N = tau");
    swap_w.record(swap_ok(pg.wagner), ip, "N = N^W");
    swap_c.record(swap_ok(Ncustom), ip, "N = tau + skew");

    auto metric_ok = [&](const JetMat& N) {
      MQ gn = g * PointGeom::value(N, d);
      return is_zero_mat(gn + transpose(gn) - scale(tl, 2));
    };
    metric_w.record(metric_ok(pg.wagner), ip, "g N^W");
    metric_c.record(metric_ok(Ncustom), ip, "g N");

    JetMat C = jm_sub(pg.wagner, pg.subtorsion);
    ok = true;
    for (int a = 0; a < d && ok; ++a) {
      MQ lhs = PointGeom::value(pg.curv_reeb(a, pg.wagner), d) - rxiT[a] + PointGeom::value(pg.cov(a, C), d);
      ok = is_zero_mat(lhs);
    }
    diff.record(ok, ip, "R^W(xi) - R^tau(xi) + nabla C");

    MQ beta = PointGeom::value(pg.beta, d);
    MQ rw(d, d);
    Q pair(0);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        pair += W(a, b) * beta(a, b);
        if (sgn(beta(a, b))) rw = rw + scale(PointGeom::value(pg.curv(a, b, pg.wagner), d), beta(a, b));
      }
    wag_trace.record(is_zero_mat(rw), ip, "R^W(beta)");
    pairing.record(pair == Q(-4 * m), ip, "<dtheta,beta> = " + to_string(pair));
    if (pg.J) {
      MQ J = PointGeom::value(*pg.J, d);
      MQ bj = -(J * PointGeom::value(pg.ginv, d));
      Q pj(0);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) pj += W(a, b) * bj(a, b);
      pairing_j.record(pj == Q(2 * m), ip, "<dtheta,beta_J> = " + to_string(pj));
    }
  }
  std::vector<Check> out = {skewsym.c, bianchi.c, ext_bianchi.c, pairs.c, reeb_lemma.c, swap_t.c,
                            swap_w.c, swap_c.c, metric_w.c, metric_c.c, diff.c, wag_trace.c, pairing.c};
  if (geo.model().J) out.push_back(pairing_j.c);
  return out;
}

bool extension_is_metric(const PointGeom& pg, const JetMat& nomizu) {
  const int d = pg.d;
  MQ gn = PointGeom::value(pg.g, d) * PointGeom::value(nomizu, d);
  return is_zero_mat(gn + transpose(gn) - scale(PointGeom::value(pg.subtorsion_form, d), 2));
}

PointReport point_report(const PointGeom& pg) {
  const int d = pg.d, m = d / 2;
  PointReport r;
  r.point = pg.point;
  MQ g = PointGeom::value(pg.g, d), ginv = PointGeom::value(pg.ginv, d), W = PointGeom::value(pg.W, d);
  MQ T = PointGeom::value(pg.subtorsion, d), tl = PointGeom::value(pg.subtorsion_form, d);
  r.subtorsion = T;
  r.wagner = PointGeom::value(pg.wagner, d);
  MQ beta = PointGeom::value(pg.beta, d);
  r.dtheta_beta = 0;
  for (int k = 0; k < d * d; ++k) r.dtheta_beta += W.a[k] * beta.a[k];

  std::vector<JetMat> Rt(size_t(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) Rt[size_t(a) * d + b] = pg.curv(a, b, pg.subtorsion);
  auto Rv = values(Rt, d);

  std::vector<MQ> covT(d);
  r.subtorsion_parallel = true;
  r.reeb_curvature_zero = true;
  for (int a = 0; a < d; ++a) {
    covT[a] = PointGeom::value(pg.cov(a, pg.subtorsion), d);
    if (!is_zero_mat(covT[a])) r.subtorsion_parallel = false;
    if (!is_zero_mat(PointGeom::value(pg.curv_reeb(a, pg.subtorsion), d))) r.reeb_curvature_zero = false;
  }
  r.codazzi = true;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      if (!is_zero_mat(col_vec(covT[a], b) - col_vec(covT[b], a))) r.codazzi = false;

  r.dtheta_parallel = true;
  r.curvature_parallel = true;
  for (int c = 0; c < d; ++c) {
    const JetMat& G = pg.conn[c];
    JetMat dw = jm_sub(jm_sub(pg.along(c, pg.W), jm_mul(jm_transpose(G, d), pg.W, d)), jm_mul(pg.W, G, d));
    if (!is_zero_mat(PointGeom::value(dw, d))) r.dtheta_parallel = false;
    for (int a = 0; a < d && r.curvature_parallel; ++a)
      for (int b = a + 1; b < d && r.curvature_parallel; ++b) {
        MQ s = PointGeom::value(pg.cov(c, Rt[size_t(a) * d + b]), d);
        for (int e = 0; e < d; ++e) {
          Q ga = pg.gamma[(size_t(c) * d + a) * d + e].value();
          Q gb = pg.gamma[(size_t(c) * d + b) * d + e].value();
          if (sgn(ga)) s = s - scale(Rv[size_t(e) * d + b], ga);
          if (sgn(gb)) s = s - scale(Rv[size_t(a) * d + e], gb);
        }
        if (!is_zero_mat(s)) r.curvature_parallel = false;
      }
  }

  // tau spectrum; tau is g-self-adjoint, so geometric multiplicities add up when exact.
  auto cp = charpoly(T);
  int found = 0;
  for (const Q& root : rational_roots(cp)) {
    int mult = d - rank_nullspace(T - scale(MQ::identity(d), root)).rank;
    for (int k = 0; k < mult; ++k) r.tau_eigen_exact.push_back(root);
    found += mult;
  }
  r.float_spectrum = found < d;
  for (const auto& z : poly_roots(cp)) r.tau_eigen_float.push_back(z.real());
  std::sort(r.tau_eigen_float.begin(), r.tau_eigen_float.end());
  MQ T2 = T * T;
  r.tau_squared_scalar = is_zero_mat(T2 - scale(MQ::identity(d), T2(0, 0)));

  r.psi = mat_inverse(W) * g;
  MQ gp = g * r.psi;
  r.psi_skew = is_zero_mat(gp + transpose(gp));
  MQ p2 = r.psi * r.psi;
  if (is_zero_mat(p2 - scale(MQ::identity(d), p2(0, 0))) && sgn(p2(0, 0)) < 0) {
    r.psi_mu_squared = -p2(0, 0);
    Q mu;
    if (is_rational_square(*r.psi_mu_squared, &mu)) r.psi_j = scale(r.psi, Q(1) / mu);
  }

  if (!pg.J) return r;
  r.has_cr = true;
  MQ J = PointGeom::value(*pg.J, d);
  MQ bj = -(J * ginv);
  Q pj(0);
  for (int k = 0; k < d * d; ++k) pj += W.a[k] * bj.a[k];
  r.dtheta_beta_j = pj;

  MQ ric = ricci(Rv, d);
  r.rho = MQ(d, d);
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) {
      if (sgn(ginv(u, v)) == 0) continue;
      MQ rj(d, d);
      for (int c = 0; c < d; ++c)
        if (sgn(J(c, u))) rj = rj + scale(Rv[size_t(c) * d + v], J(c, u));
      MQ grj = g * rj;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) r.rho(a, b) += Q(1, 2) * ginv(u, v) * grj(b, a);
    }
  r.scal = 0;
  for (int k = 0; k < d * d; ++k) r.scal += ginv.a[k] * ric.a[k];
  r.ric_tw_holds = is_zero_mat(ric - r.rho * J - scale(tl * J, Q(m - 1)));
  r.pseudo_einstein = is_zero_mat(r.rho - scale(W, r.scal / Q(2 * m)));
  MQ nw = PointGeom::value(pg.wagner, d);
  if (is_zero_mat(nw - T - scale(ginv * transpose(r.rho), Q(1, m)))) r.rho_sharp = "g^-1 rho^T";
  else if (is_zero_mat(nw - T - scale(ginv * r.rho, Q(1, m)))) r.rho_sharp = "g^-1 rho";
  r.basic_equals_wagner = !r.rho_sharp.empty();

  auto Rtau = rtau_tensor(g, J, T, d);
  auto RtauJ = rotate_pairs(Rtau, J, d);
  r.rtau_u = true;
  for (size_t k = 0; k < Rtau.size(); ++k)
    if (!is_zero_mat(RtauJ[k] + Rtau[k])) r.rtau_u = false;
  MQ rj(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (sgn(bj(a, b))) rj = rj + scale(Rtau[size_t(a) * d + b], bj(a, b));
  r.rtau_j_zero = is_zero_mat(rj);
  std::vector<MQ> R0(Rtau.size());
  for (size_t k = 0; k < Rtau.size(); ++k) R0[k] = Rv[k] - Rtau[k];
  r.r0_bianchi = bianchi_zero(R0, d);
  auto R0J = rotate_pairs(R0, J, d);
  r.r0_j_invariant = true;
  for (size_t k = 0; k < R0.size(); ++k)
    if (!is_zero_mat(R0J[k] - R0[k])) r.r0_j_invariant = false;
  r.ric_rtau = is_zero_mat(ricci(Rtau, d) - scale(tl * J, Q(m - 1)));
  return r;
}

}  // namespace holab
