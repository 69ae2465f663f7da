#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>

#include "holab/subsym.hpp"

using namespace holab;

namespace {

using MQ = Mat<Q>;

MQ std_J(int m) {
  MQ J(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    J(m + i, i) = 1;
    J(i, m + i) = -1;
  }
  return J;
}

Err code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  return Err::INTERNAL;
}

ZooParams tf(int m, int l, int mu) { return ZooParams{ZooKind::TORSION_FAMILY, m, Q(l), Q(mu), std::nullopt}; }

}  // namespace

TEST_CASE("Heisenberg quadruple") {
  auto q = heisenberg_quadruple(3);
  auto rep = validate_quadruple(q);
  CHECK(rep.ok());
  CHECK(rep.sub_torsion_free);
  CHECK(rep.transvection);
  CHECK(killing_fingerprint(q.L).derived_series == std::vector<int>{7, 1, 0});
  auto t = transvection_restrict(q);
  CHECK(t.L.dim() == q.L.dim());
  CHECK(killing_fingerprint(t.L) == killing_fingerprint(q.L));
  auto hp = holonomy_pair(q);
  CHECK(hp.horizontal_dim == 0);
  CHECK(hp.adapted_dim == 0);
}

TEST_CASE("transvection restriction drops an extra k-direction") {
  const int m = 2;
  LocalData ld;
  ld.dim_p = 2 * m;
  ld.R_W.assign(16, MQ(4, 4));
  ld.N_W = MQ(4, 4);
  ld.Theta = MQ(4, 4);
  for (int i = 0; i < m; ++i) {
    ld.Theta(i, m + i) = 1;
    ld.Theta(m + i, i) = -1;
  }
  ld.k_span = {std_J(m)};
  auto q = from_local_data(ld);
  auto rep = validate_quadruple(q);
  CHECK(rep.ok());
  CHECK(!rep.transvection);
  auto t = transvection_restrict(q);
  CHECK(t.L.dim() == 2 * m + 1);
  CHECK(t.k_basis.empty());
  CHECK(t.h_idx.size() == 1);
  CHECK(validate_quadruple(t).transvection);
  CHECK(killing_fingerprint(t.L) == killing_fingerprint(heisenberg_table(m)));
}

TEST_CASE("torsion family quadruple with mu = 0") {
  auto q = from_local_data(torsion_family_data(3, Q(1), Q(0)));
  auto rep = validate_quadruple(q);
  CHECK(rep.ok());
  CHECK(!rep.sub_torsion_free);
  auto hp = holonomy_pair(q);
  MQ D(6, 6);
  for (int i = 0; i < 3; ++i) {
    D(i, i) = 1;
    D(3 + i, 3 + i) = -1;
  }
  // -2 tau* is the symmetric part of ad_xi, which is lambda diag(1, -1)
  CHECK(is_zero_mat(hp.tau_star + D));
  CHECK(is_zero_mat(hp.tau_star * std_J(3) + std_J(3) * hp.tau_star));
  CHECK(is_zero_mat(hp.A_xi));
}

TEST_CASE("ad_xi, A_xi and tau* of the torsion family") {
  for (auto [l, mu] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {1, -3}}) {
    auto q = from_local_data(torsion_family_data(2, Q(l), Q(mu)));
    auto hp = holonomy_pair(q);
    MQ N(4, 4);
    for (int i = 0; i < 2; ++i) {
      N(i, i) = l;
      N(i, 2 + i) = -mu;
      N(2 + i, i) = mu;
      N(2 + i, 2 + i) = -l;
    }
    CHECK(is_zero_mat(hp.ad_xi - N));
    CHECK(is_zero_mat(hp.A_xi - scale(std_J(2), Q(mu))));
    CHECK(is_zero_mat(hp.tau_star * std_J(2) + std_J(2) * hp.tau_star));
  }
}

TEST_CASE("non-invariant B is reported with a witness") {
  auto q = from_local_data(torsion_family_data(3, Q(1), Q(2)));
  q.B(0, 0) = 2;
  auto rep = validate_quadruple(q);
  CHECK(!rep.ok());
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name == "B is ad_k-invariant") {
      found = true;
      CHECK(!c.pass);
      CHECK(!c.witness.empty());
    }
  CHECK(found);
}

TEST_CASE("corrupted curvature data fails the Jacobi identity") {
  auto ld = torsion_family_data(3, Q(1), Q(2));
  const int d = 6;
  ld.R_W[0 * d + 1] = scale(ld.R_W[0 * d + 1], Q(-1));
  ld.R_W[1 * d + 0] = scale(ld.R_W[1 * d + 0], Q(-1));
  CHECK(code_of([&] { from_local_data(ld); }) == Err::JACOBI_FAIL);
  auto deg = torsion_family_data(3, Q(1), Q(2));
  deg.Theta = MQ(d, d);
  CHECK(code_of([&] { from_local_data(deg); }) == Err::INVALID_INPUT);
}

TEST_CASE("parameter domain") {
  CHECK(code_of([] { zoo(tf(3, 0, 1)); }) == Err::PARAM_DOMAIN);
  CHECK(code_of([] { zoo(tf(3, -1, 1)); }) == Err::PARAM_DOMAIN);
  CHECK(code_of([] { zoo(tf(1, 1, 1)); }) == Err::PARAM_DOMAIN);
}

TEST_CASE("torsion family case split") {
  auto t0 = std::chrono::steady_clock::now();
  struct Case {
    int l, mu;
    ZooLabel want;
  };
  for (const auto& c : std::vector<Case>{{1, 2, ZooLabel::SO_M_PLUS_2},
                                         {1, -2, ZooLabel::SO_2_M},
                                         {2, 1, ZooLabel::SO_1_M_PLUS_1},
                                         {1, 1, ZooLabel::EUCLIDEAN_MOTION},
                                         {1, -1, ZooLabel::LORENTZ_MOTION},
                                         {1, 0, ZooLabel::SO_1_M_PLUS_1}}) {
    const int m = 3;
    auto r = zoo(tf(m, c.l, c.mu));
    CAPTURE(c.l);
    CAPTURE(c.mu);
    CHECK(r.match.label == c.want);
    CHECK(r.case_split_ok);
    CHECK(r.scal_tau == Q(2 * c.mu * m * m));
    CHECK(jacobi_check(r.q.L).ok());
    CHECK(r.hol.adapted_dim - r.hol.horizontal_dim == (c.mu == 0 ? 0 : 1));
  }
  auto so5 = zoo(tf(3, 1, 2)).fingerprint;
  CHECK((so5.n_pos == 0 && so5.n_zero == 0 && so5.n_neg == 10));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 10.0);
}

TEST_CASE("zoo label survives a rational change of basis") {
  auto r = zoo(tf(2, 2, 1));
  const int n = r.q.L.dim();
  MQ P(n, n);
  for (int i = 0; i < n; ++i) {
    P(i, i) = 1;
    if (i + 1 < n) P(i, i + 1) = Q(i + 1, 3);
    if (i >= 2) P(i, i - 2) = Q(-2, 5);
  }
  auto M = r.q.L.change_basis(P);
  CHECK(jacobi_check(M).ok());
  CHECK(match_zoo(killing_fingerprint(M), 2).label == r.match.label);
}

TEST_CASE("CP^m circle bundle") {
  auto r = zoo(ZooParams{ZooKind::CPN_SPHERE, 3, Q(1), Q(0), std::nullopt});
  CHECK(r.validation.ok());
  CHECK(r.validation.sub_torsion_free);
  CHECK(r.cls_horizontal.label == HolLabel::SU_M);
  CHECK(r.cls_adapted.label == HolLabel::U_M);
  CHECK(r.hol.horizontal_dim == 8);
  CHECK(r.hol.adapted_dim == 9);
  CHECK(is_zero_mat(r.hol.A_xi - scale(std_J(3), Q(4))));
  ZooParams h{ZooKind::HRSS_CIRCLE, 3, Q(1), Q(0), local_data_of(cpn_quadruple(3))};
  auto rh = zoo(h);
  CHECK(rh.fingerprint == r.fingerprint);
  CHECK(rh.row == r.row);
}

TEST_CASE("classification rows") {
  std::vector<ZooResult> rs;
  rs.push_back(zoo(ZooParams{ZooKind::HEISENBERG, 3, Q(1), Q(0), std::nullopt}));
  rs.push_back(zoo(ZooParams{ZooKind::CPN_SPHERE, 3, Q(1), Q(0), std::nullopt}));
  rs.push_back(zoo(tf(3, 1, 2)));
  rs.push_back(zoo(tf(3, 1, -2)));
  rs.push_back(zoo(tf(3, 2, 1)));
  rs.push_back(zoo(tf(3, 1, 0)));
  auto rep = class_report(rs, true);
  CHECK(rep.all_match());
  CHECK(rs[0].row.row == "heisenberg");
  CHECK(rs[1].row.row == "s1-bundle-hrss");
  CHECK(rs[5].row.row == "tau-nonzero-scal0");
  CHECK(rs[5].row.hol_adapted == "so(m)");
  auto bad = rs;
  bad[2].row.hol_adapted = "so(m)";
  CHECK(code_of([&] { class_report(bad, true); }) == Err::MISMATCH);
}
