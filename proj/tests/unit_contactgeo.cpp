#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holab/contactgeo.hpp"
#include "support_models.hpp"

using namespace holab;

namespace {

using holab::testing::heisenberg;
using holab::testing::heisenberg_conformal;

bool all_ok(const std::vector<Check>& cs) {
  bool ok = true;
  for (const auto& c : cs)
    if (c.status == CheckStatus::FAILED) {
      MESSAGE(c.name << " failed at " << c.witness);
      ok = false;
    }
  return ok;
}

}  // namespace

TEST_CASE("flat Heisenberg: Reeb field, no torsion, flat pairing") {
  for (int m : {1, 2}) {
    Geometry geo(heisenberg(m));
    int n = 2 * m + 1;
    for (int i = 0; i < n - 1; ++i) CHECK(geo.reeb[i].is_zero());
    CHECK(geo.reeb[n - 1] == RatFunc::constant(n, 1));
    for (const auto& f : geo.subtorsion) CHECK(f.is_zero());
    CHECK(all_ok(geo.checks));
    CHECK(all_ok(identity_suite(geo)));
    PointGeom pg(geo, geo.model().base_point, 3);
    auto rep = point_report(pg);
    CHECK(rep.dtheta_beta == Q(-4 * m));
    CHECK(rep.codazzi);
    CHECK(rep.curvature_parallel);
  }
}

TEST_CASE("metric deformation gives sub-torsion half the z-derivative") {
  Geometry geo(heisenberg(1, "z"));
  CHECK(all_ok(geo.checks));
  PointGeom pg(geo, geo.model().base_point, 3);
  auto T = PointGeom::value(pg.subtorsion, 2);
  CHECK(T(0, 0) == Q(1, 2));
  CHECK(T(0, 1) == Q(1, 2));
  CHECK(all_ok(identity_suite(geo)));
}

TEST_CASE("m=2 deformation passes the identity suite") {
  Geometry geo(heisenberg(2, "z + x1*y2"));
  CHECK(all_ok(geo.checks));
  CHECK(all_ok(identity_suite(geo)));
}

TEST_CASE("pseudo-Hermitian Heisenberg") {
  Geometry geo(heisenberg(2, "", true));
  REQUIRE(geo.cr);
  CHECK(geo.cr->all());
  CHECK(all_ok(geo.checks));
  CHECK(all_ok(identity_suite(geo)));
  PointGeom pg(geo, geo.model().base_point, 3);
  auto rep = point_report(pg);
  CHECK(*rep.dtheta_beta_j == Q(4));
  CHECK(rep.ric_tw_holds);
  CHECK(rep.pseudo_einstein);
  CHECK(rep.r0_bianchi);
  CHECK(rep.r0_j_invariant);
}

TEST_CASE("pseudo-Hermitian with torsion") {
  Geometry geo(heisenberg_conformal(2, "1 + x1^2"));
  REQUIRE(geo.cr);
  CHECK(geo.cr->all());
  CHECK(all_ok(identity_suite(geo)));
  for (const auto& p : geo.sample_points(3, 7)) {
    PointGeom pg(geo, p, 3);
    auto rep = point_report(pg);
    CHECK(!is_zero_mat(rep.subtorsion));
    CHECK(rep.ric_tw_holds);
    CHECK(rep.ric_rtau);
    CHECK(rep.rtau_u);
    CHECK(rep.rtau_j_zero);
    CHECK(rep.r0_bianchi);
    CHECK(rep.r0_j_invariant);
    CHECK(rep.basic_equals_wagner);
    CHECK(rep.rho_sharp == "g^-1 rho^T");
  }
}

TEST_CASE("twisted J in dimension three") {
  Geometry geo(heisenberg(1, "", true, "z"));
  REQUIRE(geo.cr);
  CHECK(geo.cr->g_matches_dtheta_j);
  CHECK(geo.cr->tw_equals_adapted);
  CHECK(geo.cr->torsion_anticommutes_j);
  CHECK(all_ok(identity_suite(geo)));
  for (const auto& p : geo.sample_points(3, 7)) {
    PointGeom pg(geo, p, 3);
    auto rep = point_report(pg);
    CHECK(!is_zero_mat(rep.subtorsion));
    CHECK(rep.ric_tw_holds);
    CHECK(rep.rtau_u);
    CHECK(rep.rtau_j_zero);
    CHECK(rep.r0_bianchi);
    CHECK(rep.r0_j_invariant);
    CHECK(rep.ric_rtau);
    CHECK(rep.basic_equals_wagner);
  }
}

TEST_CASE("non-contact data is rejected") {
  ContactModel M = heisenberg(1);
  M.theta[0] = RatFunc(3);
  M.theta[1] = RatFunc(3);
  M.frame[0] = VField{RatFunc::constant(3, 1), RatFunc(3), RatFunc(3)};
  M.frame[1] = VField{RatFunc(3), RatFunc::constant(3, 1), RatFunc(3)};
  CHECK_THROWS_AS(Geometry{M}, Error);
  try {
    Geometry geo(M);
  } catch (const Error& e) {
    CHECK(e.code == Err::NOT_CONTACT);
  }
}
