#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "holab/numkit.hpp"

using namespace holab;

static Mat<Q> qmat(int r, int c, std::vector<int> v) {
  Mat<Q> m(r, c);
  for (size_t k = 0; k < v.size(); ++k) m.a[k] = v[k];
  return m;
}

TEST_CASE("rank and nullspace over Q") {
  auto m = qmat(3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 1, 0, 1, 0});
  auto rn = rank_nullspace(m);
  CHECK(rn.rank == 2);
  CHECK(rn.nullspace.dim() == 2);
  for (const auto& v : rn.nullspace.rows()) {
    auto col = unflatten(v, 4, 1);
    CHECK(is_zero_mat(m * col));
  }
}

TEST_CASE("Bareiss rref matches hand reduction") {
  Mat<Q> m(2, 3);
  m(0, 0) = Q(1, 2); m(0, 1) = Q(1, 3); m(0, 2) = 1;
  m(1, 0) = Q(1, 4); m(1, 1) = Q(1, 5); m(1, 2) = 0;
  auto e = rref(m);
  CHECK(e.rank == 2);
  CHECK(e.rows(0, 0) == 1);
  CHECK(e.rows(1, 1) == 1);
  CHECK(e.rows(0, 1) == 0);
}

TEST_CASE("inverse and singular") {
  auto m = qmat(2, 2, {2, 1, 1, 1});
  auto inv = mat_inverse(m);
  CHECK(is_zero_mat(m * inv - Mat<Q>::identity(2)));
  CHECK_THROWS_AS(mat_inverse(qmat(2, 2, {1, 2, 2, 4})), Error);
}

TEST_CASE("gaussian rational rank") {
  Mat<QC> m(2, 2);
  m(0, 0) = QC(Q(1), Q(1));
  m(0, 1) = QC(Q(2), Q(0));
  m(1, 0) = QC(Q(0), Q(2));  // i * (1+i) = -1+i ... row 2 = (1+i) * row 1 ?
  m(1, 1) = QC(Q(2), Q(2));
  // (1+i)*(1+i) = 2i, (1+i)*2 = 2+2i: rank 1
  CHECK(rank_nullspace(m).rank == 1);
}

TEST_CASE("mixed backend and missing tolerance") {
  std::vector<Scalar> mixed = {Scalar(Q(1)), Scalar(0.5), Scalar(Q(0)), Scalar(Q(1))};
  CHECK_THROWS_WITH_AS(AnyMat::from_scalars(2, 2, mixed), doctest::Contains("MIXED_BACKEND"), Error);
  std::vector<Scalar> fl = {Scalar(1.0), Scalar(2.0), Scalar(2.0), Scalar(4.0)};
  auto am = AnyMat::from_scalars(2, 2, fl);
  CHECK_THROWS_WITH_AS(rank_nullspace(am, std::nullopt), doctest::Contains("MISSING_TOLERANCE"), Error);
  CHECK(rank_nullspace(am, 1e-9).rank == 1);
}

TEST_CASE("bracket closure of so(3) generators") {
  auto E = [](int i, int j) {
    Mat<Q> m(3, 3);
    m(j, i) = 1;
    m(i, j) = -1;
    return m;
  };
  auto cl = bracket_closure<Q>({E(0, 1), E(1, 2)}, 3);
  CHECK(cl.fixpoint);
  CHECK(cl.span.dim() == 3);
  auto cl2 = bracket_closure<Q>({E(0, 1), E(1, 2)}, 3, 0);
  CHECK_FALSE(cl2.fixpoint);
}

TEST_CASE("commutant and complex structures") {
  // u(1) inside so(2) acting on R^2: commutant is C = span(I, J)
  Mat<Q> J = qmat(2, 2, {0, -1, 1, 0});
  auto c = commutant<Q>({J}, 2);
  CHECK(c.dim() == 2);
  auto cs = invariant_complex_structures({J}, Mat<Q>::identity(2));
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].exact);
  CHECK(is_zero_mat(cs[0].exact_J * cs[0].exact_J + Mat<Q>::identity(2)));
}

TEST_CASE("charpoly, rational roots, inertia") {
  auto m = qmat(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, -1});
  auto p = charpoly(m);
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -1);
  CHECK(roots[2] == 3);
  auto in = inertia(qmat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 5}));
  CHECK(in.pos == 2);
  CHECK(in.neg == 1);
  CHECK(in.zero == 0);
}

TEST_CASE("cayley rotation is orthogonal") {
  auto S = qmat(3, 3, {0, 1, 2, -1, 0, 3, -2, -3, 0});
  auto R = cayley(S);
  CHECK(is_zero_mat(transpose(R) * R - Mat<Q>::identity(3)));
}

TEST_CASE("float rref uses tolerance") {
  Mat<double> m(2, 2);
  m(0, 0) = 1; m(0, 1) = 1; m(1, 0) = 1; m(1, 1) = 1 + 1e-12;
  CHECK(rank_nullspace(m, 1e-9).rank == 1);
  CHECK(rank_nullspace(m, 1e-14).rank == 2);
}
