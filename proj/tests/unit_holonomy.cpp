#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "holab/holonomy.hpp"
#include "support_models.hpp"

using namespace holab;
using holab::testing::heisenberg;
using holab::testing::heisenberg_conformal;

namespace {

using MQ = Mat<Q>;

// Complex matrix A + iB acting on (e, Je).
MQ realify(const MQ& A, const MQ& B) {
  int m = A.r;
  MQ X(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      X(i, j) = A(i, j);
      X(m + i, m + j) = A(i, j);
      X(i, m + j) = -B(i, j);
      X(m + i, j) = B(i, j);
    }
  return X;
}

MQ elem(int m, int i, int j) {
  MQ E(m, m);
  E(i, j) = 1;
  return E;
}

std::vector<MQ> so_lagrangian(int m) {
  std::vector<MQ> h;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) h.push_back(realify(elem(m, i, j) - elem(m, j, i), MQ(m, m)));
  return h;
}

std::vector<MQ> su(int m) {
  auto h = so_lagrangian(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) h.push_back(realify(MQ(m, m), elem(m, i, j) + elem(m, j, i)));
  for (int i = 0; i + 1 < m; ++i) h.push_back(realify(MQ(m, m), elem(m, i, i) - elem(m, i + 1, i + 1)));
  return h;
}

MQ std_J(int m) { return realify(MQ(m, m), MQ::identity(m)); }

std::vector<MQ> conjugate(const std::vector<MQ>& h, const MQ& R) {
  std::vector<MQ> out;
  for (const auto& H : h) out.push_back(R * H * transpose(R));
  return out;
}

MQ some_rotation(int n) {
  MQ S(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      S(i, j) = Q(i + 2 * j + 1, 7);
      S(i, j).canonicalize();
      S(j, i) = -S(i, j);
    }
  return cayley(S);
}

HolonomyReport hol(const Geometry& geo, HolMode mode, ConnTag conn, int depth = 2) {
  HolonomyOptions o;
  o.mode = mode;
  o.conn = conn;
  o.depth = depth;
  return infinitesimal_holonomy(geo, geo.model().base_point, o);
}

}  // namespace

TEST_CASE("classification certificates on model subalgebras") {
  for (int m : {2, 3}) {
    auto g = MQ::identity(2 * m);
    auto u = su(m);
    u.push_back(std_J(m));
    auto so1 = so_lagrangian(m);
    so1.push_back(std_J(m));
    CHECK(classify_subalgebra(su(m), g, m).label == HolLabel::SU_M);
    CHECK(classify_subalgebra(u, g, m).label == HolLabel::U_M);
    CHECK(classify_subalgebra(so1, g, m).label == HolLabel::SO_M_PLUS_U1);
    CHECK(classify_subalgebra({}, g, m).label == HolLabel::TRIVIAL);
    if (m >= 3) CHECK(classify_subalgebra(so_lagrangian(m), g, m).label == HolLabel::SO_M_LAGRANGIAN);
  }
}

TEST_CASE("classification is stable under orthogonal conjugation") {
  const int m = 3;
  auto g = MQ::identity(2 * m);
  auto R = some_rotation(2 * m);
  CHECK(is_zero_mat(transpose(R) * R - g));
  auto u = su(m);
  u.push_back(std_J(m));
  auto so1 = so_lagrangian(m);
  so1.push_back(std_J(m));
  for (const auto& h : {su(m), u, so1, so_lagrangian(m)}) {
    auto a = classify_subalgebra(h, g, m);
    auto b = classify_subalgebra(conjugate(h, R), g, m);
    CHECK(a.label == b.label);
    CHECK(a.fp.str() == b.fp.str());
  }
}

TEST_CASE("dimension alone does not assign a label") {
  // 3-dimensional so(3) acting irreducibly on a 3-plane plus a trivial 3-plane: dim so(3) but no J.
  const int m = 3;
  std::vector<MQ> h;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      MQ X(6, 6);
      X(i, j) = 1;
      X(j, i) = -1;
      h.push_back(X);
    }
  auto c = classify_subalgebra(h, MQ::identity(6), m);
  CHECK(c.fp.dim == 3);
  CHECK(c.label == HolLabel::OTHER);
  CHECK(c.fp.fixed_dim == 3);
  CHECK(c.fp.sym_commutant_dim == 7);
}

TEST_CASE("isotypic decomposition of the diagonal so(m)") {
  auto dec = isotypic_decomposition(so_lagrangian(3), MQ::identity(6));
  CHECK(dec.complete);
  REQUIRE(dec.blocks.size() == 2);
  CHECK(dec.blocks[0].basis.c == 3);
  CHECK(dec.blocks[1].basis.c == 3);
  auto u = su(3);
  u.push_back(std_J(3));
  CHECK(isotypic_decomposition(u, MQ::identity(6)).blocks.size() == 1);
}

TEST_CASE("flat models have trivial holonomy") {
  for (int m : {2, 3}) {
    Geometry geo(heisenberg(m, "", true));
    for (auto mode : {HolMode::HORIZONTAL, HolMode::FULL}) {
      auto r = hol(geo, mode, mode == HolMode::FULL ? ConnTag::WAGNER : ConnTag::SCHOUTEN);
      CHECK(r.dim() == 0);
      CHECK(r.cls.label == HolLabel::TRIVIAL);
      CHECK(r.stabilized);
    }
  }
}

TEST_CASE("Wagner extension reproduces the horizontal algebra") {
  for (const auto& M : {heisenberg(2, "z"), heisenberg(3, "x1*y2"), heisenberg_conformal(2, "1 + x1^2"),
                        heisenberg(2, "z*x1")}) {
    Geometry geo(M);
    auto h = hol(geo, HolMode::HORIZONTAL, ConnTag::SCHOUTEN);
    auto w = hol(geo, HolMode::FULL, ConnTag::WAGNER);
    CHECK(h.fixpoint);
    CHECK(w.extension_metric);
    CHECK(h.span.same_span(w.span));
  }
}

TEST_CASE("pseudo-Hermitian torsion model has unitary holonomy") {
  Geometry geo(heisenberg_conformal(2, "1 + x1^2"));
  auto r = hol(geo, HolMode::HORIZONTAL, ConnTag::SCHOUTEN);
  CHECK(r.cls.label == HolLabel::U_M);
  CHECK(r.dims_by_depth == std::vector<int>{4, 4, 4});
}

TEST_CASE("depth outside the range is rejected") {
  Geometry geo(heisenberg(2));
  CHECK_THROWS_AS(hol(geo, HolMode::HORIZONTAL, ConnTag::SCHOUTEN, 5), Error);
  CHECK_THROWS_AS(hol(geo, HolMode::FULL, ConnTag::SCHOUTEN), Error);
}

TEST_CASE("dichotomy on Codazzi models") {
  for (const auto& M : {heisenberg(1, "z"), heisenberg(2, "z"), heisenberg_conformal(2, "1 + x1^2")}) {
    Geometry geo(M);
    auto dr = dichotomy_report(geo, M.base_point);
    CHECK(!dr.violation);
    if (dr.codazzi) CHECK(dr.quotient_dim <= 1);
  }
}

TEST_CASE("identity extension is not metric on a torsion-free model") {
  Geometry geo(heisenberg(2, "x1"));
  PointGeom pg(geo, geo.model().base_point, 2);
  FieldMat I(16, RatFunc(5));
  for (int a = 0; a < 4; ++a) I[a * 4 + a] = RatFunc::constant(5, 1);
  CHECK(!extension_is_metric(pg, pg.lift(I)));
  CHECK(extension_is_metric(pg, pg.subtorsion));
}

TEST_CASE("small-loop transport matches curvature") {
  Geometry geo(heisenberg(2, "z"));
  auto p = geo.model().base_point;
  auto R = to_double(coordinate_curvature(geo, p, 0, 2, ConnTag::ADAPTED));
  CHECK(max_abs(R) > 0.1);
  double errs[2];
  for (int k = 0; k < 2; ++k) {
    Q h(1, 16 << k);
    TransportOptions o;
    o.steps = 200;
    auto T = parallel_transport(geo, square_loop(p, 0, 2, h), o);
    double hd = h.get_d();
    errs[k] = max_abs(matrix_log(T) + scale(R, hd * hd));
  }
  CHECK(std::log2(errs[0] / errs[1]) >= 2.7);
}

TEST_CASE("transport is orthogonal along closed loops") {
  Geometry geo(heisenberg_conformal(2, "1 + x1^2"));
  auto p = geo.model().base_point;
  TransportOptions o;
  o.steps = 1000;
  auto T = parallel_transport(geo, square_loop(p, 0, 4, Q(1, 3)), o);
  auto g = to_double(PointGeom::value(PointGeom(geo, p, 0).g, 4));
  CHECK(max_abs(transpose(T) * g * T - g) <= 1e-8);
}

TEST_CASE("theta transport around a Heisenberg square") {
  auto M = heisenberg(2);
  for (int k : {1, 2, 3}) {
    Q s(k, 4);
    s.canonicalize();
    auto t = theta_transport(M, square_loop(M.base_point, 0, 2, s));
    REQUIRE(t.exact);
    CHECK(*t.exact == 2 * s * s);
    double want = std::exp(-2 * s.get_d() * s.get_d());
    CHECK(std::fabs(t.factor - want) / want <= 1e-8);
    auto back = theta_transport(M, square_loop(M.base_point, 2, 0, s));
    CHECK(*back.exact == -2 * s * s);
  }
}

TEST_CASE("poles on the path are reported") {
  auto M = heisenberg(2, "x1/(1 - x1)");
  Geometry geo(M);
  TransportOptions o;
  o.steps = 16;
  try {
    parallel_transport(geo, square_loop(M.base_point, 0, 1, Q(1)), o);
    FAIL("expected POLE_ON_PATH");
  } catch (const Error& e) {
    CHECK(e.code == Err::POLE_ON_PATH);
  }
}
