#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <random>

#include "holab/app.hpp"

using namespace holab;

namespace {

std::vector<double> to_d(const std::vector<Q>& p) {
  std::vector<double> x;
  for (const auto& v : p) x.push_back(v.get_d());
  return x;
}

std::vector<app::ModelDoc> corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(HOLAB_MODELS_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<app::ModelDoc> out;
  for (const auto& f : files) out.push_back(app::load_model_file(f.string()));
  return out;
}

}  // namespace

TEST_CASE("directional derivative agrees with central differences") {
  std::vector<std::string> v{"x", "y", "z"};
  auto P = [&](const char* s) { return parse_ratfunc(s, v); };
  std::vector<RatFunc> fs{P("x^2*y - z^3"), P("(1 + x*z)/(2 + y^2)"), P("x*y*z + 3/7*y")};
  VField X{P("1 + y"), P("x*z"), P("-y")};
  const double h = 1e-5;
  for (const auto& f : fs)
    for (auto pt : std::vector<std::vector<Q>>{{Q(1, 3), Q(-1, 2), Q(2)}, {Q(0), Q(1), Q(-1, 5)}}) {
      double exact = dir_deriv(X, f).eval(pt).get_d();
      auto x = to_d(pt);
      std::vector<double> xp = x, xm = x;
      for (int i = 0; i < 3; ++i) {
        double c = X[i].eval_d(x);
        xp[i] += h * c;
        xm[i] -= h * c;
      }
      double fd = (f.eval_d(xp) - f.eval_d(xm)) / (2 * h);
      CHECK(std::fabs(exact - fd) <= 1e-6 * (1 + std::fabs(exact)));
    }
}

TEST_CASE("exterior derivative satisfies the invariant formula") {
  std::vector<std::string> v{"x", "y", "z"};
  auto P = [&](const char* s) { return parse_ratfunc(s, v); };
  OneForm w{P("y*z"), P("x^2"), P("1/(1 + x^2)")};
  VField X{P("1"), P("z"), P("x*y")}, Y{P("y^2"), P("0"), P("1 - x")};
  TwoForm dw = exterior_d(w);
  RatFunc lhs = dw(X, Y);
  RatFunc rhs = dir_deriv(X, contract(w, Y)) - dir_deriv(Y, contract(w, X)) - contract(w, lie_bracket(X, Y));
  CHECK((lhs - rhs).is_zero());
}

TEST_CASE("Reeb field preserves dtheta on every corpus model") {
  auto docs = corpus();
  REQUIRE(docs.size() >= 6);
  for (const auto& d : docs) {
    CAPTURE(d.model.name);
    Geometry geo(d.model);
    CHECK(contract(d.model.theta, geo.reeb) == RatFunc::constant(d.model.n(), 1));
    TwoForm dth = exterior_d(d.model.theta);
    CHECK(lie_derivative(geo.reeb, dth).is_zero());
    for (const auto& c : lie_derivative(geo.reeb, d.model.theta)) CHECK(c.is_zero());
    for (const auto& E : d.model.frame) CHECK(dth(geo.reeb, E).is_zero());
  }
}

TEST_CASE("rank agrees across rational, Gaussian and float backends") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 1 + trial % 5, rows = 6, cols = 7;
    Mat<Q> A(rows, r), B(r, cols);
    for (auto& x : A.a) x = coef(rng);
    for (auto& x : B.a) x = coef(rng);
    Mat<Q> M = A * B;
    Mat<QC> MC(rows, cols);
    for (size_t k = 0; k < M.a.size(); ++k) MC.a[k] = QC(M.a[k], Q(0));
    int rq = rank_nullspace(M).rank;
    CHECK(rank_nullspace(MC).rank == rq);
    CHECK(rank_nullspace(to_double(M), 1e-9).rank == rq);
    CHECK(rq <= r);
  }
}
