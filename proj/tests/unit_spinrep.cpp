#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>

#include "holab/spinrep.hpp"

using namespace holab;

namespace {

int binom(int n, int k) {
  int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Mat<Q> rotation(int n, int seed) {
  Mat<Q> S(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      S(i, j) = Q((i * 3 + j * 5 + seed) % 7 - 3, 4 + seed);
      S(i, j).canonicalize();
      S(j, i) = -S(i, j);
    }
  return cayley(S);
}

}  // namespace

TEST_CASE("size guard") {
  CHECK_THROWS_AS(build_spin_rep(1), Error);
  CHECK_THROWS_AS(build_spin_rep(8), Error);
}

TEST_CASE("Clifford relations, equivariance and homomorphism") {
  for (int m : {2, 3, 4}) {
    auto rep = build_spin_rep(m);
    CHECK(rep.dim == 1 << m);
    CHECK(rep.gamma[0].dense().r == rep.dim);
    auto c = spin_self_check(rep);
    CHECK(c.clifford);
    CHECK(c.equivariant);
    CHECK(c.homomorphism);
  }
}

TEST_CASE("equivariance for general elements") {
  auto rep = build_spin_rep(3);
  for (int s = 0; s < 10; ++s) {
    Mat<Q> A = rotation(6, s) - transpose(rotation(6, s));  // skew
    Vec<Q> v(6);
    for (int i = 0; i < 6; ++i) v[i] = Q((s + 2 * i) % 5 - 2);
    SpOp gv(rep.dim), gAv(rep.dim);
    Mat<Q> Av = A * unflatten(v, 6, 1);
    for (int i = 0; i < 6; ++i) {
      gv = gv + rep.gamma[i].scaled(QC(v[i]));
      gAv = gAv + rep.gamma[i].scaled(QC(Av(i, 0)));
    }
    SpOp r = rep.rho(A);
    CHECK((r * gv - gv * r - gAv).is_zero());
  }
}

TEST_CASE("weights of the complex structure") {
  for (int m : {2, 3, 4, 5}) {
    auto wd = weight_decomposition(build_spin_rep(m));
    CHECK(wd.sigma == 1);
    REQUIRE(int(wd.levels.size()) == m + 1);
    for (const auto& L : wd.levels) {
      CHECK(L.multiplicity == binom(m, L.k));
      CHECK(L.kaehler_eigenvalue == QC(Q(0), Q(m - 2 * L.k)));
      Q half(m - 2 * L.k, 2);
      half.canonicalize();
      CHECK(L.rho_J_eigenvalue == QC(Q(0), half));
    }
  }
}

TEST_CASE("embedded algebras") {
  CHECK(embed_algebra(EmbedLabel::U, 3).size() == 9);
  CHECK(embed_algebra(EmbedLabel::SU, 3).size() == 8);
  CHECK(embed_algebra(EmbedLabel::SO_LAGRANGIAN, 3).size() == 3);
  CHECK(embed_algebra(EmbedLabel::SO_PLUS_U1, 3).size() == 4);
  CHECK(embed_algebra(EmbedLabel::SP, 4).size() == 10);
  CHECK(embed_algebra(EmbedLabel::SP_PLUS_U1, 4).size() == 11);
  CHECK_THROWS_AS(embed_algebra(EmbedLabel::SP, 3), Error);
  auto U = embed_algebra(EmbedLabel::U, 3);
  auto cl = bracket_closure(U, 6);
  CHECK(cl.span.dim() == 9);
  auto J = embed_algebra(EmbedLabel::SO_PLUS_U1, 3).back();
  for (const auto& A : embed_algebra(EmbedLabel::SO_LAGRANGIAN, 3)) CHECK(is_zero_mat(commutator(A, J)));
  CHECK(!span_of(embed_algebra(EmbedLabel::SU, 3), 6).contains(flatten(J)));
}

TEST_CASE("annihilator dimensions") {
  auto t0 = std::chrono::steady_clock::now();
  for (int m : {3, 4, 5}) {
    auto rep = build_spin_rep(m);
    auto su = annihilator(rep, embed_algebra(EmbedLabel::SU, m));
    CHECK(su.dim == 2);
    CHECK(su.profile[0] == 1);
    CHECK(su.profile[m] == 1);
    for (int k = 1; k < m; ++k) CHECK(su.profile[k] == 0);
    CHECK(annihilator(rep, embed_algebra(EmbedLabel::SO_LAGRANGIAN, m)).dim == 2);
    CHECK(annihilator(rep, embed_algebra(EmbedLabel::U, m)).dim == 0);
    CHECK(annihilator(rep, embed_algebra(EmbedLabel::SO_PLUS_U1, m)).dim == 0);
    CHECK(annihilator(rep, {}).dim == (1 << m));
  }
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 30.0);
}

TEST_CASE("annihilator is invariant under conjugation") {
  const int m = 3;
  auto rep = build_spin_rep(m);
  auto R = rotation(2 * m, 1);
  for (auto l : {EmbedLabel::SU, EmbedLabel::SO_LAGRANGIAN, EmbedLabel::U}) {
    auto h = embed_algebra(l, m);
    std::vector<Mat<Q>> hc;
    for (const auto& H : h) hc.push_back(R * H * transpose(R));
    CHECK(annihilator(rep, hc).dim == annihilator(rep, h).dim);
  }
}

TEST_CASE("parallel spinor verdicts") {
  SpinorQuery q;
  q.m = 3;
  q.tau_nonzero = true;
  q.horizontal = HolLabel::SO_M_LAGRANGIAN;
  auto v = parallel_spinor_report(q);
  CHECK(v.theorem_case == 1);
  CHECK(*v.predicted);
  CHECK(*v.computed_dim == 2);
  CHECK(v.consistent);
  q.horizontal = HolLabel::U_M;
  v = parallel_spinor_report(q);
  CHECK(!*v.predicted);
  CHECK(*v.computed_dim == 0);
  CHECK(v.consistent);
  q.tau_nonzero = false;
  q.adapted_differs = false;
  q.horizontal = HolLabel::TRIVIAL;
  v = parallel_spinor_report(q);
  CHECK(v.theorem_case == 3);
  CHECK(*v.computed_dim == 8);
  q.horizontal = HolLabel::OTHER;
  try {
    parallel_spinor_report(q);
    FAIL("expected UNSUPPORTED_LABEL");
  } catch (const Error& e) {
    CHECK(e.code == Err::UNSUPPORTED_LABEL);
  }
}
