#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holab/liealg.hpp"

using namespace holab;

namespace {

LieAlgebraTable so3() {
  LieAlgebraTable L(3);
  L.set(0, 1, 2, Q(1));
  L.set(1, 2, 0, Q(1));
  L.set(2, 0, 1, Q(1));
  return L;
}

}  // namespace

TEST_CASE("Jacobi identity") {
  CHECK(jacobi_check(LieAlgebraTable(4)).ok());
  CHECK(jacobi_check(so3()).ok());
  CHECK(jacobi_check(so_table(1, 3)).ok());
  CHECK(jacobi_check(motion_table(0, 3)).ok());
  auto bad = so3();
  bad.set(0, 1, 0, Q(1));
  auto r = jacobi_check(bad);
  CHECK(!r.ok());
  CHECK(r.i >= 0);
}

TEST_CASE("Killing signatures of reference algebras") {
  auto c = killing_fingerprint(so_table(0, 5));
  CHECK(c.dim == 10);
  CHECK((c.n_pos == 0 && c.n_zero == 0 && c.n_neg == 10));
  CHECK(c.semisimple);
  auto nc = killing_fingerprint(so_table(1, 4));
  CHECK((nc.n_pos == 4 && nc.n_zero == 0 && nc.n_neg == 6));
  auto h = killing_fingerprint(heisenberg_table(3));
  CHECK((h.n_pos == 0 && h.n_zero == 7 && h.n_neg == 0));
  CHECK(h.derived_series == std::vector<int>{7, 1, 0});
  CHECK(h.center == 1);
  CHECK(h.radical == 7);
  auto e = killing_fingerprint(motion_table(0, 3));
  CHECK(e.radical == 3);
  CHECK(e.center == 0);
  CHECK(!e.semisimple);
}

TEST_CASE("Killing form is ad-invariant") {
  for (const auto& L : {so_table(1, 3), motion_table(1, 2), heisenberg_table(2)}) {
    auto K = killing_form(L);
    for (int i = 0; i < L.dim(); ++i) {
      auto A = L.ad_basis(i);
      CHECK(is_zero_mat(transpose(A) * K + K * A));
    }
  }
}

TEST_CASE("fingerprint does not depend on the basis") {
  auto L = motion_table(1, 2);
  const int n = L.dim();
  Mat<Q> P(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) P(i, j) = Q(i + j + 1);
  for (int i = 1; i < n; ++i) P(i, i - 1) = Q(-1, 2);
  auto M = L.change_basis(P);
  CHECK(jacobi_check(M).ok());
  CHECK(killing_fingerprint(M) == killing_fingerprint(L));
}

TEST_CASE("subalgebra closure and ideals") {
  auto L = so_table(0, 3);
  auto s = subalgebra_closure(L, {unit_vec(3, 0), unit_vec(3, 1)});
  CHECK(s.span.dim() == 3);
  CHECK(jacobi_check(s.table).ok());
  auto E = motion_table(0, 3);
  auto t = subalgebra_closure(E, {unit_vec(6, 3)});
  CHECK(t.span.dim() == 1);
  CHECK(largest_ideal_in(E, {unit_vec(6, 3), unit_vec(6, 4), unit_vec(6, 5)}).dim() == 3);
  CHECK(largest_ideal_in(E, {unit_vec(6, 0), unit_vec(6, 3)}).dim() == 0);
}

TEST_CASE("from_matrices rejects non-closed spans") {
  Mat<Q> A(2, 2), B(2, 2);
  A(0, 1) = 1;
  B(1, 0) = 1;
  CHECK_THROWS_AS(LieAlgebraTable::from_matrices({A, B}), Error);
}

TEST_CASE("zoo matching") {
  for (int m : {2, 3}) {
    CHECK(match_zoo(killing_fingerprint(so_table(0, m + 2)), m).label == ZooLabel::SO_M_PLUS_2);
    CHECK(match_zoo(killing_fingerprint(so_table(2, m)), m).label == ZooLabel::SO_2_M);
    CHECK(match_zoo(killing_fingerprint(so_table(1, m + 1)), m).label == ZooLabel::SO_1_M_PLUS_1);
    CHECK(match_zoo(killing_fingerprint(motion_table(0, m + 1)), m).label == ZooLabel::EUCLIDEAN_MOTION);
    CHECK(match_zoo(killing_fingerprint(motion_table(1, m)), m).label == ZooLabel::LORENTZ_MOTION);
    CHECK(match_zoo(killing_fingerprint(heisenberg_table(m)), m).label == ZooLabel::HEISENBERG);
    CHECK(match_zoo(killing_fingerprint(so3()), m).label == ZooLabel::UNMATCHED);
  }
}
