#pragma once
// Finite-dimensional Lie algebras given by rational structure constants.
#include <string>
#include <vector>

#include "holab/numkit.hpp"

namespace holab {

class LieAlgebraTable {
public:
  LieAlgebraTable() = default;
  explicit LieAlgebraTable(int dim) : n_(dim), c_(size_t(dim) * dim * dim, Q(0)) {}

  int dim() const { return n_; }
  // [e_i, e_j] = sum_k C(i,j,k) e_k
  const Q& C(int i, int j, int k) const { return c_[(size_t(i) * n_ + j) * n_ + k]; }
  // Sets C^k_ij and C^k_ji = -C^k_ij.
  void set(int i, int j, int k, const Q& v);
  std::vector<std::string> labels;

  Vec<Q> bracket(const Vec<Q>& x, const Vec<Q>& y) const;
  Vec<Q> bracket_basis(int i, int j) const;
  Mat<Q> ad(const Vec<Q>& x) const;
  Mat<Q> ad_basis(int i) const;
  // Table in the basis given by the columns of P (invertible).
  LieAlgebraTable change_basis(const Mat<Q>& P) const;

  // Matrices spanning a bracket-closed space; INVALID_INPUT otherwise.
  static LieAlgebraTable from_matrices(const std::vector<Mat<Q>>& basis);

private:
  int n_ = 0;
  std::vector<Q> c_;
};

Vec<Q> unit_vec(int n, int i);

struct JacobiResult {
  Q residual = 0;  // max abs entry over all triples
  int i = -1, j = -1, k = -1;  // worst triple
  bool ok() const { return sgn(residual) == 0; }
};
JacobiResult jacobi_check(const LieAlgebraTable& L);

Mat<Q> killing_form(const LieAlgebraTable& L);

struct LieFingerprint {
  int dim = 0;
  int n_pos = 0, n_zero = 0, n_neg = 0;  // Killing signature
  std::vector<int> derived_series;       // dims, starting with dim, until stable
  int center = 0;
  int radical = 0;
  bool semisimple = false;
  std::string str() const;
  bool operator==(const LieFingerprint& o) const;
};
LieFingerprint killing_fingerprint(const LieAlgebraTable& L);

// Coordinates of v in the basis of columns of P; throws INVALID_INPUT when v
// is not in the span.
Vec<Q> coords_in(const Mat<Q>& P, const Vec<Q>& v);
Mat<Q> columns_of(const std::vector<Vec<Q>>& vs, int n);

struct SubalgebraResult {
  Subspace<Q> span;
  std::vector<Vec<Q>> basis;  // echelon basis
  LieAlgebraTable table;      // induced structure constants on `basis`
};
SubalgebraResult subalgebra_closure(const LieAlgebraTable& L, const std::vector<Vec<Q>>& gens);

// Largest ideal of L contained in span(vs).
Subspace<Q> largest_ideal_in(const LieAlgebraTable& L, const std::vector<Vec<Q>>& vs);

enum class ZooLabel {
  SO_M_PLUS_2,
  SO_2_M,
  SO_1_M_PLUS_1,
  EUCLIDEAN_MOTION,
  LORENTZ_MOTION,
  HEISENBERG,
  AMBIGUOUS,
  UNMATCHED
};
const char* zoo_label_name(ZooLabel l);

struct ZooMatch {
  ZooLabel label = ZooLabel::UNMATCHED;
  std::vector<ZooLabel> matches;
};
ZooMatch match_zoo(const LieFingerprint& fp, int m);

// Reference algebras.
LieAlgebraTable so_table(int p, int q);          // so(p,q), p negative directions
LieAlgebraTable motion_table(int p, int q);      // so(p,q) semidirect R^{p,q}
LieAlgebraTable heisenberg_table(int m);         // [x_i, y_i] = z

}  // namespace holab
