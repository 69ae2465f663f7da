#pragma once
// Complex spinor module of so(2m) on the exterior algebra of C^m, over the
// Gaussian rationals, and parallel-spinor counts for holonomy algebras.
#include <optional>
#include <string>
#include <vector>

#include "holab/holonomy.hpp"

namespace holab {

// Sparse square operator, column-wise.
class SpOp {
public:
  SpOp() = default;
  explicit SpOp(int n) : cols_(n) {}
  static SpOp identity(int n);
  int n() const { return int(cols_.size()); }
  void add(int row, int col, const QC& v);
  const std::vector<std::pair<int, QC>>& col(int c) const { return cols_[c]; }
  SpOp operator*(const SpOp& o) const;
  SpOp operator+(const SpOp& o) const;
  SpOp operator-(const SpOp& o) const;
  SpOp scaled(const QC& s) const;
  bool is_zero() const;
  Mat<QC> dense() const;

private:
  std::vector<std::vector<std::pair<int, QC>>> cols_;  // sorted by row, no zeros
};

// Vectors of R^{2m} are indexed e_1..e_m, Je_1..Je_m; J = [[0,-I],[I,0]].
// Spinor basis: subsets S of {1..m} (bitmask), S <-> e_S in Lambda^|S| C^m.
struct SpinRep {
  int m = 0;
  int dim = 0;               // 2^m
  std::vector<SpOp> gamma;   // 2m operators
  std::vector<SpOp> biv;     // rho(e_a ^ e_b) for a < b, row-major over pairs

  // e_a ^ e_b acts as Z -> <e_a,Z> e_b - <e_b,Z> e_a
  int pair_index(int a, int b) const;
  SpOp rho(const Mat<Q>& A) const;  // A in so(2m); INVALID_INPUT otherwise
  // Clifford action of the Kaehler form sum_k e_k . Je_k, equal to 2 rho(J).
  SpOp kaehler() const;
};

// Throws SIZE_GUARD outside 2 <= m <= 7 and INTERNAL if a self-check fails.
SpinRep build_spin_rep(int m);

struct SpinSelfCheck {
  bool clifford = false;
  bool equivariant = false;
  bool homomorphism = false;
};
SpinSelfCheck spin_self_check(const SpinRep& rep);

struct WeightLevel {
  int k = 0;                 // Lambda^k
  QC kaehler_eigenvalue;     // (m - 2k) i sigma
  QC rho_J_eigenvalue;       // half of it
  int multiplicity = 0;
  std::vector<int> basis;    // subset bitmasks
};
struct WeightDecomposition {
  std::vector<WeightLevel> levels;
  int sigma = 0;  // +1 or -1; 0 if the spectrum does not have the expected form
};
WeightDecomposition weight_decomposition(const SpinRep& rep);

enum class EmbedLabel { U, SU, SO_LAGRANGIAN, SO_PLUS_U1, SP, SP_PLUS_U1 };
const char* embed_label_name(EmbedLabel l);
EmbedLabel embed_label_from_name(const std::string& s);  // LABEL_DOMAIN on unknown names
// Throws LABEL_DOMAIN (SP with odd m, m < 1).
std::vector<Mat<Q>> embed_algebra(EmbedLabel l, int m);

struct Annihilator {
  int dim = 0;
  std::vector<Vec<QC>> basis;
  std::vector<int> profile;  // rank of the projection onto each Lambda^k
};
Annihilator annihilator(const SpinRep& rep, const std::vector<Mat<Q>>& h);

struct SpinorQuery {
  int m = 3;
  bool tau_nonzero = false;
  HolLabel horizontal = HolLabel::OTHER;
  std::optional<bool> adapted_differs;         // dim hol(adapted) != dim hol(horizontal)
  std::optional<std::vector<Mat<Q>>> algebra;  // horizontal holonomy in an orthonormal frame
};

struct SpinorVerdict {
  int theorem_case = 0;            // 1, 2, 3; 0 when the theorem gives no verdict
  std::optional<bool> predicted;   // from the theorem's case list
  std::optional<int> expected_dim; // 2 in cases 1 and 2
  std::optional<int> computed_dim;
  std::string computed_from;       // "algebra", "model embedding" or ""
  bool consistent = true;
  std::string detail;
};
// Throws UNSUPPORTED_LABEL for OTHER without matrices.
SpinorVerdict parallel_spinor_report(const SpinorQuery& q);

}  // namespace holab
