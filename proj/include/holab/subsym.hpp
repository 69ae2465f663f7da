#pragma once
// Sub-symmetric quadruples, the bracket construction from local curvature
// data, the holonomy pair, and the built-in model zoo.
#include <optional>
#include <string>
#include <vector>

#include "holab/holonomy.hpp"
#include "holab/liealg.hpp"

namespace holab {

// g = h + p with s = -1 on p; h = k + <xi>. p_idx lists the basis vectors of
// g spanning p, h_idx those spanning h. B is an inner product on p in the
// p_idx coordinates.
struct SubSymQuadruple {
  LieAlgebraTable L;
  std::vector<int> p_idx, h_idx;
  std::vector<Vec<Q>> k_basis;
  Vec<Q> xi;
  Mat<Q> B;
  std::string name;

  int p_dim() const { return int(p_idx.size()); }
  Mat<Q> involution() const;
};

struct QuadrupleCheck {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct QuadrupleReport {
  std::vector<QuadrupleCheck> checks;
  bool transvection = false;
  bool sub_torsion_free = false;
  bool ok() const;
  std::string first_failure() const;
};

QuadrupleReport validate_quadruple(const SubSymQuadruple& q);

// ad_x restricted to p, in p coordinates.
Mat<Q> ad_on_p(const SubSymQuadruple& q, const Vec<Q>& x);
// Xi coefficient of [e_a, e_b] modulo k, for p basis vectors a, b.
Mat<Q> theta_form(const SubSymQuadruple& q);

SubSymQuadruple transvection_restrict(const SubSymQuadruple& q);

// Local curvature data on p = R^dim_p. R_W[a * dim_p + b] is R^W(e_a, e_b),
// a skew endomorphism of p lying in span(k_span, N_W). Brackets:
//   [X,Y] = -R^W(X,Y) + Theta(X,Y) xi,  [xi,X] = N_W X,  [A,X] = A X,
//   [A,A'] = A A' - A' A,  [xi,A] = N_W A - A N_W.
struct LocalData {
  int dim_p = 0;
  std::vector<Mat<Q>> R_W;
  Mat<Q> Theta;
  Mat<Q> N_W;
  std::vector<Mat<Q>> k_span;
  std::optional<Mat<Q>> B;  // identity when absent
  std::string name = "local";
};

// Throws JACOBI_FAIL (offending triple in the message), VALIDATION_FAIL, or
// INVALID_INPUT for malformed data.
SubSymQuadruple from_local_data(const LocalData& d);

struct HolonomyPair {
  Mat<Q> ad_xi;     // ad_xi on p
  Mat<Q> tau_star;  // endomorphism with B(ad_xi X, Y) + B(X, ad_xi Y) = -2 B(tau_star X, Y)
  Mat<Q> A_xi;      // ad_xi + tau_star, the B-skew part of ad_xi
  std::vector<Mat<Q>> horizontal;  // ad_k on p
  std::vector<Mat<Q>> adapted;     // ad_k on p plus A_xi
  int horizontal_dim = 0, adapted_dim = 0;
};
HolonomyPair holonomy_pair(const SubSymQuadruple& q);

// R^tau(X,Y) = -ad_{[X,Y]_k} - Theta(X,Y) A_xi on p; Ric(X,Y) = tr(Z -> R(Z,X)Y).
std::vector<Mat<Q>> adapted_curvature(const SubSymQuadruple& q, const HolonomyPair& hp);
Q adapted_scalar_curvature(const SubSymQuadruple& q, const HolonomyPair& hp);

enum class ZooKind { HEISENBERG, CPN_SPHERE, TORSION_FAMILY, HRSS_CIRCLE };
const char* zoo_kind_name(ZooKind k);

struct ZooParams {
  ZooKind kind = ZooKind::HEISENBERG;
  int m = 2;
  Q lambda = 1, mu = 0;
  std::optional<LocalData> data;  // HRSS_CIRCLE
};

struct ClassRow {
  std::string row;        // row id
  std::string tau;        // "0" or "nonzero"
  std::string space;
  std::string hol_horizontal;
  std::string hol_adapted;
  std::string str() const;
  bool operator==(const ClassRow& o) const { return str() == o.str(); }
};

struct ZooResult {
  ZooParams params;
  SubSymQuadruple q;
  QuadrupleReport validation;
  HolonomyPair hol;
  Classification cls_horizontal, cls_adapted;
  Q scal_tau;
  LieFingerprint fingerprint;
  ZooMatch match;
  std::optional<ZooLabel> expected_label;  // from the parameter case split
  bool case_split_ok = true;
  ClassRow row;
};

// Throws PARAM_DOMAIN (lambda <= 0, m out of range) or VALIDATION_FAIL.
ZooResult zoo(const ZooParams& p);
SubSymQuadruple heisenberg_quadruple(int m);
SubSymQuadruple cpn_quadruple(int m);
LocalData torsion_family_data(int m, const Q& lambda, const Q& mu);
// Local data read back from a quadruple whose p comes first and h = k + xi.
LocalData local_data_of(const SubSymQuadruple& q);

std::optional<ZooLabel> torsion_family_expected(const Q& lambda, const Q& mu);

// Stored rows for the built-in kinds, keyed by row id.
std::optional<ClassRow> class_expected(const std::string& row_id);

struct ClassDiff {
  std::string row;
  ClassRow got;
  std::optional<ClassRow> want;
  bool match = false;
};
struct ClassReport {
  std::vector<ClassDiff> rows;
  bool all_match() const;
  std::string render() const;
};
// Throws MISMATCH with the row diff when throw_on_mismatch is set.
ClassReport class_report(const std::vector<ZooResult>& results, bool throw_on_mismatch = false);

}  // namespace holab
