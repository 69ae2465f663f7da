#pragma once
// Contact sub-Riemannian structures on R^n: Reeb field, sub-torsion, the
// Schouten partial connection, extensions by a Nomizu endomorphism, and the
// curvature identities relating them.
#include <optional>
#include <string>
#include <vector>

#include "holab/numkit.hpp"
#include "holab/polycalc.hpp"

namespace holab {

// Square matrix of rational functions, row-major.
using FieldMat = std::vector<RatFunc>;

struct ContactModel {
  std::string name;
  int m = 0;
  std::vector<std::string> vars;
  OneForm theta;                        // coefficients of dx_i
  std::vector<VField> frame;            // 2m horizontal fields
  FieldMat metric;                      // 2m x 2m, symmetric
  std::optional<FieldMat> J;            // J e_b = sum_a J(a,b) e_a
  std::vector<Q> base_point;
  int n() const { return 2 * m + 1; }
  int d() const { return 2 * m; }
};

enum class CheckStatus { PROVED, SAMPLED, FAILED };
const char* status_name(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::PROVED;
  int points = 0;        // sample points used (SAMPLED)
  std::string witness;   // first failing entry
};

struct CRFlags {
  bool j_squared_minus_one = false;
  bool nijenhuis_zero = false;
  bool g_matches_dtheta_j = false;
  bool tw_equals_adapted = false;
  bool torsion_anticommutes_j = false;
  bool all() const {
    return j_squared_minus_one && nijenhuis_zero && g_matches_dtheta_j && tw_equals_adapted &&
           torsion_anticommutes_j;
  }
};

// Symbolic stage: everything that stays cheap as rational functions.
class Geometry {
public:
  explicit Geometry(const ContactModel& model);

  const ContactModel& model() const { return model_; }
  int m, d, n;

  VField reeb;
  FieldMat frame_inv;              // n x n inverse of [E_1..E_d, reeb]
  std::vector<RatFunc> bracket;    // [E_a,E_b] frame part: (a*d+b)*d + c
  FieldMat W;                      // dtheta(E_a,E_b)
  std::vector<RatFunc> reeb_bracket;  // [reeb,E_a] = sum_c reeb_bracket[a*d+c] E_c
  FieldMat g, ginv;
  std::vector<RatFunc> gamma;      // Gamma^c_ab at (a*d+b)*d + c
  std::vector<FieldMat> conn;      // conn[a](c,b) = Gamma^c_ab
  FieldMat xi_op;                  // X -> pi[reeb, X] as a matrix
  FieldMat subtorsion_form;        // tau(E_a,E_b)
  FieldMat subtorsion;             // endomorphism g^{-1} tau
  std::optional<CRFlags> cr;
  FieldMat tw_nomizu;              // -1/2([xi,X] + J[xi,JX]) when J is present

  std::vector<Check> checks;       // symbolic (PROVED or FAILED)

  // Coefficients of a coordinate vector field in the frame (E_1..E_d, reeb).
  std::vector<RatFunc> decompose(const VField& v) const;
  // Deterministic rational points near the base point where the model is regular.
  std::vector<std::vector<Q>> sample_points(int count, uint64_t seed) const;
  bool regular_at(const std::vector<Q>& p) const;

private:
  ContactModel model_;
  void build_reeb();
  void build_structure();
  void build_connection();
  void build_cr();
};

// Linear solve over rational functions: returns A^{-1} B or throws SINGULAR.
FieldMat ratfunc_solve(FieldMat A, FieldMat B, int n, int k);
RatFunc ratfunc_det(FieldMat A, int n);

// Pointwise stage: Taylor jets at a point, so derivatives stay exact.
using JetMat = std::vector<Jet>;

enum class Extension { ADAPTED, WAGNER, CUSTOM };

class PointGeom {
public:
  PointGeom(const Geometry& geo, const std::vector<Q>& point, int order);

  const Geometry& geo;
  std::vector<Q> point;
  int d, n, order;

  std::vector<std::vector<Jet>> frame;  // frame[a][i]
  std::vector<Jet> reeb;
  JetMat g, ginv, W, subtorsion_form, subtorsion, xi_op;
  std::optional<JetMat> J;
  std::vector<JetMat> conn;
  std::vector<Jet> bracket, reeb_bracket, gamma;
  std::vector<JetMat> R;  // Schouten curvature R(E_a,E_b) at a*d+b
  JetMat beta;            // 2 W^{-1}
  JetMat wagner;          // N^W = R(beta)/4m

  Jet along(int a, const Jet& f) const;
  Jet along_reeb(const Jet& f) const;
  JetMat along(int a, const JetMat& A) const;
  JetMat along_reeb(const JetMat& A) const;
  JetMat cov(int a, const JetMat& A) const;                        // E_a(A) + [G_a, A]
  JetMat cov_reeb(const JetMat& nomizu, const JetMat& A) const;    // xi(A) + [xi_op + N, A]
  JetMat curv(int a, int b, const JetMat& nomizu) const;          // R^N(E_a,E_b)
  JetMat curv_reeb(int a, const JetMat& nomizu) const;            // R^N(xi,E_a)
  JetMat contract(const JetMat& bivector, const std::vector<JetMat>& two_form) const;
  JetMat nomizu(Extension e, const std::optional<FieldMat>& custom = std::nullopt) const;

  static Mat<Q> value(const JetMat& A, int d);
  JetMat lift(const FieldMat& f) const;
};

JetMat jm_mul(const JetMat& A, const JetMat& B, int d);
JetMat jm_add(const JetMat& A, const JetMat& B);
JetMat jm_sub(const JetMat& A, const JetMat& B);
JetMat jm_scale(const JetMat& A, const Jet& s);
JetMat jm_comm(const JetMat& A, const JetMat& B, int d);
JetMat jm_transpose(const JetMat& A, int d);
JetMat jm_inverse(const JetMat& A, int d);
JetMat jm_zero(int d, int nvars);
bool jm_is_zero(const JetMat& A);

// Identity suite over sample points; returns one Check per identity.
struct IdentityOptions {
  int points = 5;
  uint64_t seed = 20240607;
  int order = 3;
};
std::vector<Check> identity_suite(const Geometry& geo, const IdentityOptions& opt = {});

// Pointwise reports.
struct PointReport {
  std::vector<Q> point;
  Q dtheta_beta;                       // <dtheta, beta>, expected -4m
  std::optional<Q> dtheta_beta_j;      // <dtheta, beta_J>, expected 2m
  bool codazzi = false;
  bool reeb_curvature_zero = false;    // R^tau(xi, .) = 0
  bool subtorsion_parallel = false;    // horizontal nabla tau = 0
  bool dtheta_parallel = false;
  bool curvature_parallel = false;     // horizontal nabla R^tau = 0
  Mat<Q> subtorsion;                   // endomorphism at the point
  Mat<Q> wagner;                       // N^W at the point
  // tau spectrum
  std::vector<Q> tau_eigen_exact;
  std::vector<double> tau_eigen_float;
  bool float_spectrum = false;
  bool tau_squared_scalar = false;
  // psi from g = dtheta(., psi .)
  Mat<Q> psi;
  bool psi_skew = false;
  std::optional<Q> psi_mu_squared;     // psi^2 = -mu^2 I
  std::optional<Mat<Q>> psi_j;         // psi / mu when mu rational
  // pseudo-Hermitian
  bool has_cr = false;
  Mat<Q> rho;                          // Ricci form
  Q scal;
  bool pseudo_einstein = false;
  bool ric_tw_holds = false;
  bool basic_equals_wagner = false;    // N^W = tau + rho#/m
  std::string rho_sharp;               // index convention that matched, if any
  bool rtau_u = false;                 // R_tau(JX,JY) = -R_tau(X,Y)
  bool rtau_j_zero = false;            // R_tau(J) = 0
  bool r0_bianchi = false;
  bool r0_j_invariant = false;
  bool ric_rtau = false;               // Ric(R_tau) = (m-1) tau(., J.)
};
PointReport point_report(const PointGeom& pg);

// g(NX,Y) + g(X,NY) = 2 tau(X,Y) at the point.
bool extension_is_metric(const PointGeom& pg, const JetMat& nomizu);

// R_tau(E_a,E_b) from the closed formula (requires J).
std::vector<Mat<Q>> rtau_tensor(const Mat<Q>& g, const Mat<Q>& J, const Mat<Q>& tau, int d);

}  // namespace holab
