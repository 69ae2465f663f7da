#pragma once
// Infinitesimal holonomy algebras of the Schouten connection and its
// extensions, their structural classification, and numerical transport.
#include <optional>
#include <string>
#include <vector>

#include "holab/contactgeo.hpp"

namespace holab {

enum class ConnTag { SCHOUTEN, ADAPTED, WAGNER, CUSTOM };
enum class HolMode { HORIZONTAL, FULL };
enum class HolLabel { TRIVIAL, SO_M_LAGRANGIAN, SO_M_PLUS_U1, SU_M, U_M, OTHER };

const char* conn_name(ConnTag t);
const char* mode_name(HolMode m);
const char* label_name(HolLabel l);
ConnTag conn_from_name(const std::string& s);

struct Fingerprint {
  int dim = 0;
  int commutant_dim = 0;
  int derived_dim = 0;
  int center_dim = 0;
  int complex_structures = 0;  // invariant g-skew complex structures found (up to sign)
  int sym_commutant_dim = 0;   // g-symmetric part of the commutant; 1 iff irreducible
  int fixed_dim = 0;           // common kernel
  bool lagrangian_split = false;
  std::string str() const;
};

struct Classification {
  HolLabel label = HolLabel::OTHER;
  Fingerprint fp;
  std::string certificate;
};

// h: a Lie subalgebra of so(g) on R^{2m}.
Classification classify_subalgebra(const std::vector<Mat<Q>>& h, const Mat<Q>& g, int m);

struct HolonomyOptions {
  HolMode mode = HolMode::HORIZONTAL;
  ConnTag conn = ConnTag::SCHOUTEN;
  int depth = 2;
  std::optional<FieldMat> custom;
  int max_rounds = 32;
};

struct HolonomyReport {
  HolMode mode;
  ConnTag conn;
  int depth = 0;
  std::vector<int> dims_by_depth;
  bool stabilized = false;
  bool fixpoint = true;
  bool extension_metric = true;
  int sections = 0;  // sections kept after linear pruning
  Subspace<Q> span;
  std::vector<Mat<Q>> basis;
  Classification cls;
  int dim() const { return span.dim(); }
};

inline constexpr int kMaxDepth = 4;

HolonomyReport infinitesimal_holonomy(const Geometry& geo, const std::vector<Q>& point,
                                      const HolonomyOptions& opt);

// Orthogonal splitting of R^d into h-irreducible blocks (columns = basis).
struct IsotypicBlock {
  Mat<Q> basis;
  bool trivial = false;  // h acts by zero
};
struct Decomposition {
  std::vector<IsotypicBlock> blocks;
  bool complete = true;
};
// Throws SPLIT_INCOMPLETE when a reducible block cannot be split exactly
// unless allow_incomplete is set.
Decomposition isotypic_decomposition(const std::vector<Mat<Q>>& h, const Mat<Q>& g,
                                     bool allow_incomplete = false);

struct DichotomyReport {
  bool codazzi = false;
  bool reeb_curvature_zero = false;
  int horizontal_dim = 0;
  int full_dim = 0;
  int quotient_dim = 0;  // dim FULL(ADAPTED) - dim HORIZONTAL
  bool violation = false;
  std::string detail;
};
DichotomyReport dichotomy_report(const Geometry& geo, const std::vector<Q>& point, int depth = 2);

// Piecewise polynomial paths: each segment is a list of univariate
// polynomials (coefficients low to high) in t in [0,1].
using PathSegment = std::vector<std::vector<Q>>;
using Path = std::vector<PathSegment>;

Path square_loop(const std::vector<Q>& p, int i, int j, const Q& h);

struct TransportOptions {
  ConnTag conn = ConnTag::ADAPTED;
  int steps = 200;  // RK4 steps per segment
  std::optional<FieldMat> custom;
};
// Transition matrix (frame components) of parallel transport along the path.
Mat<double> parallel_transport(const Geometry& geo, const Path& path, const TransportOptions& opt);

// Full curvature R^N(u, v) at a point for coordinate vectors u, v.
Mat<Q> coordinate_curvature(const Geometry& geo, const std::vector<Q>& point, int i, int j,
                            ConnTag conn, const std::optional<FieldMat>& custom = std::nullopt);

struct ThetaTransport {
  double integral = 0;            // closed-path integral of theta
  std::optional<Q> exact;         // when the pull-back is polynomial
  double factor = 1;              // exp(-integral)
};
// Exact for polynomial theta; 10-point Gauss-Legendre per segment otherwise
// or when forced (the exact value is still reported).
ThetaTransport theta_transport(const ContactModel& model, const Path& path, bool force_quadrature = false);

Mat<double> matrix_log(const Mat<double>& T);

}  // namespace holab
