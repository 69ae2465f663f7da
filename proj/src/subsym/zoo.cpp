#include <sstream>

#include "holab/subsym.hpp"

namespace holab {

namespace {

using MQ = Mat<Q>;

MQ elem(int n, int i, int j) {
  MQ E(n, n);
  E(i, j) = 1;
  return E;
}

// A + iB as a real matrix on (Re, Im).
MQ realify(const MQ& A, const MQ& B) {
  const int n = A.r;
  MQ X(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      X(i, j) = A(i, j);
      X(n + i, n + j) = A(i, j);
      X(i, n + j) = -B(i, j);
      X(n + i, j) = B(i, j);
    }
  return X;
}

void check_m(int m, int lo, int hi) {
  if (m < lo || m > hi)
    throw Error(Err::PARAM_DOMAIN, "m must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::string hol_text(const Classification& c, int dim) {
  switch (c.label) {
    case HolLabel::TRIVIAL: return "{0}";
    case HolLabel::SO_M_LAGRANGIAN: return "so(m)";
    case HolLabel::SO_M_PLUS_U1: return "so(m)+u(1)";
    case HolLabel::SU_M: return "su(m)";
    case HolLabel::U_M: return "u(m)";
    case HolLabel::OTHER: break;
  }
  return "other(" + std::to_string(dim) + ")";
}

std::string space_text(ZooLabel l) {
  switch (l) {
    case ZooLabel::SO_M_PLUS_2: return "SO(m+2)/SO(m)";
    case ZooLabel::SO_2_M: return "SO(2,m)/SO(m)";
    case ZooLabel::SO_1_M_PLUS_1: return "SO(1,m+1)/SO(m)";
    case ZooLabel::EUCLIDEAN_MOTION: return "SO(m+1)xR^(m+1)/SO(m)";
    case ZooLabel::LORENTZ_MOTION: return "SO(1,m)xR^(1,m)/SO(m)";
    case ZooLabel::HEISENBERG: return "H^(2m+1)";
    default: return "unidentified";
  }
}

const char* kHrss = "S1-bundle over HRSS";
const char* kTwisted = "twisted product of H^(2m+1) and S1-fibration over HRSS";

ClassRow render_row(const ZooResult& r) {
  ClassRow row;
  const bool tau0 = is_zero_mat(r.hol.tau_star);
  row.tau = tau0 ? "0" : "nonzero";
  const int hd = r.hol.horizontal_dim, ad = r.hol.adapted_dim;
  if (tau0) {
    if (ad == 0) {
      row.row = "heisenberg";
      row.space = "H^(2m+1)";
      row.hol_horizontal = row.hol_adapted = "{0}";
    } else if (ad == hd + 1) {
      row.row = "s1-bundle-hrss";
      row.space = kHrss;
      row.hol_horizontal = "hol(N)/t";
      row.hol_adapted = "hol(N)";
    } else {
      row.row = "twisted-product";
      row.space = kTwisted;
      row.hol_horizontal = row.hol_adapted = "hol(N)";
    }
  } else {
    row.row = sgn(r.scal_tau) == 0 ? "tau-nonzero-scal0" : "tau-nonzero";
    row.space = space_text(r.match.label);
    row.hol_horizontal = hol_text(r.cls_horizontal, hd);
    row.hol_adapted = hol_text(r.cls_adapted, ad);
  }
  return row;
}

// Alternatives separated by '|'.
bool field_matches(const std::string& got, const std::string& want) {
  size_t start = 0;
  while (true) {
    size_t bar = want.find('|', start);
    if (want.substr(start, bar == std::string::npos ? std::string::npos : bar - start) == got) return true;
    if (bar == std::string::npos) return false;
    start = bar + 1;
  }
}

bool row_matches(const ClassRow& got, const ClassRow& want) {
  return got.row == want.row && got.tau == want.tau && field_matches(got.space, want.space) &&
         got.hol_horizontal == want.hol_horizontal && got.hol_adapted == want.hol_adapted;
}

}  // namespace

const char* zoo_kind_name(ZooKind k) {
  switch (k) {
    case ZooKind::HEISENBERG: return "heisenberg";
    case ZooKind::CPN_SPHERE: return "cpn-sphere";
    case ZooKind::TORSION_FAMILY: return "torsion-family";
    case ZooKind::HRSS_CIRCLE: return "hrss-circle";
  }
  return "?";
}

std::string ClassRow::str() const {
  return row + " | tau " + tau + " | " + space + " | " + hol_horizontal + " | " + hol_adapted;
}

SubSymQuadruple heisenberg_quadruple(int m) {
  check_m(m, 1, 16);
  LocalData ld;
  ld.dim_p = 2 * m;
  ld.R_W.assign(size_t(4) * m * m, MQ(2 * m, 2 * m));
  ld.N_W = MQ(2 * m, 2 * m);
  ld.Theta = MQ(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    ld.Theta(i, m + i) = 1;
    ld.Theta(m + i, i) = -1;
  }
  ld.name = "heisenberg";
  auto q = from_local_data(ld);
  for (int i = 0; i < m; ++i) {
    q.L.labels[i] = "x" + std::to_string(i + 1);
    q.L.labels[m + i] = "y" + std::to_string(i + 1);
  }
  return q;
}

// su(m+1) = s(u(m) + u(1)) + C^m, k = su(m) in the upper-left block.
SubSymQuadruple cpn_quadruple(int m) {
  check_m(m, 1, 6);
  const int n = m + 1;
  const MQ Z(n, n);
  std::vector<MQ> basis;
  std::vector<std::string> labels;
  for (int j = 0; j < m; ++j) {
    basis.push_back(realify(elem(n, j, m) - elem(n, m, j), Z));
    labels.push_back("E" + std::to_string(j + 1));
  }
  for (int j = 0; j < m; ++j) {
    basis.push_back(realify(Z, elem(n, j, m) + elem(n, m, j)));
    labels.push_back("F" + std::to_string(j + 1));
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      basis.push_back(realify(elem(n, i, j) - elem(n, j, i), Z));
      labels.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
      basis.push_back(realify(Z, elem(n, i, j) + elem(n, j, i)));
      labels.push_back("S" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (int i = 0; i + 1 < m; ++i) {
    basis.push_back(realify(Z, elem(n, i, i) - elem(n, i + 1, i + 1)));
    labels.push_back("D" + std::to_string(i + 1));
  }
  MQ X(n, n);
  for (int i = 0; i < m; ++i) X(i, i) = 1;
  X(m, m) = -m;
  basis.push_back(realify(Z, X));
  labels.push_back("xi");

  SubSymQuadruple q;
  q.L = LieAlgebraTable::from_matrices(basis);
  q.L.labels = labels;
  const int dim = int(basis.size());
  for (int a = 0; a < 2 * m; ++a) q.p_idx.push_back(a);
  for (int i = 2 * m; i < dim; ++i) q.h_idx.push_back(i);
  for (int i = 2 * m; i + 1 < dim; ++i) q.k_basis.push_back(unit_vec(dim, i));
  q.xi = unit_vec(dim, dim - 1);
  q.B = MQ::identity(2 * m);
  q.name = "cpn-sphere";
  return q;
}

// p = R^m (x) R^2 with (i, alpha) -> alpha * m + i; k = so(m) acting diagonally.
LocalData torsion_family_data(int m, const Q& lambda, const Q& mu) {
  check_m(m, 2, 8);
  if (sgn(lambda) <= 0) throw Error(Err::PARAM_DOMAIN, "lambda must be positive");
  const int d = 2 * m;
  auto diag2 = [&](const MQ& A) {
    MQ M(d, d);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) M(i, j) = M(m + i, m + j) = A(i, j);
    return M;
  };
  // e_i ^ e_j : Z -> g(e_i, Z) e_j - g(e_j, Z) e_i
  auto wedge = [&](int i, int j) { return diag2(elem(m, j, i) - elem(m, i, j)); };
  LocalData ld;
  ld.dim_p = d;
  ld.name = "torsion-family";
  ld.R_W.assign(size_t(d) * d, MQ(d, d));
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          if (i == j) continue;
          int a = al * m + i, b = be * m + j;
          // same factor: -mu X^Y; mixed: lambda X^Y
          ld.R_W[a * d + b] = scale(wedge(i, j), al == be ? Q(-mu) : Q(lambda));
        }
  ld.Theta = MQ(d, d);
  ld.N_W = MQ(d, d);
  for (int i = 0; i < m; ++i) {
    ld.Theta(i, m + i) = 1;
    ld.Theta(m + i, i) = -1;
    ld.N_W(i, i) = lambda;
    ld.N_W(i, m + i) = -mu;
    ld.N_W(m + i, i) = mu;
    ld.N_W(m + i, m + i) = -lambda;
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) ld.k_span.push_back(diag2(elem(m, i, j) - elem(m, j, i)));
  return ld;
}

std::optional<ZooLabel> torsion_family_expected(const Q& lambda, const Q& mu) {
  if (sgn(lambda) <= 0) return std::nullopt;
  if (sgn(mu) == 0) return ZooLabel::SO_1_M_PLUS_1;
  if (mu == lambda) return ZooLabel::EUCLIDEAN_MOTION;
  if (mu == -lambda) return ZooLabel::LORENTZ_MOTION;
  if (abs(mu) < lambda) return ZooLabel::SO_1_M_PLUS_1;
  return sgn(mu) > 0 ? ZooLabel::SO_M_PLUS_2 : ZooLabel::SO_2_M;
}

ZooResult zoo(const ZooParams& p) {
  ZooResult r;
  r.params = p;
  switch (p.kind) {
    case ZooKind::HEISENBERG:
      check_m(p.m, 2, 16);
      r.q = heisenberg_quadruple(p.m);
      r.expected_label = ZooLabel::HEISENBERG;
      break;
    case ZooKind::CPN_SPHERE:
      check_m(p.m, 2, 6);
      r.q = cpn_quadruple(p.m);
      break;
    case ZooKind::TORSION_FAMILY:
      r.q = from_local_data(torsion_family_data(p.m, p.lambda, p.mu));
      r.expected_label = torsion_family_expected(p.lambda, p.mu);
      break;
    case ZooKind::HRSS_CIRCLE:
      if (!p.data) throw Error(Err::INVALID_INPUT, "hrss-circle needs local data");
      r.q = from_local_data(*p.data);
      break;
  }
  r.validation = validate_quadruple(r.q);
  if (!r.validation.ok()) throw Error(Err::VALIDATION_FAIL, r.validation.first_failure());
  const int d = r.q.p_dim();
  if (d < 4 || d % 2) throw Error(Err::PARAM_DOMAIN, "p must have even dimension at least 4");
  const int m = d / 2;
  r.hol = holonomy_pair(r.q);
  r.cls_horizontal = classify_subalgebra(r.hol.horizontal, r.q.B, m);
  r.cls_adapted = classify_subalgebra(r.hol.adapted, r.q.B, m);
  r.scal_tau = adapted_scalar_curvature(r.q, r.hol);
  r.fingerprint = killing_fingerprint(r.q.L);
  r.match = match_zoo(r.fingerprint, m);
  if (r.expected_label) r.case_split_ok = r.match.label == *r.expected_label;
  r.row = render_row(r);
  return r;
}

std::optional<ClassRow> class_expected(const std::string& id) {
  static const std::vector<ClassRow> rows = {
      {"heisenberg", "0", "H^(2m+1)", "{0}", "{0}"},
      {"s1-bundle-hrss", "0", kHrss, "hol(N)/t", "hol(N)"},
      {"twisted-product", "0", kTwisted, "hol(N)", "hol(N)"},
      {"tau-nonzero", "nonzero",
       "SO(m+2)/SO(m)|SO(2,m)/SO(m)|SO(1,m+1)/SO(m)|SO(m+1)xR^(m+1)/SO(m)|SO(1,m)xR^(1,m)/SO(m)", "so(m)",
       "so(m)+u(1)"},
      {"tau-nonzero-scal0", "nonzero", "SO(1,m+1)/SO(m)", "so(m)", "so(m)"},
  };
  for (const auto& r : rows)
    if (r.row == id) return r;
  return std::nullopt;
}

bool ClassReport::all_match() const {
  for (const auto& r : rows)
    if (!r.match) return false;
  return true;
}

std::string ClassReport::render() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << (r.match ? "  ok   " : "  DIFF ") << r.got.str() << "\n";
    if (!r.match) os << "       expected: " << (r.want ? r.want->str() : std::string("<no stored row>")) << "\n";
  }
  return os.str();
}

ClassReport class_report(const std::vector<ZooResult>& results, bool throw_on_mismatch) {
  ClassReport rep;
  for (const auto& z : results) {
    ClassDiff d;
    d.got = z.row;
    d.row = z.row.row;
    d.want = class_expected(d.row);
    d.match = d.want && row_matches(d.got, *d.want);
    rep.rows.push_back(d);
  }
  if (throw_on_mismatch && !rep.all_match()) throw Error(Err::MISMATCH, "classification mismatch:\n" + rep.render());
  return rep;
}

}  // namespace holab
