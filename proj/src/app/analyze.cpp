#include <sstream>

#include "holab/app.hpp"
#include "holab/holonomy.hpp"
#include "holab/spinrep.hpp"

namespace holab::app {

namespace {

Json qs(const Q& x) { return to_string(x); }

Json mat_json(const Mat<Q>& A) {
  Json rows = Json::array();
  for (int i = 0; i < A.r; ++i) {
    Json row = Json::array();
    for (int j = 0; j < A.c; ++j) row.push_back(to_string(A(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json point_json(const std::vector<Q>& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(to_string(x));
  return a;
}

std::string point_text(const std::vector<Q>& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s + ")";
}

Json hol_json(const HolonomyReport& r) {
  return Json{{"mode", mode_name(r.mode)},
              {"connection", conn_name(r.conn)},
              {"dim", r.dim()},
              {"dims_by_depth", r.dims_by_depth},
              {"stabilized", r.stabilized},
              {"fixpoint", r.fixpoint},
              {"extension_metric", r.extension_metric},
              {"label", label_name(r.cls.label)},
              {"fingerprint", r.cls.fp.str()},
              {"certificate", r.cls.certificate}};
}

Q g_of(const Mat<Q>& g, const Vec<Q>& u, const Vec<Q>& v) {
  Q s(0);
  for (int a = 0; a < g.r; ++a)
    for (int b = 0; b < g.c; ++b)
      if (sgn(g(a, b))) s += u[a] * g(a, b) * v[b];
  return s;
}

Vec<Q> mat_vec(const Mat<Q>& A, const Vec<Q>& v) {
  Vec<Q> out(A.r, Q(0));
  for (int a = 0; a < A.r; ++a)
    for (int b = 0; b < A.c; ++b) out[a] += A(a, b) * v[b];
  return out;
}

// Columns (v_1..v_m, Jv_1..Jv_m), g-orthogonal with g(v_i,v_i) = c g(v_1,v_1)
// for rational squares c, rescaled so that P^T g P is a multiple of I.
// Empty when no such rational frame is found.
std::optional<Mat<Q>> unitary_frame(const Mat<Q>& g, const Mat<Q>& J, int m) {
  const int d = 2 * m;
  std::vector<Vec<Q>> vs, basis;
  std::vector<Q> norms;
  for (int c = 0; c < d && int(vs.size()) < m; ++c) {
    Vec<Q> w(d, Q(0));
    w[c] = 1;
    for (size_t k = 0; k < basis.size(); ++k) {
      Q coef = g_of(g, w, basis[k]) / g_of(g, basis[k], basis[k]);
      for (int a = 0; a < d; ++a) w[a] -= coef * basis[k][a];
    }
    bool zero = true;
    for (const auto& x : w) zero = zero && sgn(x) == 0;
    if (zero) continue;
    Vec<Q> jw = mat_vec(J, w);
    if (sgn(g_of(g, w, jw)) != 0 || g_of(g, w, w) != g_of(g, jw, jw)) return std::nullopt;
    vs.push_back(w);
    basis.push_back(w);
    basis.push_back(jw);
    norms.push_back(g_of(g, w, w));
  }
  if (int(vs.size()) != m) return std::nullopt;
  Mat<Q> P(d, d);
  for (int i = 0; i < m; ++i) {
    Q root;
    if (!is_rational_square(norms[i] / norms[0], &root)) return std::nullopt;
    Vec<Q> jv = mat_vec(J, vs[i]);
    for (int a = 0; a < d; ++a) {
      P(a, i) = vs[i][a] / root;
      P(a, m + i) = jv[a] / root;
    }
  }
  return P;
}

Mat<Q> std_J(int m) {
  Mat<Q> J(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    J(m + i, i) = 1;
    J(i, m + i) = -1;
  }
  return J;
}

std::string hol_text(HolLabel l) {
  switch (l) {
    case HolLabel::TRIVIAL: return "{0}";
    case HolLabel::SO_M_LAGRANGIAN: return "so(m)";
    case HolLabel::SO_M_PLUS_U1: return "so(m)+u(1)";
    case HolLabel::SU_M: return "su(m)";
    case HolLabel::U_M: return "u(m)";
    case HolLabel::OTHER: return "other";
  }
  return "?";
}

struct Ledger {
  Json entries = Json::array();
  std::vector<std::string> failed;
  void add(const Check& c) {
    Json e{{"name", c.name}, {"status", status_name(c.status)}, {"points", c.points}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    entries.push_back(e);
    if (c.status == CheckStatus::FAILED) failed.push_back(c.name);
  }
  void pointwise(const std::string& name, bool ok, const std::string& witness = "") {
    add(Check{name, ok ? CheckStatus::SAMPLED : CheckStatus::FAILED, 1, ok ? "" : witness});
  }
};

}  // namespace

Json convention_block() {
  return Json{
      {"frame_matrix", "A(a,b) is the E_a-coefficient of A E_b"},
      {"wedge", "(X^Y)Z = g(X,Z)Y - g(Y,Z)X"},
      {"bivector_pairing", "<A,B> = sum_ab A(a,b) B(a,b); beta = 2 dtheta^-1; beta_J = -J g^-1"},
      {"clifford_sign", "v.v = -g(v,v); rho(X^Y) = [X.,Y.]/4; Kaehler form acts on Lambda^k by (m-2k)i, sigma = +1"},
      {"tau_index", "tau(E_a,E_b) = (L_xi g)(E_a,E_b)/2; tau endomorphism g^-1 tau acts on frame columns"},
      {"ricci", "Ric(X,Y) = tr(Z -> R(Z,X)Y)"}};
}

Outcome analyze(const ModelDoc& doc, const AnalyzeOptions& opt) {
  const ContactModel& M = doc.model;
  Geometry geo(M);
  std::vector<Q> point = opt.point ? *opt.point : M.base_point;
  if (int(point.size()) != M.n())
    throw Error(Err::INVALID_INPUT, "point needs " + std::to_string(M.n()) + " coordinates");
  if (!geo.regular_at(point)) throw Error(Err::POLE_AT_POINT, "model is singular at " + point_text(point));
  const int m = M.m, d = M.d();

  // Hypotheses of a pseudo-Hermitian structure; the remaining CR checks and
  // the J-pairing are identities only under them.
  const bool pseudo_hermitian =
      geo.cr && geo.cr->j_squared_minus_one && geo.cr->nijenhuis_zero && geo.cr->g_matches_dtheta_j;
  std::vector<std::string> not_applicable;
  auto applicable = [&](const std::string& name) {
    if (name == "cr_metric_is_levi_form" || name == "cr_integrable") return false;
    if ((name.rfind("cr_", 0) == 0 || name == "dtheta_betaJ_pairing") && !pseudo_hermitian) {
      not_applicable.push_back(name);
      return false;
    }
    return true;
  };
  Ledger ledger;
  for (const auto& c : geo.checks)
    if (applicable(c.name)) ledger.add(c);
  IdentityOptions io;
  io.points = opt.points;
  io.seed = opt.seed;
  for (const auto& c : identity_suite(geo, io))
    if (applicable(c.name)) ledger.add(c);

  PointGeom pg(geo, point, 3);
  PointReport pr = point_report(pg);
  const bool tau_zero = is_zero_mat(pr.subtorsion);
  // nabla tau = 0, nabla dtheta = 0, nabla R = 0 at the point and the sample points
  auto parallel = [](const PointReport& r) { return r.subtorsion_parallel && r.dtheta_parallel && r.curvature_parallel; };
  bool subsym_candidate = parallel(pr);
  int subsym_points = 1;
  if (subsym_candidate)
    for (const auto& p : geo.sample_points(opt.points, opt.seed)) {
      ++subsym_points;
      if (!parallel(point_report(PointGeom(geo, p, 3)))) {
        subsym_candidate = false;
        break;
      }
    }

  HolonomyOptions ho;
  ho.depth = opt.depth;
  ho.mode = HolMode::HORIZONTAL;
  ho.conn = ConnTag::SCHOUTEN;
  auto hor = infinitesimal_holonomy(geo, point, ho);
  ho.mode = HolMode::FULL;
  ho.conn = ConnTag::ADAPTED;
  auto ada = infinitesimal_holonomy(geo, point, ho);
  ho.conn = ConnTag::WAGNER;
  auto wag = infinitesimal_holonomy(geo, point, ho);
  auto dich = dichotomy_report(geo, point, opt.depth);

  const bool fixpoint = hor.fixpoint && ada.fixpoint && wag.fixpoint;
  ledger.pointwise("wagner_equals_horizontal", hor.span.same_span(wag.span),
                   "dim FULL(WAGNER) = " + std::to_string(wag.dim()) + ", dim HORIZONTAL = " +
                       std::to_string(hor.dim()));
  ledger.pointwise("holonomy_dichotomy", !dich.violation, dich.detail);
  if (pseudo_hermitian) {
    ledger.pointwise("ricci_tanaka_webster", pr.ric_tw_holds, "Ric(TW) vs rho");
    ledger.pointwise("rtau_type", pr.rtau_u, "R_tau(JX,JY) + R_tau(X,Y)");
    ledger.pointwise("rtau_j_trace", pr.rtau_j_zero, "R_tau(J)");
    ledger.pointwise("r0_bianchi", pr.r0_bianchi, "cyclic sum");
    ledger.pointwise("r0_j_invariant", pr.r0_j_invariant, "R_0(J.,J.) - R_0");
    ledger.pointwise("ricci_rtau", pr.ric_rtau, "Ric(R_tau) - (m-1) tau(.,J.)");
    ledger.pointwise("wagner_equals_basic", pr.basic_equals_wagner, "N^W - tau - rho#/m");
  }

  Json spin = nullptr;
  if (M.J) {
    SpinorQuery q;
    q.m = m;
    q.tau_nonzero = !tau_zero;
    q.horizontal = hor.cls.label;
    q.adapted_differs = ada.dim() != hor.dim();
    std::string frame = "none";
    Mat<Q> g = PointGeom::value(pg.g, d), J = PointGeom::value(*pg.J, d);
    if (pseudo_hermitian) {
      if (auto P = unitary_frame(g, J, m)) {
        Mat<Q> Pi = mat_inverse(*P);
        if (is_zero_mat(Pi * J * *P - std_J(m))) {
          std::vector<Mat<Q>> alg;
          for (const auto& A : hor.basis) alg.push_back(Pi * A * *P);
          q.algebra = alg;
          frame = "rational unitary frame";
        }
      }
    }
    spin = Json{{"frame", frame}};
    try {
      auto v = parallel_spinor_report(q);
      spin["theorem_case"] = v.theorem_case;
      spin["predicted"] = v.predicted ? Json(*v.predicted) : Json(nullptr);
      spin["expected_dim"] = v.expected_dim ? Json(*v.expected_dim) : Json(nullptr);
      spin["computed_dim"] = v.computed_dim ? Json(*v.computed_dim) : Json(nullptr);
      spin["computed_from"] = v.computed_from;
      spin["consistent"] = v.consistent;
      spin["detail"] = v.detail;
      if (v.computed_dim) ledger.pointwise("parallel_spinor_count", v.consistent, v.detail);
    } catch (const Error& e) {
      if (e.code != Err::UNSUPPORTED_LABEL && e.code != Err::SIZE_GUARD) throw;
      spin["theorem_case"] = 0;
      spin["unsupported"] = e.what();
    }
  }

  std::string row = "none";
  if (subsym_candidate) {
    if (tau_zero) row = hor.cls.label == HolLabel::TRIVIAL ? "heisenberg" : "s1-bundle-hrss";
    else row = "tau-nonzero";
  }

  Json rep;
  rep["schema"] = kSchema;
  rep["command"] = "analyze";
  rep["model"] = M.name;
  rep["source"] = doc.source;
  rep["m"] = m;
  rep["dimension"] = M.n();
  rep["point"] = point_json(point);
  rep["depth"] = opt.depth;
  rep["seed"] = opt.seed;
  rep["sample_points"] = opt.points;
  rep["conventions"] = convention_block();
  rep["flags"] = Json{{"contact_ok", true},
                      {"codazzi", pr.codazzi},
                      {"pseudo_hermitian", pseudo_hermitian},
                      {"pseudo_einstein", pseudo_hermitian && pr.pseudo_einstein},
                      {"locally_subsym_candidate", subsym_candidate},
                      {"reeb_curvature_zero", pr.reeb_curvature_zero},
                      {"subtorsion_zero", tau_zero},
                      {"subtorsion_parallel", pr.subtorsion_parallel},
                      {"dtheta_parallel", pr.dtheta_parallel},
                      {"curvature_parallel", pr.curvature_parallel}};
  Json norm{{"dtheta_beta", qs(pr.dtheta_beta)}, {"expected", qs(Q(-4 * m))}};
  if (pr.dtheta_beta_j) {
    norm["dtheta_beta_j"] = qs(*pr.dtheta_beta_j);
    norm["expected_j"] = qs(Q(2 * m));
  }
  rep["locally_subsym_points"] = subsym_points;
  rep["normalization"] = norm;
  rep["subtorsion"] = Json{{"matrix", mat_json(pr.subtorsion)}, {"tau_squared_scalar", pr.tau_squared_scalar}};
  if (M.J) {
    Json cr{{"integrable_pseudo_hermitian", pseudo_hermitian},
            {"j_squared_minus_one", geo.cr->j_squared_minus_one},
            {"nijenhuis_zero", geo.cr->nijenhuis_zero},
            {"g_matches_dtheta_j", geo.cr->g_matches_dtheta_j},
            {"tanaka_webster_equals_adapted", geo.cr->tw_equals_adapted},
            {"torsion_anticommutes_j", geo.cr->torsion_anticommutes_j}};
    if (pseudo_hermitian) {
      cr["ricci_form"] = mat_json(pr.rho);
      cr["scal"] = qs(pr.scal);
      cr["rho_sharp"] = pr.rho_sharp;
    }
    rep["cr"] = cr;
  }
  rep["holonomy"] = Json{{"SCHOUTEN", hol_json(hor)}, {"ADAPTED", hol_json(ada)}, {"WAGNER", hol_json(wag)}};
  rep["wagner_equals_horizontal"] = hor.span.same_span(wag.span);
  rep["dichotomy"] = Json{{"codazzi", dich.codazzi},
                          {"horizontal_dim", dich.horizontal_dim},
                          {"adapted_dim", dich.full_dim},
                          {"quotient_dim", dich.quotient_dim},
                          {"violation", dich.violation},
                          {"detail", dich.detail}};
  rep["class_candidate"] = Json{{"row", row},
                                 {"tau", tau_zero ? "0" : "nonzero"},
                                 {"hol_horizontal", hol_text(hor.cls.label)},
                                 {"hol_adapted", hol_text(ada.cls.label)}};
  rep["spinors"] = spin;
  rep["identities"] = ledger.entries;
  rep["not_applicable"] = not_applicable;

  Outcome out;
  std::string status = "OK";
  if (!ledger.failed.empty()) {
    status = "THEOREM_VIOLATION";
    out.verdict = Err::THEOREM_VIOLATION;
    out.verdict_detail = "failed: " + ledger.failed.front();
  } else if (!fixpoint) {
    status = "NO_FIXPOINT";
    out.verdict = Err::NO_FIXPOINT;
    out.verdict_detail = "holonomy generation did not close";
  }
  rep["verdict"] = Json{{"status", status}, {"failed", ledger.failed}};

  if (!doc.expect.is_null()) {
    auto miss = expect_mismatches(doc.expect, rep);
    rep["expect"] = Json{{"mismatches", miss}};
    if (!miss.empty() && !out.verdict) {
      rep["verdict"]["status"] = "MISMATCH";
      out.verdict = Err::MISMATCH;
      out.verdict_detail = "expectation mismatch at " + miss.front();
    }
  }

  std::ostringstream t;
  t << "model " << M.name << " (m=" << m << ", n=" << M.n() << ") at " << point_text(point) << "\n";
  t << "flags:";
  for (auto& [k, v] : rep["flags"].items()) t << " " << k << "=" << (v.get<bool>() ? "yes" : "no");
  t << "\n<dtheta,beta> = " << to_string(pr.dtheta_beta) << " (expected " << -4 * m << ")";
  if (pr.dtheta_beta_j) t << ", <dtheta,beta_J> = " << to_string(*pr.dtheta_beta_j) << " (expected " << 2 * m << ")";
  t << "\n";
  for (const auto* r : {&hor, &ada, &wag})
    t << "hol " << mode_name(r->mode) << "(" << conn_name(r->conn) << "): dim " << r->dim() << ", "
      << label_name(r->cls.label) << "\n";
  t << "wagner = horizontal: " << (rep["wagner_equals_horizontal"].get<bool>() ? "yes" : "no") << "\n";
  t << "dichotomy: " << dich.detail << "\n";
  t << "class candidate: " << row << "\n";
  if (!spin.is_null()) {
    t << "spinors: case " << spin["theorem_case"].get<int>();
    if (spin.contains("computed_dim") && !spin["computed_dim"].is_null())
      t << ", parallel spinors " << spin["computed_dim"].get<int>() << " (" << spin["computed_from"].get<std::string>()
        << ")";
    if (spin.contains("unsupported")) t << ", " << spin["unsupported"].get<std::string>();
    t << "\n";
  }
  t << "identities:\n";
  for (const auto& e : ledger.entries) {
    t << "  " << e["status"].get<std::string>() << "  " << e["name"].get<std::string>();
    if (e.contains("witness")) t << "  [" << e["witness"].get<std::string>() << "]";
    t << "\n";
  }
  t << "verdict: " << rep["verdict"]["status"].get<std::string>() << "\n";
  out.report = std::move(rep);
  out.text = t.str();
  return out;
}

namespace {
void walk_expect(const Json& want, const Json& got, const std::string& path, std::vector<std::string>& out) {
  if (want.is_object()) {
    if (!got.is_object()) {
      out.push_back(path);
      return;
    }
    for (auto& [k, v] : want.items()) {
      std::string p = path + "." + k;
      if (!got.contains(k)) out.push_back(p);
      else walk_expect(v, got[k], p, out);
    }
    return;
  }
  if (want != got) out.push_back(path);
}
}  // namespace

std::vector<std::string> expect_mismatches(const Json& expect, const Json& report) {
  std::vector<std::string> out;
  walk_expect(expect, report, "$", out);
  return out;
}

}  // namespace holab::app
