#include <cmath>
#include <cstdio>
#include <sstream>

#include "holab/app.hpp"
#include "holab/holonomy.hpp"
#include "holab/spinrep.hpp"
#include "holab/subsym.hpp"

namespace holab::app {

namespace {

Json mat_json(const Mat<Q>& A) {
  Json rows = Json::array();
  for (int i = 0; i < A.r; ++i) {
    Json row = Json::array();
    for (int j = 0; j < A.c; ++j) row.push_back(to_string(A(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json mat_json(const Mat<double>& A) {
  Json rows = Json::array();
  for (int i = 0; i < A.r; ++i) {
    Json row = Json::array();
    for (int j = 0; j < A.c; ++j) row.push_back(A(i, j));
    rows.push_back(row);
  }
  return rows;
}

std::string fmt(double x, const char* f = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string algebra_text(ZooLabel l, int m) {
  auto s = [](int k) { return std::to_string(k); };
  switch (l) {
    case ZooLabel::SO_M_PLUS_2: return "so(" + s(m + 2) + ")";
    case ZooLabel::SO_2_M: return "so(2," + s(m) + ")";
    case ZooLabel::SO_1_M_PLUS_1: return "so(1," + s(m + 1) + ")";
    case ZooLabel::EUCLIDEAN_MOTION: return "so(" + s(m + 1) + ") x| R^" + s(m + 1);
    case ZooLabel::LORENTZ_MOTION: return "so(1," + s(m) + ") x| R^(1," + s(m) + ")";
    case ZooLabel::HEISENBERG: return "h(" + s(2 * m + 1) + ")";
    case ZooLabel::AMBIGUOUS: return "ambiguous";
    case ZooLabel::UNMATCHED: return "unmatched";
  }
  return "?";
}

Json row_json(const ClassRow& r) {
  return Json{{"row", r.row},
              {"tau", r.tau},
              {"space", r.space},
              {"hol_horizontal", r.hol_horizontal},
              {"hol_adapted", r.hol_adapted}};
}

std::string subset_text(int mask, int m) {
  std::string s = "{";
  bool first = true;
  for (int k = 0; k < m; ++k)
    if (mask >> k & 1) {
      s += (first ? "" : ",") + std::to_string(k + 1);
      first = false;
    }
  return s + "}";
}

}  // namespace

Outcome subsym(const std::string& kind, int m, const Q& lambda, const Q& mu) {
  ZooParams p;
  p.m = m;
  p.lambda = lambda;
  p.mu = mu;
  if (kind == "heisenberg") p.kind = ZooKind::HEISENBERG;
  else if (kind == "cpn-sphere") p.kind = ZooKind::CPN_SPHERE;
  else if (kind == "torsion-family") p.kind = ZooKind::TORSION_FAMILY;
  else throw Error(Err::INVALID_INPUT, "unknown zoo kind '" + kind + "' (heisenberg, cpn-sphere, torsion-family)");
  auto r = zoo(p);
  auto t1 = class_report({r}, false);
  const auto& diff = t1.rows.front();

  Json checks = Json::array();
  for (const auto& c : r.validation.checks) {
    Json e{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(e);
  }
  Json rep;
  rep["schema"] = kSchema;
  rep["command"] = "subsym";
  rep["kind"] = kind;
  rep["m"] = m;
  rep["lambda"] = to_string(lambda);
  rep["mu"] = to_string(mu);
  rep["conventions"] = convention_block();
  rep["dim"] = r.q.L.dim();
  rep["validation"] = Json{{"ok", r.validation.ok()},
                           {"transvection", r.validation.transvection},
                           {"sub_torsion_free", r.validation.sub_torsion_free},
                           {"checks", checks}};
  rep["killing_signature"] = {r.fingerprint.n_pos, r.fingerprint.n_zero, r.fingerprint.n_neg};
  rep["fingerprint"] = r.fingerprint.str();
  rep["label"] = zoo_label_name(r.match.label);
  // su(m+1) lies outside the torsion-family reference list
  std::string alg = p.kind == ZooKind::CPN_SPHERE ? "su(" + std::to_string(m + 1) + ")" : algebra_text(r.match.label, m);
  rep["algebra"] = alg;
  rep["expected_label"] = r.expected_label ? Json(zoo_label_name(*r.expected_label)) : Json(nullptr);
  rep["case_split_ok"] = r.case_split_ok;
  rep["holonomy"] = Json{{"horizontal", Json{{"dim", r.hol.horizontal_dim}, {"label", label_name(r.cls_horizontal.label)}}},
                         {"adapted", Json{{"dim", r.hol.adapted_dim}, {"label", label_name(r.cls_adapted.label)}}},
                         {"ad_xi", mat_json(r.hol.ad_xi)},
                         {"tau_star", mat_json(r.hol.tau_star)},
                         {"A_xi", mat_json(r.hol.A_xi)}};
  rep["scal_tau"] = to_string(r.scal_tau);
  rep["classification"] = Json{{"got", row_json(diff.got)},
                       {"want", diff.want ? row_json(*diff.want) : Json(nullptr)},
                       {"match", diff.match}};

  Outcome out;
  std::string status = "OK";
  if (!r.case_split_ok) {
    status = "THEOREM_VIOLATION";
    out.verdict = Err::THEOREM_VIOLATION;
    out.verdict_detail = "case split: got " + std::string(zoo_label_name(r.match.label));
  } else if (!diff.match) {
    status = "MISMATCH";
    out.verdict = Err::MISMATCH;
    out.verdict_detail = "classification row " + diff.row + " differs from the fixture";
  }
  rep["verdict"] = status;

  std::ostringstream t;
  t << zoo_kind_name(p.kind) << "(m=" << m;
  if (p.kind == ZooKind::TORSION_FAMILY) t << ", lambda=" << to_string(lambda) << ", mu=" << to_string(mu);
  t << "): dim " << r.q.L.dim() << ", quadruple " << (r.validation.ok() ? "valid" : "INVALID: " + r.validation.first_failure())
    << "\n";
  t << "algebra " << alg << " [" << zoo_label_name(r.match.label) << "], killing ("
    << r.fingerprint.n_pos << "," << r.fingerprint.n_zero << "," << r.fingerprint.n_neg << ")\n";
  t << "hol pair: (" << r.hol.horizontal_dim << ", " << r.hol.adapted_dim << ") " << label_name(r.cls_horizontal.label)
    << " / " << label_name(r.cls_adapted.label) << "\n";
  t << "scal^tau = " << to_string(r.scal_tau) << "\n";
  t << "classification: " << diff.got.str() << (diff.match ? "  [matches fixture]" : "  [DIFFERS]") << "\n";
  t << "verdict: " << status << "\n";
  out.report = std::move(rep);
  out.text = t.str();
  return out;
}

Outcome spin(int m, const std::string& algebra) {
  EmbedLabel l = embed_label_from_name(algebra);
  auto rep = build_spin_rep(m);
  auto h = embed_algebra(l, m);
  auto ann = annihilator(rep, h);
  auto wd = weight_decomposition(rep);

  Json basis = Json::array();
  for (const auto& v : ann.basis) {
    Json vec = Json::object();
    for (int s = 0; s < int(v.size()); ++s)
      if (!is_zero(v[s])) vec[subset_text(s, m)] = to_string(v[s]);
    basis.push_back(vec);
  }
  Json weights = Json::array();
  for (const auto& L : wd.levels)
    weights.push_back(Json{{"k", L.k},
                           {"kaehler", to_string(L.kaehler_eigenvalue)},
                           {"rho_J", to_string(L.rho_J_eigenvalue)},
                           {"multiplicity", L.multiplicity}});
  bool extremal = ann.dim > 0;
  for (int k = 1; k < m; ++k) extremal = extremal && ann.profile[k] == 0;

  Json out_rep;
  out_rep["schema"] = kSchema;
  out_rep["command"] = "spin";
  out_rep["m"] = m;
  out_rep["algebra"] = embed_label_name(l);
  out_rep["algebra_dim"] = int(h.size());
  out_rep["conventions"] = convention_block();
  out_rep["annihilator_dim"] = ann.dim;
  out_rep["profile"] = ann.profile;
  out_rep["extremal_only"] = extremal;
  out_rep["basis"] = basis;
  out_rep["sigma"] = wd.sigma;
  out_rep["weights"] = weights;

  std::ostringstream t;
  t << "spin module of so(" << 2 * m << "), dim " << rep.dim << "; algebra " << embed_label_name(l) << " (dim "
    << h.size() << ")\n";
  t << "annihilated spinors: " << ann.dim << "\n";
  t << "profile over Lambda^k:";
  for (int k = 0; k <= m; ++k) t << " " << ann.profile[k];
  t << (extremal ? "  (extremal weights only)" : "") << "\n";
  t << "rho(J) weights:";
  for (const auto& L : wd.levels) t << " k=" << L.k << ":" << to_string(L.rho_J_eigenvalue) << "x" << L.multiplicity;
  t << "\n";
  Outcome out;
  out.report = std::move(out_rep);
  out.text = t.str();
  return out;
}

Outcome transport(const ModelDoc& doc, const TransportRequest& req) {
  const ContactModel& M = doc.model;
  Geometry geo(M);
  std::vector<Q> p = req.point ? *req.point : M.base_point;
  if (int(p.size()) != M.n()) throw Error(Err::INVALID_INPUT, "point needs " + std::to_string(M.n()) + " coordinates");
  if (req.i < 0 || req.j < 0 || req.i >= M.n() || req.j >= M.n() || req.i == req.j)
    throw Error(Err::INVALID_INPUT, "plane needs two distinct coordinate indices below " + std::to_string(M.n()));
  if (sgn(req.side) <= 0) throw Error(Err::INVALID_INPUT, "side must be positive");
  std::string up;
  for (char c : req.conn) up += char(std::toupper(static_cast<unsigned char>(c)));
  ConnTag tag = conn_from_name(up);
  if (tag != ConnTag::ADAPTED && tag != ConnTag::WAGNER)
    throw Error(Err::INVALID_INPUT, "transport needs a full connection (adapted or wagner)");

  Mat<Q> R = coordinate_curvature(geo, p, req.i, req.j, tag);
  Mat<double> Rd = to_double(R);
  TransportOptions to;
  to.conn = tag;
  to.steps = req.steps;
  Json runs = Json::array();
  double errs[2];
  Mat<double> T0;
  for (int k = 0; k < 2; ++k) {
    Q h = req.side / Q(1 << k);
    h.canonicalize();
    auto T = parallel_transport(geo, square_loop(p, req.i, req.j, h), to);
    if (k == 0) T0 = T;
    double hd = h.get_d();
    errs[k] = max_abs(matrix_log(T) + scale(Rd, hd * hd));
    runs.push_back(Json{{"side", to_string(h)}, {"log_error", errs[k]}});
  }
  // both errors vanish when the curvature and the transport are trivial
  std::optional<double> order;
  if (errs[0] > 1e-14 && errs[1] > 1e-14) order = std::log2(errs[0] / errs[1]);
  auto th = theta_transport(M, square_loop(p, req.i, req.j, req.side));

  Json rep;
  rep["schema"] = kSchema;
  rep["command"] = "transport";
  rep["model"] = M.name;
  rep["source"] = doc.source;
  rep["point"] = Json::array();
  for (const auto& x : p) rep["point"].push_back(to_string(x));
  rep["plane"] = {req.i, req.j};
  rep["connection"] = conn_name(tag);
  rep["steps"] = req.steps;
  rep["conventions"] = convention_block();
  rep["curvature"] = mat_json(R);
  rep["transport"] = mat_json(T0);
  rep["richardson"] = runs;
  rep["observed_order"] = order ? Json(*order) : Json(nullptr);
  rep["theta"] = Json{{"integral", th.integral},
                      {"exact", th.exact ? Json(to_string(*th.exact)) : Json(nullptr)},
                      {"factor", th.factor}};

  std::ostringstream t;
  t << "transport of " << conn_name(tag) << " around the (" << M.vars[req.i] << "," << M.vars[req.j]
    << ") square of side " << to_string(req.side) << ", " << req.steps << " RK4 steps per side\n";
  t << "|log T + h^2 R|: h=" << to_string(req.side) << " " << fmt(errs[0]) << ", h/2 " << fmt(errs[1])
    << ", observed order " << (order ? fmt(*order, "%.3f") : std::string("n/a")) << "\n";
  t << "theta integral " << fmt(th.integral, "%.12g");
  if (th.exact) t << " (exact " << to_string(*th.exact) << ")";
  t << ", factor exp(-int theta) = " << fmt(th.factor, "%.12g") << "\n";
  Outcome out;
  out.report = std::move(rep);
  out.text = t.str();
  return out;
}

}  // namespace holab::app
