#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <functional>
#include <sstream>

#include "holab/app.hpp"
#include "holab/holonomy.hpp"
#include "holab/spinrep.hpp"
#include "holab/subsym.hpp"

#ifndef HOLAB_MODELS_DIR
#define HOLAB_MODELS_DIR "models"
#endif

namespace holab::app {

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct Runner {
  std::string filter;
  Json checks = Json::array();
  int passed = 0, failed = 0;
  bool only_expect_failures = true;

  bool wants(const std::string& name) const { return filter.empty() || lower(name).find(filter) != std::string::npos; }

  void record(const std::string& name, bool ok, const std::string& detail = "") {
    if (!wants(name)) return;
    Json e{{"name", name}, {"status", ok ? "PASS" : "FAIL"}};
    if (!detail.empty()) e["detail"] = detail;
    checks.push_back(e);
    if (ok) {
      ++passed;
    } else {
      ++failed;
      if (name.find("/expect") == std::string::npos) only_expect_failures = false;
    }
  }

  // Runs fn only when the name passes the filter; exceptions count as failures.
  void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
    if (!wants(name)) return;
    try {
      auto [ok, detail] = fn();
      record(name, ok, detail);
    } catch (const Error& e) {
      record(name, false, e.what());
    }
  }
};

std::pair<bool, std::string> verdict(bool ok, const std::string& detail) { return {ok, ok ? "" : detail}; }

void corpus_model(Runner& R, const std::filesystem::path& file, Json& models) {
  const std::string prefix = "corpus/" + file.stem().string() + "/";
  ModelDoc doc;
  try {
    doc = load_model_file(file.string());
  } catch (const Error& e) {
    R.record(prefix + "load", false, e.what());
    return;
  }
  models.push_back(doc.model.name);

  // Reeb field: theta(xi) = 1 and L_xi dtheta = 0, symbolically.
  R.run(prefix + "reeb/normalized-and-preserves-dtheta", [&] {
    Geometry geo(doc.model);
    bool one = contract(doc.model.theta, geo.reeb) == RatFunc::constant(doc.model.n(), 1);
    bool inv = lie_derivative(geo.reeb, exterior_d(doc.model.theta)).is_zero();
    return verdict(one && inv, one ? "L_xi dtheta != 0" : "theta(xi) != 1");
  });

  Outcome o;
  try {
    o = analyze(doc);
  } catch (const Error& e) {
    R.record(prefix + "analyze", false, e.what());
    return;
  }
  const Json& rep = o.report;
  for (const auto& e : rep["identities"]) {
    std::string status = e["status"].get<std::string>();
    std::string detail = status;
    if (e.contains("witness")) detail += ": " + e["witness"].get<std::string>();
    R.record(prefix + "identity/" + e["name"].get<std::string>(), status != "FAILED", detail);
  }
  bool fix = true;
  for (const char* c : {"SCHOUTEN", "ADAPTED", "WAGNER"}) fix = fix && rep["holonomy"][c]["fixpoint"].get<bool>();
  R.record(prefix + "holonomy/fixpoint", fix, "generation did not close");
  if (!doc.expect.is_null()) {
    auto miss = rep["expect"]["mismatches"].get<std::vector<std::string>>();
    if (miss.empty()) R.record(prefix + "expect", true);
    for (const auto& p : miss) {
      std::string name = p.substr(2);  // drop "$."
      R.record(prefix + "expect/" + name, false, "report differs from the expected fragment");
    }
  }
}

void zoo_suite(Runner& R) {
  struct Case {
    int l, mu, hor, ada;
  };
  const int m = 3;
  for (auto c : std::vector<Case>{{1, 2, 3, 4}, {1, -2, 3, 4}, {2, 1, 3, 4}, {1, 1, 3, 4}, {1, -1, 3, 4}, {1, 0, 3, 3}}) {
    std::string name = "property/zoo/torsion-family(" + std::to_string(c.l) + "," + std::to_string(c.mu) + ")";
    R.run(name, [&] {
      auto r = zoo(ZooParams{ZooKind::TORSION_FAMILY, m, Q(c.l), Q(c.mu), std::nullopt});
      bool ok = r.case_split_ok && r.expected_label && r.match.label == *r.expected_label &&
                r.scal_tau == Q(2 * c.mu * m * m) && r.hol.horizontal_dim == c.hor && r.hol.adapted_dim == c.ada &&
                jacobi_check(r.q.L).ok();
      return verdict(ok, std::string(zoo_label_name(r.match.label)) + ", scal " + to_string(r.scal_tau) + ", hol (" +
                             std::to_string(r.hol.horizontal_dim) + "," + std::to_string(r.hol.adapted_dim) + ")");
    });
  }
  R.run("property/zoo/so5-killing-signature", [&] {
    auto fp = zoo(ZooParams{ZooKind::TORSION_FAMILY, 3, Q(1), Q(2), std::nullopt}).fingerprint;
    return verdict(fp.n_pos == 0 && fp.n_zero == 0 && fp.n_neg == 10, fp.str());
  });
  R.run("property/zoo/classification", [&] {
    std::vector<ZooResult> rs;
    rs.push_back(zoo(ZooParams{ZooKind::HEISENBERG, 3, Q(1), Q(0), std::nullopt}));
    rs.push_back(zoo(ZooParams{ZooKind::CPN_SPHERE, 3, Q(1), Q(0), std::nullopt}));
    for (auto [l, mu] : std::vector<std::pair<int, int>>{{1, 2}, {1, -2}, {2, 1}, {1, 0}})
      rs.push_back(zoo(ZooParams{ZooKind::TORSION_FAMILY, 3, Q(l), Q(mu), std::nullopt}));
    auto t = class_report(rs, false);
    return verdict(t.all_match(), t.render());
  });
  R.run("property/zoo/param-domain", [&] {
    try {
      zoo(ZooParams{ZooKind::TORSION_FAMILY, 3, Q(0), Q(1), std::nullopt});
    } catch (const Error& e) {
      return verdict(e.code == Err::PARAM_DOMAIN, e.what());
    }
    return verdict(false, "lambda = 0 accepted");
  });
}

void spin_suite(Runner& R) {
  for (int m : {3, 4, 5}) {
    std::string base = "property/spin/m=" + std::to_string(m) + "/";
    bool any = false;
    for (const char* s : {"self-check", "weights", "su", "so", "u", "so+u1"}) any = any || R.wants(base + s);
    if (!any) continue;
    auto rep = build_spin_rep(m);
    R.run(base + "self-check", [&] {
      auto c = spin_self_check(rep);
      return verdict(c.clifford && c.equivariant && c.homomorphism, "Clifford/equivariance/homomorphism");
    });
    R.run(base + "weights", [&] {
      auto wd = weight_decomposition(rep);
      bool ok = wd.sigma == 1 && int(wd.levels.size()) == m + 1;
      for (const auto& L : wd.levels) {
        long long b = 1;
        for (int i = 1; i <= L.k; ++i) b = b * (m - L.k + i) / i;
        Q half(m - 2 * L.k, 2);
        half.canonicalize();
        ok = ok && L.multiplicity == b && L.rho_J_eigenvalue == QC(Q(0), half);
      }
      return verdict(ok, "rho(J) spectrum");
    });
    struct A {
      const char* name;
      EmbedLabel l;
      int dim;
    };
    for (auto a : {A{"su", EmbedLabel::SU, 2}, A{"so", EmbedLabel::SO_LAGRANGIAN, 2}, A{"u", EmbedLabel::U, 0},
                   A{"so+u1", EmbedLabel::SO_PLUS_U1, 0}}) {
      R.run(base + a.name, [&] {
        auto ann = annihilator(rep, embed_algebra(a.l, m));
        bool ok = ann.dim == a.dim;
        if (a.l == EmbedLabel::SU) ok = ok && ann.profile[0] == 1 && ann.profile[m] == 1;
        return verdict(ok, "annihilator dim " + std::to_string(ann.dim));
      });
    }
  }
}

void transport_suite(Runner& R) {
  R.run("property/transport/curvature-richardson", [&] {
    TransportRequest req;
    req.i = 0;
    req.j = 2;
    req.side = Q(1, 10);
    auto o = transport(heisenberg_doc(2, "z"), req);
    const Json& jo = o.report["observed_order"];
    if (jo.is_null()) return verdict(false, "transport error vanished; no order to observe");
    double order = jo.get<double>();
    char buf[64];
    std::snprintf(buf, sizeof buf, "observed order %.3f", order);
    return verdict(order >= 2.7, buf);
  });
  for (int k : {1, 2, 3})
    for (int orient : {1, -1}) {
      Q s(k, 4);
      s.canonicalize();
      std::string tag = "property/transport/theta-square(" + to_string(s) + (orient > 0 ? ",ccw)" : ",cw)");
      R.run(tag, [&] {
        auto doc = heisenberg_doc(2);
        auto loop = orient > 0 ? square_loop(doc.model.base_point, 0, 2, s) : square_loop(doc.model.base_point, 2, 0, s);
        auto t = theta_transport(doc.model, loop, true);
        // Green's theorem: the integral is +-2 * area, the factor exp(-+2 s^2)
        Q area2 = 2 * s * s * orient;
        double want = std::exp(-area2.get_d());
        bool ok = t.exact && *t.exact == area2 && std::fabs(t.integral - area2.get_d()) <= 1e-12 &&
                  std::fabs(t.factor - want) / want <= 1e-8;
        return verdict(ok, "integral " + to_string(t.integral));
      });
    }
}

void algebra_suite(Runner& R) {
  R.run("property/liealg/reference-jacobi", [&] {
    bool ok = jacobi_check(so_table(0, 5)).ok() && jacobi_check(so_table(2, 3)).ok() &&
              jacobi_check(motion_table(0, 4)).ok() && jacobi_check(heisenberg_table(3)).ok();
    return verdict(ok, "reference table fails Jacobi");
  });
  R.run("property/polycalc/frame-bracket-jacobi", [&] {
    auto doc = heisenberg_doc(2, "z");
    Geometry geo(doc.model);
    const auto& F = doc.model.frame;
    auto jac = [&](const VField& a, const VField& b, const VField& c) {
      auto s1 = lie_bracket(a, lie_bracket(b, c)), s2 = lie_bracket(b, lie_bracket(c, a)),
           s3 = lie_bracket(c, lie_bracket(a, b));
      for (size_t i = 0; i < s1.size(); ++i)
        if (!(s1[i] + s2[i] + s3[i]).is_zero()) return false;
      return true;
    };
    bool ok = jac(F[0], F[2], geo.reeb) && jac(F[0], F[1], F[3]);
    return verdict(ok, "Jacobi identity for vector fields");
  });
}

}  // namespace

Outcome selftest(const SelftestOptions& opt) {
  Runner R;
  R.filter = lower(opt.filter);
  std::filesystem::path dir(opt.corpus_dir.empty() ? std::string(HOLAB_MODELS_DIR) : opt.corpus_dir);
  if (!std::filesystem::is_directory(dir)) throw Error(Err::INVALID_INPUT, "corpus directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  Json models = Json::array();
  for (const auto& f : files) corpus_model(R, f, models);
  zoo_suite(R);
  spin_suite(R);
  transport_suite(R);
  algebra_suite(R);

  Json rep;
  rep["schema"] = kSchema;
  rep["command"] = "selftest";
  rep["corpus"] = dir.filename().string();
  rep["filter"] = opt.filter;
  rep["seed"] = AnalyzeOptions{}.seed;
  rep["conventions"] = convention_block();
  rep["models"] = models;
  rep["checks"] = R.checks;
  rep["summary"] = Json{{"passed", R.passed}, {"failed", R.failed}, {"total", R.passed + R.failed}};

  Outcome out;
  std::ostringstream t;
  for (const auto& c : R.checks) {
    t << c["status"].get<std::string>() << "  " << c["name"].get<std::string>();
    if (c.contains("detail") && c["status"] == "FAIL") t << ": " << c["detail"].get<std::string>();
    t << "\n";
  }
  t << R.passed << " passed, " << R.failed << " failed\n";
  if (R.failed) {
    out.verdict = R.only_expect_failures ? Err::MISMATCH : Err::THEOREM_VIOLATION;
    for (const auto& c : R.checks)
      if (c["status"] == "FAIL") {
        out.verdict_detail = c["name"].get<std::string>();
        break;
      }
  }
  if (files.size() < 6 && opt.filter.empty()) t << "note: corpus has fewer than 6 models\n";
  out.report = std::move(rep);
  out.text = t.str();
  return out;
}

}  // namespace holab::app
