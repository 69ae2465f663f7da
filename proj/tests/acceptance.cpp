// One line per acceptance criterion; exit status is the number of red lines.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>

#include "holab/app.hpp"
#include "holab/holonomy.hpp"

using namespace holab;
using app::Json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<app::ModelDoc> corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(HOLAB_MODELS_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<app::ModelDoc> out;
  for (const auto& f : files) out.push_back(app::load_model_file(f.string()));
  return out;
}

struct Analyzed {
  std::string name;
  int m;
  Json r;
};

int red = 0;

void line(int k, const char* what, const std::function<std::pair<bool, std::string>()>& body) {
  std::pair<bool, std::string> res;
  try {
    res = body();
  } catch (const std::exception& e) {
    res = {false, std::string("exception: ") + e.what()};
  }
  if (!res.first) ++red;
  std::printf("criterion %2d %s: %s (%s)\n", k, res.first ? "PASS" : "FAIL", what, res.second.c_str());
  std::fflush(stdout);
}

std::string fmt(double x) {
  char b[64];
  std::snprintf(b, sizeof b, "%.3g", x);
  return b;
}

std::pair<bool, std::string> selftest_slice(const std::string& filter, double budget, int min_checks) {
  auto t0 = Clock::now();
  auto out = app::selftest({"", filter});
  double dt = since(t0);
  const Json& s = out.report["summary"];
  int passed = s["passed"], failed = s["failed"];
  bool ok = failed == 0 && passed >= min_checks && dt < budget;
  return {ok, std::to_string(passed) + " passed, " + std::to_string(failed) + " failed, " + fmt(dt) + " s"};
}

}  // namespace

int main() {
  std::vector<Analyzed> runs;
  double analyze_time = 0;

  line(1, "identity ledger has no FAILED entry on the corpus (m = 2 and 3, < 60 s)", [&] {
    auto t0 = Clock::now();
    std::set<int> ms;
    int failed = 0, entries = 0;
    for (const auto& d : corpus()) {
      runs.push_back({d.model.name, d.model.m, app::analyze(d).report});
      ms.insert(d.model.m);
      for (const auto& id : runs.back().r["identities"]) {
        ++entries;
        if (id["status"] == "FAILED") {
          ++failed;
          std::printf("  %s: %s FAILED\n", d.model.name.c_str(), id["name"].get<std::string>().c_str());
        }
      }
    }
    analyze_time = since(t0);
    bool ok = failed == 0 && ms.count(2) && ms.count(3) && analyze_time < 60;
    return std::pair{ok, std::to_string(runs.size()) + " models, " + std::to_string(entries) + " entries, " +
                             std::to_string(failed) + " failed, " + fmt(analyze_time) + " s"};
  });

  line(2, "<dtheta, beta> = -4m everywhere, <dtheta, beta_J> = 2m on pseudo-Hermitian models", [&] {
    int ph = 0;
    std::string bad;
    for (const auto& a : runs) {
      const Json& n = a.r["normalization"];
      if (n["dtheta_beta"] != std::to_string(-4 * a.m)) bad += " " + a.name;
      if (a.r["flags"]["pseudo_hermitian"] == true) {
        ++ph;
        if (n["dtheta_beta_j"] != std::to_string(2 * a.m)) bad += " " + a.name + "(J)";
      }
    }
    return std::pair{bad.empty() && ph > 0, bad.empty() ? std::to_string(ph) + " pseudo-Hermitian models" : "wrong:" + bad};
  });

  line(3, "Wagner holonomy equals horizontal Schouten holonomy", [&] {
    std::string bad;
    for (const auto& a : runs)
      if (a.r["wagner_equals_horizontal"] != true) bad += " " + a.name;
    return std::pair{bad.empty() && !runs.empty(), bad.empty() ? std::to_string(runs.size()) + " models" : "differs:" + bad};
  });

  line(4, "Codazzi dichotomy for the adapted holonomy", [&] {
    std::string bad;
    int codazzi = 0, other = 0;
    for (const auto& a : runs) {
      const Json& d = a.r["dichotomy"];
      if (d["violation"] != false) bad += " " + a.name;
      if (d["codazzi"] == true) {
        ++codazzi;
        if (d["quotient_dim"] != 0) bad += " " + a.name + "(quotient)";
      } else {
        ++other;
      }
    }
    bool ok = bad.empty() && codazzi > 0 && other > 0;
    return std::pair{ok, bad.empty() ? std::to_string(codazzi) + " Codazzi, " + std::to_string(other) + " non-Codazzi"
                                     : "violated:" + bad};
  });

  line(5, "sub-symmetric zoo validates (< 10 s)", [] { return selftest_slice("property/zoo/", 10, 8); });

  line(6, "classification rows reproduced", [&] {
    std::string bad;
    int rows = 0;
    for (int m : {2, 3}) {
      for (auto [kind, lam, mu] : std::vector<std::tuple<const char*, Q, Q>>{
               {"heisenberg", Q(1), Q(0)}, {"cpn-sphere", Q(1), Q(0)}, {"torsion-family", Q(1), Q(2)}, {"torsion-family", Q(2), Q(-1)}}) {
        auto s = app::subsym(kind, m, lam, mu);
        ++rows;
        if (s.verdict || s.report["classification"]["match"] != true) bad += " " + std::string(kind) + "/m=" + std::to_string(m);
      }
    }
    for (const auto& a : runs) {
      std::string row = a.r["class_candidate"]["row"];
      if (a.name.rfind("heisenberg2", 0) == 0 || a.name.rfind("heisenberg3", 0) == 0) {
        bool flat = a.r["flags"]["subtorsion_zero"] == true && a.r["holonomy"]["ADAPTED"]["dim"] == 0;
        if (flat && row != "heisenberg") bad += " " + a.name;
        if (flat) ++rows;
      }
    }
    return std::pair{bad.empty(), bad.empty() ? std::to_string(rows) + " rows" : "mismatch:" + bad};
  });

  line(7, "parallel spinor counts for m = 3, 4, 5 (< 30 s)", [] { return selftest_slice("property/spin/", 30, 18); });

  line(8, "RK4 transport converges at fourth order on heisenberg2-zshear", [] {
    auto doc = app::load_model_file(std::string(HOLAB_MODELS_DIR) + "/heisenberg2-zshear.json");
    auto out = app::transport(doc, {});
    const Json& o = out.report["observed_order"];
    bool ok = o.is_number() && o.get<double>() >= 3.7 && o.get<double>() <= 4.3;
    return std::pair{ok, "observed order " + (o.is_number() ? fmt(o.get<double>()) : std::string("n/a"))};
  });

  line(9, "theta transport around squares gives exp(-+2 s^2) in both orientations", [] {
    auto doc = app::heisenberg_doc(2);
    double worst = 0;
    bool exact = true;
    for (int k : {1, 2, 3})
      for (int orient : {1, -1}) {
        Q s(k, 4);
        s.canonicalize();
        auto loop = orient > 0 ? square_loop(doc.model.base_point, 0, 2, s) : square_loop(doc.model.base_point, 2, 0, s);
        auto t = theta_transport(doc.model, loop, true);
        Q want = 2 * s * s * orient;
        exact = exact && t.exact && *t.exact == want;
        double w = std::exp(-want.get_d());
        worst = std::max(worst, std::fabs(t.factor - w) / w);
      }
    return std::pair{exact && worst <= 1e-8, "max relative error " + fmt(worst)};
  });

  line(10, "selftest JSON is byte-identical across runs", [] {
    std::string a = app::selftest({}).report.dump(2), b = app::selftest({}).report.dump(2);
    return std::pair{a == b, std::to_string(a.size()) + " bytes"};
  });

  std::printf("acceptance: %d of 10 red\n", red);
  return red == 0 ? 0 : 1;
}
