// holab command-line front end over the C interface.
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "holab.h"

namespace {

int fail(int status) {
  std::fprintf(stderr, "error: %s\n", holab_last_error());
  return holab_exit_code(status);
}

// Prints the result and turns its verdict into the exit code.
int finish(holab_result* r, bool json) {
  std::fputs(json ? holab_result_json(r) : holab_result_text(r), stdout);
  int v = holab_result_verdict(r);
  if (v != HOLAB_OK) std::fprintf(stderr, "verdict: %s: %s\n", holab_status_name(v), holab_result_detail(r));
  holab_result_free(r);
  return holab_exit_code(v);
}

struct ModelGuard {
  holab_model* m = nullptr;
  ~ModelGuard() { holab_model_free(m); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holab: holonomy of contact sub-Riemannian and pseudo-Hermitian structures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", holab_version());

  bool json = false;

  auto* an = app.add_subcommand("analyze", "analyze a model file");
  std::string model_path, point;
  holab_analyze_options aopt;
  holab_analyze_options_init(&aopt);
  an->add_option("model", model_path, "model JSON file")->required();
  an->add_option("--depth", aopt.depth, "covariant-derivative depth for holonomy generation")->check(CLI::Range(0, 4));
  an->add_option("--point", point, "evaluation point r1,...,rn (rationals)");
  an->add_option("--points", aopt.sample_points, "sample points for the identity suite")->check(CLI::Range(1, 64));
  an->add_option("--seed", aopt.seed, "seed for sample points");
  an->add_flag("--json", json, "emit JSON");

  auto* ss = app.add_subcommand("subsym", "build a sub-symmetric model from the zoo");
  std::string kind, lambda = "1", mu = "0";
  int m = 3;
  ss->add_option("kind", kind, "heisenberg | cpn-sphere | torsion-family")
      ->required()
      ->check(CLI::IsMember({"heisenberg", "cpn-sphere", "torsion-family"}));
  ss->add_option("--m", m, "half the contact rank");
  ss->add_option("--lambda", lambda, "torsion-family lambda (rational)");
  ss->add_option("--mu", mu, "torsion-family mu (rational)");
  ss->add_flag("--json", json, "emit JSON");

  auto* sp = app.add_subcommand("spin", "parallel spinors for an embedded holonomy algebra");
  std::string algebra;
  int sm = 3;
  sp->add_option("--m", sm, "complex dimension of the distribution")->required();
  sp->add_option("--algebra", algebra, "su | u | so | so+u1 | sp | sp+u1")->required();
  sp->add_flag("--json", json, "emit JSON");

  auto* tr = app.add_subcommand("transport", "parallel transport around a coordinate square");
  std::string tpath, plane = "0,2", side = "1/10", conn = "adapted", tpoint;
  int steps = 200;
  tr->add_option("model", tpath, "model JSON file")->required();
  tr->add_option("--plane", plane, "coordinate indices i,j");
  tr->add_option("--side", side, "side length (rational)");
  tr->add_option("--conn", conn, "adapted | wagner")->check(CLI::IsMember({"adapted", "wagner"}));
  tr->add_option("--steps", steps, "RK4 steps per side")->check(CLI::PositiveNumber);
  tr->add_option("--point", tpoint, "corner r1,...,rn");
  tr->add_flag("--json", json, "emit JSON");

  auto* st = app.add_subcommand("selftest", "golden corpus and property suites");
  std::string filter, corpus;
  st->add_option("--filter", filter, "run only checks whose name contains this text");
  st->add_option("--corpus", corpus, "directory of model files");
  st->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  holab_result* r = nullptr;
  int s = HOLAB_OK;
  if (*an) {
    ModelGuard g;
    if ((s = holab_model_load_file(model_path.c_str(), &g.m)) != HOLAB_OK) return fail(s);
    if (!point.empty()) aopt.point = point.c_str();
    if ((s = holab_analyze(g.m, &aopt, &r)) != HOLAB_OK) return fail(s);
  } else if (*ss) {
    if ((s = holab_subsym(kind.c_str(), m, lambda.c_str(), mu.c_str(), &r)) != HOLAB_OK) return fail(s);
  } else if (*sp) {
    if ((s = holab_spin(sm, algebra.c_str(), &r)) != HOLAB_OK) return fail(s);
  } else if (*tr) {
    holab_transport_options topt;
    holab_transport_options_init(&topt);
    if (std::sscanf(plane.c_str(), "%d,%d", &topt.i, &topt.j) != 2) {
      std::fprintf(stderr, "error: --plane expects i,j\n");
      return 1;
    }
    topt.side = side.c_str();
    topt.conn = conn.c_str();
    topt.steps = steps;
    if (!tpoint.empty()) topt.point = tpoint.c_str();
    ModelGuard g;
    if ((s = holab_model_load_file(tpath.c_str(), &g.m)) != HOLAB_OK) return fail(s);
    if ((s = holab_transport(g.m, &topt, &r)) != HOLAB_OK) return fail(s);
  } else if (*st) {
    if ((s = holab_selftest(corpus.c_str(), filter.c_str(), &r)) != HOLAB_OK) return fail(s);
  }
  return finish(r, json);
}
