#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holab/app.hpp"

using namespace holab;
using app::Json;

namespace {

const std::string kModels = HOLAB_MODELS_DIR;
const std::string kFixtures = HOLAB_FIXTURES_DIR;

Json small_model() {
  return Json::parse(R"({
    "schema": "holonomy-lab/1", "name": "h1", "m": 1, "dimension": 3,
    "variables": ["x", "y", "z"],
    "theta": ["-y", "x", "1"],
    "frame": [["1", "0", "y"], ["0", "1", "-x"]],
    "metric": [["1", "0"], ["1"]]
  })");
}

Err load_error(const Json& j, std::string* msg = nullptr) {
  try {
    app::parse_model(j, "t.json");
  } catch (const Error& e) {
    if (msg) *msg = e.what();
    return e.code;
  }
  FAIL("model loaded");
  return Err::INTERNAL;
}

}  // namespace

TEST_CASE("loader accepts triangle and full metrics and defaults") {
  auto d = app::parse_model(small_model(), "dir/h1.json");
  CHECK(d.model.m == 1);
  CHECK(d.model.name == "h1");
  CHECK(d.source == "h1.json");
  CHECK(d.expect.is_null());
  CHECK(d.model.base_point == std::vector<Q>{0, 0, 0});

  Json full = small_model();
  full["metric"] = Json::parse(R"([["2", "1"], [null, "3"]])");
  full.erase("name");
  auto f = app::parse_model(full, "stem.json");
  CHECK(f.model.name == "stem");
  CHECK(f.model.metric[2] == RatFunc::constant(3, 1));
  CHECK(f.model.metric[3] == RatFunc::constant(3, 3));
}

TEST_CASE("loader errors carry field paths") {
  std::string msg;
  Json j = small_model();
  j["metric"] = Json::parse(R"([["1", "0"], ["2", "1"]])");
  CHECK(load_error(j, &msg) == Err::MODEL_INVALID);
  CHECK(msg.find("metric[1][0]") != std::string::npos);

  j = small_model();
  j["theta"][0] = "-y +";
  CHECK(load_error(j, &msg) == Err::SYNTAX_ERROR);
  CHECK(msg.find("theta[0]") != std::string::npos);

  j = small_model();
  j["frame"][1][2] = "w";
  CHECK(load_error(j, &msg) == Err::UNKNOWN_VARIABLE);
  CHECK(msg.find("frame[1][2]") != std::string::npos);

  j = small_model();
  j.erase("theta");
  CHECK(load_error(j, &msg) == Err::MODEL_INVALID);
  CHECK(msg.find("theta") != std::string::npos);

  j = small_model();
  j["schema"] = "other/2";
  CHECK(load_error(j) == Err::MODEL_INVALID);

  CHECK_THROWS_AS(app::load_model_file(kFixtures + "/malformed/not_json.json"), Error);
  try {
    app::load_model_file(kFixtures + "/malformed/not_json.json");
  } catch (const Error& e) {
    CHECK(e.code == Err::PARSE_ERROR);
  }
}

TEST_CASE("exit code taxonomy") {
  CHECK(app::exit_code(Err::PARSE_ERROR) == 1);
  CHECK(app::exit_code(Err::SYNTAX_ERROR) == 1);
  CHECK(app::exit_code(Err::UNKNOWN_VARIABLE) == 1);
  CHECK(app::exit_code(Err::MODEL_INVALID) == 2);
  CHECK(app::exit_code(Err::MISMATCH) == 2);
  CHECK(app::exit_code(Err::PARAM_DOMAIN) == 2);
  CHECK(app::exit_code(Err::SIZE_GUARD) == 2);
  CHECK(app::exit_code(Err::THEOREM_VIOLATION) == 3);
  CHECK(app::exit_code(Err::NO_FIXPOINT) == 4);
  CHECK(app::exit_code(Err::INTERNAL) == 5);
}

TEST_CASE("analyze flat Heisenberg") {
  auto out = app::analyze(app::load_model_file(kModels + "/heisenberg3.json"));
  const Json& r = out.report;
  CHECK_FALSE(out.verdict);
  CHECK(r["flags"]["contact_ok"] == true);
  CHECK(r["normalization"]["dtheta_beta"] == "-12");
  for (const char* c : {"SCHOUTEN", "ADAPTED", "WAGNER"}) CHECK(r["holonomy"][c]["dim"] == 0);
  CHECK(r["class_candidate"]["row"] == "heisenberg");
  CHECK(r["expect"]["mismatches"].empty());
  CHECK(out.text.find("heisenberg3") != std::string::npos);
}

TEST_CASE("analyze pseudo-Hermitian model") {
  auto out = app::analyze(app::load_model_file(kModels + "/heisenberg3-cr.json"));
  const Json& r = out.report;
  CHECK_FALSE(out.verdict);
  CHECK(r["flags"]["pseudo_hermitian"] == true);
  CHECK(r["flags"]["pseudo_einstein"] == true);
  CHECK(r["normalization"]["dtheta_beta_j"] == "6");
  CHECK(r["spinors"]["consistent"] == true);

  auto tw = app::analyze(app::load_model_file(kModels + "/heisenberg2-twisted.json"));
  CHECK(tw.report["flags"]["pseudo_hermitian"] == false);
  CHECK_FALSE(tw.verdict);
  CHECK_FALSE(tw.report["not_applicable"].empty());
}

TEST_CASE("expect fragments are compared leafwise") {
  Json report = Json::parse(R"({"a": {"b": "1", "c": [1, 2]}, "d": true})");
  CHECK(app::expect_mismatches(Json::parse(R"({"a": {"b": "1"}})"), report).empty());
  auto mm = app::expect_mismatches(Json::parse(R"({"a": {"b": "2", "x": 0}, "d": true})"), report);
  REQUIRE(mm.size() == 2);
  CHECK(mm[0] == "$.a.b");
  CHECK(mm[1] == "$.a.x");

  auto bug = app::analyze(app::load_model_file(kFixtures + "/corpus_signbug/heisenberg3-cr-signbug.json"));
  REQUIRE(bug.verdict);
  CHECK(*bug.verdict == Err::MISMATCH);
  CHECK(bug.verdict_detail.find("dtheta_beta_j") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  auto doc = app::load_model_file(kModels + "/heisenberg2-zshear.json");
  CHECK(app::analyze(doc).report.dump() == app::analyze(doc).report.dump());
  app::AnalyzeOptions o;
  o.seed = 7;
  CHECK(app::analyze(doc, o).report["seed"] == 7);
}

TEST_CASE("subsym and spin outcomes") {
  auto s = app::subsym("torsion-family", 3, Q(1), Q(2));
  CHECK_FALSE(s.verdict);
  CHECK(s.report["algebra"] == "so(5)");
  CHECK(s.report["holonomy"]["horizontal"]["dim"] == 3);
  CHECK(s.report["holonomy"]["adapted"]["dim"] == 4);
  CHECK(s.report["classification"]["match"] == true);
  try {
    app::subsym("torsion-family", 3, Q(0), Q(2));
    FAIL("lambda = 0 accepted");
  } catch (const Error& e) {
    CHECK(e.code == Err::PARAM_DOMAIN);
  }

  auto sp = app::spin(3, "su");
  CHECK(sp.report["annihilator_dim"] == 2);
  CHECK(sp.report["profile"] == Json::parse("[1, 0, 0, 1]"));
  CHECK(app::spin(3, "u").report["annihilator_dim"] == 0);
  try {
    app::spin(9, "su");
    FAIL("m = 9 accepted");
  } catch (const Error& e) {
    CHECK(e.code == Err::SIZE_GUARD);
  }
}

TEST_CASE("transport reports a fourth-order rule") {
  app::TransportRequest req;
  auto t = app::transport(app::load_model_file(kModels + "/heisenberg2-zshear.json"), req);
  REQUIRE(t.report["observed_order"].is_number());
  CHECK(t.report["observed_order"].get<double>() > 3.5);
}
