#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "holab.h"

namespace {
const std::string kModels = HOLAB_MODELS_DIR;
}

TEST_CASE("load and analyze through the C API") {
  holab_model* m = nullptr;
  REQUIRE(holab_model_load_file((kModels + "/heisenberg2.json").c_str(), &m) == HOLAB_OK);
  CHECK(std::string(holab_model_name(m)) == "heisenberg2");
  CHECK(holab_model_m(m) == 2);

  holab_analyze_options o;
  holab_analyze_options_init(&o);
  CHECK(o.depth == 2);
  holab_result* r = nullptr;
  REQUIRE(holab_analyze(m, &o, &r) == HOLAB_OK);
  CHECK(holab_result_verdict(r) == HOLAB_OK);
  std::string js = holab_result_json(r);
  CHECK(js.find("\"schema\": \"holonomy-lab/1\"") != std::string::npos);
  CHECK(std::string(holab_result_text(r)).size() > 0);
  holab_result_free(r);

  o.point = "0,0,0,0,1/2";
  REQUIRE(holab_analyze(m, &o, &r) == HOLAB_OK);
  holab_result_free(r);

  o.point = "0,zz";
  CHECK(holab_analyze(m, &o, &r) == HOLAB_PARSE_ERROR);
  CHECK(std::string(holab_last_error()).rfind("PARSE_ERROR", 0) == 0);
  holab_model_free(m);
}

TEST_CASE("error statuses and exit codes") {
  holab_model* m = nullptr;
  CHECK(holab_model_load_json("{", "x.json", &m) == HOLAB_PARSE_ERROR);
  CHECK(m == nullptr);
  CHECK(holab_model_load_json(R"({"m": 1})", "x.json", &m) == HOLAB_MODEL_INVALID);
  CHECK(std::string(holab_last_error()).find("MODEL_INVALID") != std::string::npos);
  CHECK(holab_model_load_file(nullptr, &m) == HOLAB_INVALID_INPUT);
  CHECK(holab_analyze(nullptr, nullptr, nullptr) == HOLAB_INVALID_INPUT);

  holab_result* r = nullptr;
  CHECK(holab_subsym("torsion-family", 3, "0", "1", &r) == HOLAB_PARAM_DOMAIN);
  CHECK(holab_spin(9, "su", &r) == HOLAB_SIZE_GUARD);
  CHECK(holab_subsym("torsion-family", 3, "1/x", "1", &r) == HOLAB_PARSE_ERROR);

  CHECK(holab_exit_code(HOLAB_OK) == 0);
  CHECK(holab_exit_code(HOLAB_SYNTAX_ERROR) == 1);
  CHECK(holab_exit_code(HOLAB_MISMATCH) == 2);
  CHECK(holab_exit_code(HOLAB_THEOREM_VIOLATION) == 3);
  CHECK(holab_exit_code(HOLAB_NO_FIXPOINT) == 4);
  CHECK(holab_exit_code(HOLAB_INTERNAL) == 5);
  CHECK(holab_exit_code(-3) == 5);
  CHECK(std::string(holab_status_name(HOLAB_SIZE_GUARD)) == "SIZE_GUARD");
  CHECK(std::string(holab_status_name(999)) == "UNKNOWN");
}

TEST_CASE("NULL handles are tolerated by accessors") {
  CHECK(std::string(holab_result_json(nullptr)).empty());
  CHECK(holab_result_verdict(nullptr) == HOLAB_INVALID_INPUT);
  CHECK(holab_model_m(nullptr) == 0);
  holab_result_free(nullptr);
  holab_model_free(nullptr);
  holab_analyze_options_init(nullptr);
  holab_transport_options_init(nullptr);
}

TEST_CASE("subsym, spin and transport results") {
  holab_result* r = nullptr;
  REQUIRE(holab_subsym("torsion-family", 3, "1", "2", &r) == HOLAB_OK);
  CHECK(std::string(holab_result_json(r)).find("so(5)") != std::string::npos);
  holab_result_free(r);

  REQUIRE(holab_spin(4, "su", &r) == HOLAB_OK);
  CHECK(holab_result_verdict(r) == HOLAB_OK);
  holab_result_free(r);

  holab_model* m = nullptr;
  REQUIRE(holab_model_load_file((kModels + "/heisenberg2-zshear.json").c_str(), &m) == HOLAB_OK);
  holab_transport_options t;
  holab_transport_options_init(&t);
  t.steps = 0;
  CHECK(holab_transport(m, &t, &r) == HOLAB_INVALID_INPUT);
  t.steps = 100;
  REQUIRE(holab_transport(m, &t, &r) == HOLAB_OK);
  CHECK(std::string(holab_result_json(r)).find("observed_order") != std::string::npos);
  holab_result_free(r);
  holab_model_free(m);
}
