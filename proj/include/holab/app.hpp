#pragma once
// Model files, command pipelines and report rendering behind the C API.
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "holab/contactgeo.hpp"

namespace holab::app {

using Json = nlohmann::ordered_json;
inline constexpr const char* kSchema = "holonomy-lab/1";

struct ModelDoc {
  ContactModel model;
  Json expect;           // null when absent
  std::string source;    // file name without directories
};

// Field paths appear in error messages, e.g. "metric[1][0]".
// PARSE_ERROR / SYNTAX_ERROR / UNKNOWN_VARIABLE for text problems,
// MODEL_INVALID for schema or shape problems.
ModelDoc parse_model(const Json& doc, const std::string& source);
ModelDoc load_model_text(const std::string& text, const std::string& source);
ModelDoc load_model_file(const std::string& path);

// 0 ok, 1 parse, 2 validation, 3 theorem violation, 4 no fixpoint, 5 internal.
int exit_code(Err e);

struct Outcome {
  Json report;
  std::string text;
  std::optional<Err> verdict;   // set when the run completed but must exit nonzero
  std::string verdict_detail;
};

Json convention_block();

struct AnalyzeOptions {
  int depth = 2;
  std::optional<std::vector<Q>> point;
  int points = 5;
  uint64_t seed = 20240607;
};
Outcome analyze(const ModelDoc& doc, const AnalyzeOptions& opt = {});

// Leaves of `expect` absent from or different in `report`, as JSON paths.
std::vector<std::string> expect_mismatches(const Json& expect, const Json& report);

Outcome subsym(const std::string& kind, int m, const Q& lambda, const Q& mu);
Outcome spin(int m, const std::string& algebra);

struct TransportRequest {
  int i = 0, j = 2;
  Q side = Q(1, 10);
  std::string conn = "adapted";
  int steps = 200;
  std::optional<std::vector<Q>> point;
};
Outcome transport(const ModelDoc& doc, const TransportRequest& req);

struct SelftestOptions {
  std::string corpus_dir;  // empty: the compiled-in models directory
  std::string filter;      // case-insensitive substring of check names
};
Outcome selftest(const SelftestOptions& opt);

// Heisenberg model document with optional metric shear g = I + f S, used by
// the transport property suite.
ModelDoc heisenberg_doc(int m, const std::string& shear = "", bool with_j = false);

}  // namespace holab::app
