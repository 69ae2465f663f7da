#include "holab.h"

#include <new>
#include <sstream>

#include "holab/app.hpp"

using namespace holab;

struct holab_model {
  app::ModelDoc doc;
};

struct holab_result {
  std::string json, text, detail;
  int verdict = HOLAB_OK;
};

static_assert(HOLAB_INTERNAL == int(Err::INTERNAL) + 1, "status table out of sync with Err");

namespace {

thread_local std::string last_error;

int status_of(Err e) { return int(e) + 1; }

template <class F>
int guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return HOLAB_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code);
  } catch (const std::bad_alloc&) {
    last_error = "INTERNAL: out of memory";
  } catch (const std::exception& e) {
    last_error = std::string("INTERNAL: ") + e.what();
  }
  return HOLAB_INTERNAL;
}

void need(const void* p, const char* what) {
  if (!p) throw Error(Err::INVALID_INPUT, std::string(what) + " is NULL");
}

std::vector<Q> parse_point(const char* text) {
  std::vector<Q> p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      p.push_back(parse_rational(item));
    } catch (const Error&) {
      throw Error(Err::PARSE_ERROR, "point entry '" + item + "' is not a rational");
    }
  }
  return p;
}

Q parse_q(const char* text, const char* what) {
  need(text, what);
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw Error(Err::PARSE_ERROR, std::string(what) + " '" + text + "' is not a rational");
  }
}

void emit(const app::Outcome& o, holab_result** out) {
  auto* r = new holab_result;
  r->json = o.report.dump(2) + "\n";
  r->text = o.text;
  if (o.verdict) {
    r->verdict = status_of(*o.verdict);
    r->detail = o.verdict_detail;
  }
  *out = r;
}

}  // namespace

extern "C" {

const char* holab_version(void) { return "1.0.0"; }

const char* holab_status_name(int status) {
  if (status == HOLAB_OK) return "OK";
  if (status < 1 || status > HOLAB_INTERNAL) return "UNKNOWN";
  return err_name(Err(status - 1));
}

int holab_exit_code(int status) {
  if (status == HOLAB_OK) return 0;
  if (status < 1 || status > HOLAB_INTERNAL) return 5;
  return app::exit_code(Err(status - 1));
}

const char* holab_last_error(void) { return last_error.c_str(); }

int holab_model_load_file(const char* path, holab_model** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new holab_model{app::load_model_file(path)};
  });
}

int holab_model_load_json(const char* text, const char* source, holab_model** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new holab_model{app::load_model_text(text, source ? source : "model.json")};
  });
}

const char* holab_model_name(const holab_model* model) { return model ? model->doc.model.name.c_str() : ""; }
int holab_model_m(const holab_model* model) { return model ? model->doc.model.m : 0; }
void holab_model_free(holab_model* model) { delete model; }

void holab_analyze_options_init(holab_analyze_options* opt) {
  if (!opt) return;
  app::AnalyzeOptions d;
  opt->depth = d.depth;
  opt->point = nullptr;
  opt->sample_points = d.points;
  opt->seed = d.seed;
}

int holab_analyze(const holab_model* model, const holab_analyze_options* opt, holab_result** out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    app::AnalyzeOptions o;
    if (opt) {
      o.depth = opt->depth;
      if (opt->point && *opt->point) o.point = parse_point(opt->point);
      o.points = opt->sample_points;
      o.seed = opt->seed;
    }
    emit(app::analyze(model->doc, o), out);
  });
}

int holab_subsym(const char* kind, int m, const char* lambda, const char* mu, holab_result** out) {
  return guarded([&] {
    need(kind, "kind");
    need(out, "out");
    emit(app::subsym(kind, m, parse_q(lambda ? lambda : "1", "lambda"), parse_q(mu ? mu : "0", "mu")), out);
  });
}

int holab_spin(int m, const char* algebra, holab_result** out) {
  return guarded([&] {
    need(algebra, "algebra");
    need(out, "out");
    emit(app::spin(m, algebra), out);
  });
}

void holab_transport_options_init(holab_transport_options* opt) {
  if (!opt) return;
  opt->i = 0;
  opt->j = 2;
  opt->side = "1/10";
  opt->conn = "adapted";
  opt->steps = 200;
  opt->point = nullptr;
}

int holab_transport(const holab_model* model, const holab_transport_options* opt, holab_result** out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    app::TransportRequest req;
    if (opt) {
      req.i = opt->i;
      req.j = opt->j;
      if (opt->side) req.side = parse_q(opt->side, "side");
      if (opt->conn) req.conn = opt->conn;
      req.steps = opt->steps;
      if (opt->point && *opt->point) req.point = parse_point(opt->point);
    }
    if (req.steps < 1) throw Error(Err::INVALID_INPUT, "steps must be positive");
    emit(app::transport(model->doc, req), out);
  });
}

int holab_selftest(const char* corpus_dir, const char* filter, holab_result** out) {
  return guarded([&] {
    need(out, "out");
    app::SelftestOptions o;
    if (corpus_dir) o.corpus_dir = corpus_dir;
    if (filter) o.filter = filter;
    emit(app::selftest(o), out);
  });
}

const char* holab_result_json(const holab_result* r) { return r ? r->json.c_str() : ""; }
const char* holab_result_text(const holab_result* r) { return r ? r->text.c_str() : ""; }
int holab_result_verdict(const holab_result* r) { return r ? r->verdict : HOLAB_INVALID_INPUT; }
const char* holab_result_detail(const holab_result* r) { return r ? r->detail.c_str() : ""; }
void holab_result_free(holab_result* r) { delete r; }

}  // extern "C"
