#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "holab/app.hpp"

namespace holab::app {

namespace {

std::string bare(const Error& e) {
  std::string w = e.what();
  auto k = w.find(": ");
  return k == std::string::npos ? w : w.substr(k + 2);
}

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw Error(Err::MODEL_INVALID, path + ": " + what);
}

const Json& need(const Json& doc, const char* key) {
  if (!doc.contains(key)) invalid(key, "missing field");
  return doc[key];
}

int need_int(const Json& doc, const char* key) {
  const Json& v = need(doc, key);
  if (!v.is_number_integer()) invalid(key, "expected an integer");
  return v.get<int>();
}

std::string expr_text(const Json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  invalid(path, "expected an expression string");
}

RatFunc expr(const Json& v, const std::string& path, const std::vector<std::string>& vars) {
  std::string s = expr_text(v, path);
  try {
    return parse_ratfunc(s, vars);
  } catch (const Error& e) {
    throw Error(e.code, path + ": " + bare(e));
  }
}

std::vector<RatFunc> expr_list(const Json& v, const std::string& path, size_t len,
                               const std::vector<std::string>& vars) {
  if (!v.is_array()) invalid(path, "expected an array");
  if (v.size() != len) invalid(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(v.size()));
  std::vector<RatFunc> out;
  for (size_t i = 0; i < len; ++i) out.push_back(expr(v[i], path + "[" + std::to_string(i) + "]", vars));
  return out;
}

bool blank(const Json& v) { return v.is_null() || (v.is_string() && v.get<std::string>().empty()); }

FieldMat read_metric(const Json& v, int d, const std::vector<std::string>& vars) {
  const std::string path = "metric";
  if (!v.is_array() || int(v.size()) != d) invalid(path, "expected " + std::to_string(d) + " rows");
  int n = int(vars.size());
  FieldMat g(size_t(d) * d, RatFunc(n));
  std::vector<std::vector<bool>> given(d, std::vector<bool>(d, false));
  for (int i = 0; i < d; ++i) {
    const Json& row = v[i];
    std::string rp = path + "[" + std::to_string(i) + "]";
    if (!row.is_array()) invalid(rp, "expected an array");
    int len = int(row.size());
    if (len == d - i && i > 0) {
      // triangle row: entries for columns i..d-1
      for (int j = i; j < d; ++j) {
        g[size_t(i) * d + j] = expr(row[j - i], rp + "[" + std::to_string(j - i) + "]", vars);
        given[i][j] = true;
      }
    } else if (len == d) {
      for (int j = 0; j < d; ++j) {
        if (j < i && blank(row[j])) continue;
        g[size_t(i) * d + j] = expr(row[j], rp + "[" + std::to_string(j) + "]", vars);
        given[i][j] = true;
      }
    } else {
      invalid(rp, "expected " + std::to_string(d) + " or " + std::to_string(d - i) + " entries");
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j) {
      RatFunc up = g[size_t(j) * d + i];
      if (given[i][j] && !(g[size_t(i) * d + j] == up))
        invalid(path + "[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                "asymmetric: " + g[size_t(i) * d + j].str(vars) + " differs from metric[" + std::to_string(j) +
                    "][" + std::to_string(i) + "] = " + up.str(vars));
      g[size_t(i) * d + j] = up;
    }
  return g;
}

std::string stem(const std::string& source) {
  auto s = source.substr(source.find_last_of('/') + 1);
  auto dot = s.rfind('.');
  return dot == std::string::npos ? s : s.substr(0, dot);
}

}  // namespace

ModelDoc parse_model(const Json& doc, const std::string& source) {
  ModelDoc out;
  out.source = source.substr(source.find_last_of('/') + 1);
  if (!doc.is_object()) invalid("$", "expected a JSON object");
  if (doc.contains("schema") && doc["schema"] != kSchema)
    invalid("schema", std::string("expected \"") + kSchema + "\"");
  ContactModel& M = out.model;
  M.m = need_int(doc, "m");
  if (M.m < 1) invalid("m", "must be positive");
  int n = need_int(doc, "dimension");
  if (n != 2 * M.m + 1) invalid("dimension", "must equal 2m+1 = " + std::to_string(2 * M.m + 1));
  int d = 2 * M.m;

  if (doc.contains("variables")) {
    const Json& v = doc["variables"];
    if (!v.is_array() || int(v.size()) != n) invalid("variables", "expected " + std::to_string(n) + " names");
    std::set<std::string> seen;
    for (size_t i = 0; i < v.size(); ++i) {
      std::string p = "variables[" + std::to_string(i) + "]";
      if (!v[i].is_string() || v[i].get<std::string>().empty()) invalid(p, "expected a name");
      if (!seen.insert(v[i].get<std::string>()).second) invalid(p, "duplicate name");
      M.vars.push_back(v[i].get<std::string>());
    }
  } else {
    M.vars = default_var_names(n);
  }

  M.theta = expr_list(need(doc, "theta"), "theta", n, M.vars);
  const Json& fr = need(doc, "frame");
  if (!fr.is_array() || int(fr.size()) != d) invalid("frame", "expected " + std::to_string(d) + " fields");
  for (int a = 0; a < d; ++a) M.frame.push_back(expr_list(fr[a], "frame[" + std::to_string(a) + "]", n, M.vars));
  M.metric = read_metric(need(doc, "metric"), d, M.vars);

  if (doc.contains("J") && !doc["J"].is_null()) {
    const Json& J = doc["J"];
    if (!J.is_array() || int(J.size()) != d) invalid("J", "expected " + std::to_string(d) + " rows");
    FieldMat Jm;
    for (int a = 0; a < d; ++a) {
      auto row = expr_list(J[a], "J[" + std::to_string(a) + "]", d, M.vars);
      Jm.insert(Jm.end(), row.begin(), row.end());
    }
    M.J = Jm;
  }

  M.base_point.assign(n, Q(0));
  if (doc.contains("base_point")) {
    const Json& p = doc["base_point"];
    if (!p.is_array() || int(p.size()) != n) invalid("base_point", "expected " + std::to_string(n) + " rationals");
    for (int i = 0; i < n; ++i) {
      std::string path = "base_point[" + std::to_string(i) + "]";
      try {
        M.base_point[i] = parse_rational(expr_text(p[i], path));
      } catch (const Error& e) {
        if (e.code == Err::MODEL_INVALID) throw;
        throw Error(Err::PARSE_ERROR, path + ": " + bare(e));
      }
    }
  }

  if (doc.contains("name")) {
    if (!doc["name"].is_string()) invalid("name", "expected a string");
    M.name = doc["name"].get<std::string>();
  } else {
    M.name = stem(source);
  }
  if (doc.contains("expect")) {
    if (!doc["expect"].is_object()) invalid("expect", "expected an object");
    out.expect = doc["expect"];
  }
  return out;
}

ModelDoc load_model_text(const std::string& text, const std::string& source) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Err::PARSE_ERROR, source + ": " + e.what());
  }
  return parse_model(doc, source);
}

ModelDoc load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::INVALID_INPUT, path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model_text(ss.str(), path);
}

int exit_code(Err e) {
  switch (e) {
    case Err::PARSE_ERROR:
    case Err::SYNTAX_ERROR:
    case Err::UNKNOWN_VARIABLE:
    case Err::DIVIDE_BY_ZERO_POLY:
    case Err::DEGREE_OVERFLOW:
      return 1;
    case Err::THEOREM_VIOLATION:
      return 3;
    case Err::NO_FIXPOINT:
      return 4;
    case Err::INTERNAL:
      return 5;
    default:
      return 2;
  }
}

ModelDoc heisenberg_doc(int m, const std::string& shear, bool with_j) {
  const int n = 2 * m + 1, d = 2 * m;
  Json doc;
  doc["schema"] = kSchema;
  doc["name"] = "heisenberg" + std::to_string(m) + (shear.empty() ? "" : "-shear");
  doc["dimension"] = n;
  doc["m"] = m;
  std::vector<std::string> vars;
  for (int i = 1; i <= m; ++i) vars.push_back("x" + std::to_string(i));
  for (int i = 1; i <= m; ++i) vars.push_back("y" + std::to_string(i));
  vars.push_back("z");
  doc["variables"] = vars;
  std::vector<std::string> theta(n, "0");
  for (int i = 0; i < m; ++i) {
    theta[i] = "-" + vars[m + i];
    theta[m + i] = vars[i];
  }
  theta[n - 1] = "1";
  doc["theta"] = theta;
  Json frame = Json::array();
  for (int i = 0; i < m; ++i) {
    std::vector<std::string> X(n, "0");
    X[i] = "1";
    X[n - 1] = vars[m + i];
    frame.push_back(X);
  }
  for (int i = 0; i < m; ++i) {
    std::vector<std::string> Y(n, "0");
    Y[m + i] = "1";
    Y[n - 1] = "-" + vars[i];
    frame.push_back(Y);
  }
  doc["frame"] = frame;
  std::vector<std::vector<std::string>> g(d, std::vector<std::string>(d, "0"));
  for (int a = 0; a < d; ++a) g[a][a] = with_j ? "2" : "1";
  if (!shear.empty()) {
    g[0][0] = "1 + " + shear;
    g[0][1] = g[1][0] = shear;
  }
  doc["metric"] = g;
  if (with_j) {
    std::vector<std::vector<std::string>> J(d, std::vector<std::string>(d, "0"));
    for (int i = 0; i < m; ++i) {
      J[m + i][i] = "1";
      J[i][m + i] = "-1";
    }
    doc["J"] = J;
  }
  return parse_model(doc, doc["name"].get<std::string>() + ".json");
}

}  // namespace holab::app
