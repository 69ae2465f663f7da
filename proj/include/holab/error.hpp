#pragma once
#include <stdexcept>
#include <string>

namespace holab {

enum class Err {
  MIXED_BACKEND,
  MISSING_TOLERANCE,
  SINGULAR,
  NO_FIXPOINT,
  SYNTAX_ERROR,
  UNKNOWN_VARIABLE,
  DIVIDE_BY_ZERO_POLY,
  DEGREE_OVERFLOW,
  POLE_AT_POINT,
  NOT_CONTACT,
  NOT_ALMOST_COMPLEX,
  POLE_ON_PATH,
  THEOREM_VIOLATION,
  SPLIT_INCOMPLETE,
  INVALID_INPUT,
  JACOBI_FAIL,
  PARAM_DOMAIN,
  VALIDATION_FAIL,
  MISMATCH,
  SIZE_GUARD,
  LABEL_DOMAIN,
  UNSUPPORTED_LABEL,
  PARSE_ERROR,
  MODEL_INVALID,
  INTERNAL,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err c, const std::string& msg)
      : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
  Err code;
};

}  // namespace holab
