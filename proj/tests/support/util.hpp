#pragma once

#include <functional>

#include "doctest.h"
#include "qptree/error.hpp"
#include "qptree/formula.hpp"

namespace qpt::testing {

inline Formula I(const char* text) { return parse_formula(text, Language::intuitionistic); }
inline Formula S(const char* text) { return parse_formula(text, Language::modal); }

inline ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_argument;
}

}  // namespace qpt::testing
