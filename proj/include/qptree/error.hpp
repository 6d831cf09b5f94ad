#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace qpt {

enum class ErrorCode {
  syntax,
  language,
  model_parse,
  no_least_element,
  not_partial_order,
  valuation_not_proposition,
  tree_not_prefix_closed,
  unknown_world,
  unbound_variable,
  open_formula,
  mode_mismatch,
  bound_exceeded,
  invalid_argument,
  io,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `offset` is set for syntax errors
/// and holds the byte position in the input where parsing stopped.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(what), code_(code), offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace qpt
