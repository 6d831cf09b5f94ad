#include "qptree/error.hpp"

namespace qpt {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::syntax: return "syntax-error";
    case ErrorCode::language: return "language-violation";
    case ErrorCode::model_parse: return "parse-error";
    case ErrorCode::no_least_element: return "no-least-element";
    case ErrorCode::not_partial_order: return "not-a-partial-order";
    case ErrorCode::valuation_not_proposition: return "valuation-not-a-proposition";
    case ErrorCode::tree_not_prefix_closed: return "tree-not-prefix-closed";
    case ErrorCode::unknown_world: return "unknown-world";
    case ErrorCode::unbound_variable: return "unbound-variable";
    case ErrorCode::open_formula: return "open-formula";
    case ErrorCode::mode_mismatch: return "mode-mismatch";
    case ErrorCode::bound_exceeded: return "bound-exceeded";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::io: return "io-error";
  }
  return "unknown";
}

}  // namespace qpt
