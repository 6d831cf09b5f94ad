#pragma once

#include <string>
#include <vector>

#include "qptree/formula.hpp"
#include "qptree/kripke.hpp"

namespace qpt::suite {

/// forall p (~p | ~~p) -> forall p forall q ((p -> q) | (q -> p))
inline constexpr const char* kFormulaA =
    "forall p (~p | ~~p) -> forall p forall q ((p -> q) | (q -> p))";
/// forall p (p | ~p): forced exactly at the leaves.
inline constexpr const char* kFormulaB = "forall p (p | ~p)";

Formula formula_a();
Formula formula_b();

/// g < a, g < b, a < t, b < t with an empty valuation.
Model diamond(Mode mode = Mode::intuitionistic);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The separation examples for trees versus arbitrary posets and for
/// finite trees, plus their images under the T-embedding.
std::vector<CheckResult> run_examples();

}  // namespace qpt::suite
