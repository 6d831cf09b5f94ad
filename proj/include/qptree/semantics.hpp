#pragma once

#include "qptree/formula.hpp"
#include "qptree/kripke.hpp"

namespace qpt {

/// The set of worlds at which a formula is forced.
struct Extension {
  Formula formula;
  Proposition worlds;
};

// Forcing for propositionally quantified intuitionistic logic. Quantifiers
// range over the upsets of the model. Requires an intuitionistic model and
// formula; every free variable must be in the valuation.
Extension extension_int(const Model& m, const Formula& a);
bool forces_int(const Model& m, std::size_t world, const Formula& a);
bool forces_int(const Model& m, const NodeId& world, const Formula& a);

// Forcing for propositionally quantified S4: classical implication, box and
// diamond over the order, quantifiers over all subsets. Requires an s4
// model and a modal-tagged formula.
Extension extension_s4(const Model& m, const Formula& a);
bool forces_s4(const Model& m, std::size_t world, const Formula& a);
bool forces_s4(const Model& m, const NodeId& world, const Formula& a);

/// Extension under the model's own mode.
Extension extension(const Model& m, const Formula& a);

/// Truth at the root under the model's mode.
bool validates(const Model& m, const Formula& a);

}  // namespace qpt
