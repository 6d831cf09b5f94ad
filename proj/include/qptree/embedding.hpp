#pragma once

#include <utility>

#include "qptree/formula.hpp"
#include "qptree/kripke.hpp"

namespace qpt {

/// Translation of an intuitionistic formula into S4: atoms, bottom and
/// implications are guarded by box; the other connectives and the
/// propositional quantifiers are kept. The result is tagged modal.
Formula t_embed(const Formula& a);

/// Replaces every valuation image phi(p) by the extension of box p. The
/// resulting images are upward closed. Requires an s4 model.
Model box_closure_valuation(const Model& m);

/// (validates(m, a), validates(m as S4 model, t_embed(a))) for an
/// intuitionistic model and a closed intuitionistic formula.
std::pair<bool, bool> check_embedding_pair(const Model& m, const Formula& a);

}  // namespace qpt
