#include "qptree/embedding.hpp"

#include "qptree/error.hpp"
#include "qptree/semantics.hpp"

namespace qpt {

namespace {

FormulaPtr embed(const FormulaNode& n) {
  switch (n.kind) {
    case Connective::var:
      return ast::box(ast::var(n.name));
    case Connective::bottom:
      return ast::box(ast::bot());
    case Connective::conj:
      return ast::conj(embed(*n.left), embed(*n.right));
    case Connective::disj:
      return ast::disj(embed(*n.left), embed(*n.right));
    case Connective::implies:
      return ast::box(ast::impl(embed(*n.left), embed(*n.right)));
    case Connective::forall:
      return ast::forall(n.name, embed(*n.left));
    case Connective::exists:
      return ast::exists(n.name, embed(*n.left));
    case Connective::box:
    case Connective::diamond:
      break;
  }
  throw Error(ErrorCode::language, "modal operator in the input of the T-embedding");
}

}  // namespace

Formula t_embed(const Formula& a) {
  if (a.language() != Language::intuitionistic)
    throw Error(ErrorCode::language, "the T-embedding takes an intuitionistic formula");
  return Formula(embed(a.node()), Language::modal);
}

Model box_closure_valuation(const Model& m) {
  if (m.mode() != Mode::s4)
    throw Error(ErrorCode::mode_mismatch, "box closure of the valuation needs an s4 model");
  Valuation v;
  for (const auto& [var, image] : m.valuation())
    v[var] = extension_s4(m, Formula(ast::box(ast::var(var)), Language::modal)).worlds;
  return m.with_valuation(std::move(v));
}

std::pair<bool, bool> check_embedding_pair(const Model& m, const Formula& a) {
  if (m.mode() != Mode::intuitionistic)
    throw Error(ErrorCode::mode_mismatch, "embedding check needs an intuitionistic model");
  if (!is_closed(a)) throw Error(ErrorCode::open_formula, "embedding check needs a closed formula");
  return {validates(m, a), validates(m.with_mode(Mode::s4), t_embed(a))};
}

}  // namespace qpt
