#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qptree/formula.hpp"
#include "qptree/kripke.hpp"

namespace qpt {

enum class StructureClass { finite_trees, finite_posets, chains };

/// "finite-trees", "finite-posets", "chains".
StructureClass parse_structure_class(std::string_view name);
const char* to_string(StructureClass c) noexcept;

inline constexpr std::size_t kMaxPosetWorlds = 6;
inline constexpr std::size_t kMaxTreeWorlds = 16;

struct SearchBounds {
  std::size_t max_worlds = 1;
  StructureClass structure_class = StructureClass::finite_trees;
};

struct SearchOutcome {
  std::optional<Model> countermodel;  // empty: no counterexample up to the bounds
  SearchBounds bounds;
  std::size_t structures_checked = 0;

  bool refuted() const noexcept { return countermodel.has_value(); }
};

/// Rooted trees with exactly n nodes, one per isomorphism class, as word
/// sets whose children are ordered by their subtree encodings. Sorted by
/// canonical encoding; empty valuations.
std::vector<Model> enumerate_trees(std::size_t n, Mode mode = Mode::intuitionistic);

/// Canonical parenthesis encoding of a tree model, children sorted.
std::string tree_encoding(const Model& tree);

/// Partial orders with a least element on n elements (1 <= n <= 6), one per
/// isomorphism class, labelled w0 (least) to w<n-1>. Sorted by canonical code.
std::vector<Model> enumerate_posets(std::size_t n, Mode mode = Mode::intuitionistic);

/// The k-element chain as a tree: [], [0], [0,0], ...
Model chain(std::size_t k, Mode mode = Mode::intuitionistic);

/// Looks for the canonically least structure in the class, with at most
/// b.max_worlds worlds, whose root does not force `a`. Intuitionistic
/// formulas are checked in int mode, modal ones in s4 mode.
SearchOutcome bounded_validity(const Formula& a, const SearchBounds& b);

}  // namespace qpt
