#pragma once

// Random models and formulas for property tests, plus a pointwise forcing
// oracle that shares no code with the library's extension evaluator.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qptree/formula.hpp"
#include "qptree/kripke.hpp"

namespace qpt::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline const std::vector<std::string> kVars = {"p", "q", "r"};

struct FormulaShape {
  std::size_t max_depth = 3;
  std::size_t max_quantifiers = 2;
  Language lang = Language::intuitionistic;
  bool closed = false;
};

namespace detail {

inline FormulaPtr gen(Rng& rng, std::size_t depth, std::size_t& quants, const FormulaShape& s,
                      std::vector<std::string>& scope) {
  auto leaf = [&]() -> FormulaPtr {
    const auto& pool = s.closed ? scope : kVars;
    if (pool.empty() || rng.chance(0.15)) return ast::bot();
    return ast::var(pool[rng.below(pool.size())]);
  };
  if (depth == 0) return leaf();
  // quantifiers early when the formula must be closed, so atoms have binders
  const bool want_quant = quants < s.max_quantifiers && (s.closed && scope.empty() ? rng.chance(0.8) : rng.chance(0.25));
  if (want_quant) {
    ++quants;
    std::string v = kVars[rng.below(2)];
    scope.push_back(v);
    FormulaPtr body = gen(rng, depth - 1, quants, s, scope);
    scope.pop_back();
    return rng.chance(0.5) ? ast::forall(v, body) : ast::exists(v, body);
  }
  if (rng.chance(0.15)) return leaf();
  const std::size_t ops = s.lang == Language::modal ? 5 : 3;
  switch (rng.below(ops)) {
    case 0: {
      auto l = gen(rng, depth - 1, quants, s, scope);
      return ast::conj(l, gen(rng, depth - 1, quants, s, scope));
    }
    case 1: {
      auto l = gen(rng, depth - 1, quants, s, scope);
      return ast::disj(l, gen(rng, depth - 1, quants, s, scope));
    }
    case 2: {
      auto l = gen(rng, depth - 1, quants, s, scope);
      return ast::impl(l, gen(rng, depth - 1, quants, s, scope));
    }
    case 3:
      return ast::box(gen(rng, depth - 1, quants, s, scope));
    default:
      return ast::dia(gen(rng, depth - 1, quants, s, scope));
  }
}

}  // namespace detail

inline Formula random_formula(Rng& rng, const FormulaShape& s) {
  std::size_t quants = 0;
  std::vector<std::string> scope;
  return Formula(detail::gen(rng, s.max_depth, quants, s, scope), s.lang);
}

/// Arbitrary AST over all connectives, names and shapes, for round trips.
inline FormulaPtr random_ast(Rng& rng, std::size_t depth, bool modal) {
  static const std::vector<std::string> names = {"p", "q", "x1", "long_name", "aB9"};
  if (depth == 0 || rng.chance(0.2)) {
    return rng.chance(0.2) ? ast::bot() : ast::var(names[rng.below(names.size())]);
  }
  const std::size_t ops = modal ? 8 : 6;
  switch (rng.below(ops)) {
    case 0: return ast::conj(random_ast(rng, depth - 1, modal), random_ast(rng, depth - 1, modal));
    case 1: return ast::disj(random_ast(rng, depth - 1, modal), random_ast(rng, depth - 1, modal));
    case 2: return ast::impl(random_ast(rng, depth - 1, modal), random_ast(rng, depth - 1, modal));
    case 3: return ast::neg(random_ast(rng, depth - 1, modal));
    case 4: return ast::forall(names[rng.below(names.size())], random_ast(rng, depth - 1, modal));
    case 5: return ast::exists(names[rng.below(names.size())], random_ast(rng, depth - 1, modal));
    case 6: return ast::box(random_ast(rng, depth - 1, modal));
    default: return ast::dia(random_ast(rng, depth - 1, modal));
  }
}

inline Model random_tree(Rng& rng, std::size_t max_worlds, Mode mode) {
  const std::size_t n = 1 + rng.below(max_worlds);
  std::vector<Word> words{Word{}};
  std::vector<std::uint32_t> kids(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = rng.below(i);
    Word w = words[parent];
    w.push_back(kids[parent]++);
    words.push_back(w);
  }
  return Model::tree(words, mode);
}

inline Model random_poset(Rng& rng, std::size_t max_worlds, Mode mode) {
  const std::size_t n = 1 + rng.below(max_worlds);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(labels[0], labels[i]);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(0.35)) edges.emplace_back(labels[i], labels[j]);
  std::shuffle(labels.begin(), labels.end(), rng.engine());
  return Model::poset(labels, edges, mode);
}

inline Model random_model(Rng& rng, std::size_t max_worlds, Mode mode) {
  return rng.chance(0.5) ? random_tree(rng, max_worlds, mode) : random_poset(rng, max_worlds, mode);
}

/// Random values for p, q, r: upsets in int mode, arbitrary sets in s4 mode.
inline Model with_random_valuation(Rng& rng, const Model& m) {
  Valuation v;
  for (const auto& var : kVars) {
    WorldSet s(rng.engine()() & m.all().bits());
    if (m.mode() == Mode::intuitionistic) {
      WorldSet up;
      for (std::size_t i : s.members()) up |= m.up(i);
      s = up;
    }
    v[var] = s;
  }
  return m.with_valuation(v);
}

// ---------------------------------------------------------------------------
// Pointwise oracle: recursion on the forcing clauses, quantifiers over the
// full powerset filtered to upward-closed sets in int mode.

inline bool naive_upset(const Model& m, std::uint64_t bits) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if ((bits >> i & 1U) && m.le(i, j) && !(bits >> j & 1U)) return false;
  return true;
}

inline bool naive_forces(const Model& m, std::size_t h, const FormulaNode& a, Valuation& v) {
  const bool s4 = m.mode() == Mode::s4;
  switch (a.kind) {
    case Connective::var:
      return v.at(a.name).contains(h);
    case Connective::bottom:
      return false;
    case Connective::conj:
      return naive_forces(m, h, *a.left, v) && naive_forces(m, h, *a.right, v);
    case Connective::disj:
      return naive_forces(m, h, *a.left, v) || naive_forces(m, h, *a.right, v);
    case Connective::implies:
      if (s4) return !naive_forces(m, h, *a.left, v) || naive_forces(m, h, *a.right, v);
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m.le(h, k) && naive_forces(m, k, *a.left, v) && !naive_forces(m, k, *a.right, v)) return false;
      return true;
    case Connective::box:
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m.le(h, k) && !naive_forces(m, k, *a.left, v)) return false;
      return true;
    case Connective::diamond:
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m.le(h, k) && naive_forces(m, k, *a.left, v)) return true;
      return false;
    case Connective::forall:
    case Connective::exists: {
      const bool all = a.kind == Connective::forall;
      const auto saved = v.find(a.name) != v.end() ? std::optional<WorldSet>(v[a.name]) : std::nullopt;
      bool result = all;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m.size()); ++bits) {
        if (!s4 && !naive_upset(m, bits)) continue;
        v[a.name] = WorldSet(bits);
        if (naive_forces(m, h, *a.left, v) != all) {
          result = !all;
          break;
        }
      }
      if (saved) v[a.name] = *saved;
      else v.erase(a.name);
      return result;
    }
  }
  return false;
}

inline WorldSet naive_extension(const Model& m, const Formula& a) {
  WorldSet out;
  for (std::size_t h = 0; h < m.size(); ++h) {
    Valuation v = m.valuation();
    if (naive_forces(m, h, a.node(), v)) out.insert(h);
  }
  return out;
}

}  // namespace qpt::testing
