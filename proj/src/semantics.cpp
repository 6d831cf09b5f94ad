#include "qptree/semantics.hpp"

#include <cassert>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qptree/error.hpp"

namespace qpt {

namespace {

// Bottom-up extension computation. Extensions of a subformula depend only
// on the values of its free variables, so they are memoized on
// (node, values of its free variables).
class Evaluator {
 public:
  Evaluator(const Model& m, Mode mode) : m_(m), mode_(mode), all_(m.all()) {
    if (mode_ == Mode::intuitionistic) props_ = enumerate_upsets(m_);
  }

  WorldSet eval(const FormulaNode& n) {
    const auto& fv = free_of(n);
    std::vector<std::uint64_t> key;
    key.reserve(fv.size());
    for (const std::string& v : fv) key.push_back(lookup(v).bits());
    auto& slot = memo_[&n];
    if (auto it = slot.find(key); it != slot.end()) return it->second;
    const WorldSet r = compute(n);
    assert(mode_ != Mode::intuitionistic || m_.is_upset(r));
    slot.emplace(std::move(key), r);
    return r;
  }

 private:
  WorldSet lookup(const std::string& v) const {
    for (auto it = overrides_.rbegin(); it != overrides_.rend(); ++it)
      if (it->first == v) return it->second;
    auto it = m_.valuation().find(v);
    if (it == m_.valuation().end())
      throw Error(ErrorCode::unbound_variable, "variable '" + v + "' has no value in the model");
    return it->second;
  }

  const std::vector<std::string>& free_of(const FormulaNode& n) {
    auto it = free_.find(&n);
    if (it != free_.end()) return it->second;
    auto fv = free_vars(n);
    return free_.emplace(&n, std::vector<std::string>(fv.begin(), fv.end())).first->second;
  }

  WorldSet compute(const FormulaNode& n) {
    switch (n.kind) {
      case Connective::var:
        return lookup(n.name);
      case Connective::bottom:
        return {};
      case Connective::conj:
        return eval(*n.left) & eval(*n.right);
      case Connective::disj:
        return eval(*n.left) | eval(*n.right);
      case Connective::implies: {
        const WorldSet a = eval(*n.left);
        const WorldSet b = eval(*n.right);
        if (mode_ == Mode::s4) return (all_ - a) | b;
        const WorldSet bad = a - b;
        WorldSet out;
        for (std::size_t h = 0; h < m_.size(); ++h)
          if (!m_.up(h).intersects(bad)) out.insert(h);
        return out;
      }
      case Connective::box:
      case Connective::diamond: {
        if (mode_ == Mode::intuitionistic)
          throw Error(ErrorCode::language, "modal operator under intuitionistic semantics");
        const WorldSet b = eval(*n.left);
        WorldSet out;
        for (std::size_t h = 0; h < m_.size(); ++h) {
          const bool hit = n.kind == Connective::box ? m_.up(h).subset_of(b) : m_.up(h).intersects(b);
          if (hit) out.insert(h);
        }
        return out;
      }
      case Connective::forall:
      case Connective::exists:
        return quantify(n);
    }
    return {};
  }

  WorldSet quantify(const FormulaNode& n) {
    const bool all = n.kind == Connective::forall;
    WorldSet acc = all ? all_ : WorldSet{};
    auto step = [&](WorldSet p) {
      overrides_.emplace_back(n.name, p);
      const WorldSet r = eval(*n.left);
      overrides_.pop_back();
      if (all) acc &= r;
      else acc |= r;
      return all ? acc.empty() : acc == all_;
    };
    if (mode_ == Mode::intuitionistic) {
      for (WorldSet p : props_)
        if (step(p)) break;
    } else {
      if (m_.size() > 24)
        throw Error(ErrorCode::bound_exceeded, "too many worlds for S4 propositional quantifiers");
      const std::uint64_t count = std::uint64_t{1} << m_.size();
      for (std::uint64_t b = 0; b < count; ++b)
        if (step(WorldSet(b))) break;
    }
    return acc;
  }

  const Model& m_;
  Mode mode_;
  WorldSet all_;
  std::vector<Proposition> props_;
  std::vector<std::pair<std::string, WorldSet>> overrides_;
  std::unordered_map<const FormulaNode*, std::vector<std::string>> free_;
  std::unordered_map<const FormulaNode*, std::map<std::vector<std::uint64_t>, WorldSet>> memo_;
};

void require(const Model& m, const Formula& a, Mode mode) {
  if (m.mode() != mode)
    throw Error(ErrorCode::mode_mismatch,
                std::string("model is in ") + to_string(m.mode()) + " mode, expected " +
                    to_string(mode));
  const Language want = mode == Mode::intuitionistic ? Language::intuitionistic : Language::modal;
  if (a.language() != want)
    throw Error(ErrorCode::language,
                mode == Mode::intuitionistic ? "intuitionistic semantics needs an intuitionistic formula"
                                             : "S4 semantics needs a modal formula");
}

}  // namespace

Extension extension_int(const Model& m, const Formula& a) {
  require(m, a, Mode::intuitionistic);
  return {a, Evaluator(m, Mode::intuitionistic).eval(a.node())};
}

Extension extension_s4(const Model& m, const Formula& a) {
  require(m, a, Mode::s4);
  return {a, Evaluator(m, Mode::s4).eval(a.node())};
}

Extension extension(const Model& m, const Formula& a) {
  return m.mode() == Mode::intuitionistic ? extension_int(m, a) : extension_s4(m, a);
}

bool forces_int(const Model& m, std::size_t world, const Formula& a) {
  if (world >= m.size()) throw Error(ErrorCode::unknown_world, "world index out of range");
  return extension_int(m, a).worlds.contains(world);
}

bool forces_int(const Model& m, const NodeId& world, const Formula& a) {
  return forces_int(m, m.index_of(world), a);
}

bool forces_s4(const Model& m, std::size_t world, const Formula& a) {
  if (world >= m.size()) throw Error(ErrorCode::unknown_world, "world index out of range");
  return extension_s4(m, a).worlds.contains(world);
}

bool forces_s4(const Model& m, const NodeId& world, const Formula& a) {
  return forces_s4(m, m.index_of(world), a);
}

bool validates(const Model& m, const Formula& a) { return extension(m, a).worlds.contains(m.root()); }

}  // namespace qpt
