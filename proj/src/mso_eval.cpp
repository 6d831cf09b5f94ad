#include <vector>

#include "qptree/error.hpp"
#include "qptree/mso.hpp"

namespace qpt::mso {

namespace {

constexpr std::size_t kMaxSetDomain = 20;

class FiniteEvaluator {
 public:
  FiniteEvaluator(const Model& m, const Env& env) : m_(m) {
    if (m.kind() != ModelKind::tree)
      throw Error(ErrorCode::invalid_argument, "finite MSO evaluation needs a tree domain");
    for (const auto& [v, w] : env.individuals) {
      if (w >= m.size()) throw Error(ErrorCode::unknown_world, "assignment to '" + v + "' is outside the domain");
      ind_.emplace_back(v, w);
    }
    for (const auto& [v, s] : env.sets) {
      if (!s.subset_of(m.all())) throw Error(ErrorCode::unknown_world, "assignment to '" + v + "' is outside the domain");
      sets_.emplace_back(v, s);
    }
  }

  bool eval(const Node& f) {
    switch (f.kind) {
      case Kind::member:
        return set(f.set).contains(world(f.a));
      case Kind::le:
        return m_.le(world(f.a), world(f.b));
      case Kind::le1: {
        const std::size_t a = world(f.a), b = world(f.b);
        return m_.le(a, b) && a != b && (m_.up(a) & m_.down(b)).size() == 2;
      }
      case Kind::lex:
        return lex_le(std::get<Word>(m_.world(world(f.a))), std::get<Word>(m_.world(world(f.b))));
      case Kind::eq:
        return world(f.a) == world(f.b);
      case Kind::subset:
        return set(f.set).subset_of(set(f.set2));
      case Kind::bottom:
        return false;
      case Kind::conj:
        return eval(*f.left) && eval(*f.right);
      case Kind::disj:
        return eval(*f.left) || eval(*f.right);
      case Kind::implies:
        return !eval(*f.left) || eval(*f.right);
      case Kind::neg:
        return !eval(*f.left);
      case Kind::forall1:
      case Kind::exists1: {
        const bool all = f.kind == Kind::forall1;
        for (std::size_t w = 0; w < m_.size(); ++w) {
          ind_.emplace_back(f.var, w);
          const bool r = eval(*f.left);
          ind_.pop_back();
          if (r != all) return !all;
        }
        return all;
      }
      case Kind::forall2:
      case Kind::exists2: {
        if (m_.size() > kMaxSetDomain)
          throw Error(ErrorCode::bound_exceeded, "domain too large for set quantifiers");
        const bool all = f.kind == Kind::forall2;
        const std::uint64_t count = std::uint64_t{1} << m_.size();
        for (std::uint64_t b = 0; b < count; ++b) {
          sets_.emplace_back(f.var, WorldSet(b));
          const bool r = eval(*f.left);
          sets_.pop_back();
          if (r != all) return !all;
        }
        return all;
      }
    }
    return false;
  }

 private:
  std::size_t world(const Term& t) const {
    if (t.is_root()) return m_.root();
    for (auto it = ind_.rbegin(); it != ind_.rend(); ++it)
      if (it->first == t.var) return it->second;
    throw Error(ErrorCode::unbound_variable, "unbound individual variable '" + t.var + "'");
  }

  WorldSet set(const std::string& v) const {
    for (auto it = sets_.rbegin(); it != sets_.rend(); ++it)
      if (it->first == v) return it->second;
    throw Error(ErrorCode::unbound_variable, "unbound set variable '" + v + "'");
  }

  const Model& m_;
  std::vector<std::pair<std::string, std::size_t>> ind_;
  std::vector<std::pair<std::string, WorldSet>> sets_;
};

}  // namespace

bool eval_finite(const Node& f, const Model& domain, const Env& env) {
  return FiniteEvaluator(domain, env).eval(f);
}

}  // namespace qpt::mso
