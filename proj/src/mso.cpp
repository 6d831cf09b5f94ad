#include "qptree/mso.hpp"

#include <charconv>
#include <vector>

#include "qptree/error.hpp"

namespace qpt::mso {

namespace {

MsoPtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

bool is_binary(Kind k) { return k == Kind::conj || k == Kind::disj || k == Kind::implies; }
bool is_quantifier(Kind k) {
  return k == Kind::forall1 || k == Kind::exists1 || k == Kind::forall2 || k == Kind::exists2;
}
bool is_set_quantifier(Kind k) { return k == Kind::forall2 || k == Kind::exists2; }

}  // namespace

MsoPtr member(Term a, std::string set) { return make({.kind = Kind::member, .a = std::move(a), .set = std::move(set)}); }
MsoPtr le(Term a, Term b) { return make({.kind = Kind::le, .a = std::move(a), .b = std::move(b)}); }
MsoPtr le1(Term a, Term b) { return make({.kind = Kind::le1, .a = std::move(a), .b = std::move(b)}); }
MsoPtr lex(Term a, Term b) { return make({.kind = Kind::lex, .a = std::move(a), .b = std::move(b)}); }
MsoPtr eq(Term a, Term b) { return make({.kind = Kind::eq, .a = std::move(a), .b = std::move(b)}); }
MsoPtr subset(std::string x, std::string y) {
  return make({.kind = Kind::subset, .set = std::move(x), .set2 = std::move(y)});
}
MsoPtr bottom() { return make({.kind = Kind::bottom}); }
MsoPtr conj(MsoPtr l, MsoPtr r) { return make({.kind = Kind::conj, .left = std::move(l), .right = std::move(r)}); }
MsoPtr disj(MsoPtr l, MsoPtr r) { return make({.kind = Kind::disj, .left = std::move(l), .right = std::move(r)}); }
MsoPtr implies(MsoPtr l, MsoPtr r) {
  return make({.kind = Kind::implies, .left = std::move(l), .right = std::move(r)});
}
MsoPtr neg(MsoPtr a) { return make({.kind = Kind::neg, .left = std::move(a)}); }
MsoPtr all1(std::string v, MsoPtr body) { return make({.kind = Kind::forall1, .var = std::move(v), .left = std::move(body)}); }
MsoPtr ex1(std::string v, MsoPtr body) { return make({.kind = Kind::exists1, .var = std::move(v), .left = std::move(body)}); }
MsoPtr all2(std::string v, MsoPtr body) { return make({.kind = Kind::forall2, .var = std::move(v), .left = std::move(body)}); }
MsoPtr ex2(std::string v, MsoPtr body) { return make({.kind = Kind::exists2, .var = std::move(v), .left = std::move(body)}); }

bool equal(const Node& a, const Node& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.a != b.a || a.b != b.b || a.set != b.set || a.set2 != b.set2 ||
      a.var != b.var)
    return false;
  if (is_binary(a.kind)) return equal(*a.left, *b.left) && equal(*a.right, *b.right);
  if (a.kind == Kind::neg || is_quantifier(a.kind)) return equal(*a.left, *b.left);
  return true;
}

namespace {

void collect(const Node& f, std::multiset<std::string>& b1, std::multiset<std::string>& b2,
             FreeVars& out) {
  auto term = [&](const Term& t) {
    if (!t.is_root() && !b1.contains(t.var)) out.individuals.insert(t.var);
  };
  auto set = [&](const std::string& s) {
    if (!b2.contains(s)) out.sets.insert(s);
  };
  switch (f.kind) {
    case Kind::member:
      term(f.a);
      set(f.set);
      return;
    case Kind::le:
    case Kind::le1:
    case Kind::lex:
    case Kind::eq:
      term(f.a);
      term(f.b);
      return;
    case Kind::subset:
      set(f.set);
      set(f.set2);
      return;
    case Kind::bottom:
      return;
    case Kind::neg:
      collect(*f.left, b1, b2, out);
      return;
    case Kind::forall1:
    case Kind::exists1: {
      auto it = b1.insert(f.var);
      collect(*f.left, b1, b2, out);
      b1.erase(it);
      return;
    }
    case Kind::forall2:
    case Kind::exists2: {
      auto it = b2.insert(f.var);
      collect(*f.left, b1, b2, out);
      b2.erase(it);
      return;
    }
    default:
      collect(*f.left, b1, b2, out);
      collect(*f.right, b1, b2, out);
  }
}

bool hygiene(const Node& f, std::set<std::string>& bound) {
  if (is_binary(f.kind)) return hygiene(*f.left, bound) && hygiene(*f.right, bound);
  if (f.kind == Kind::neg || is_set_quantifier(f.kind)) return hygiene(*f.left, bound);
  if (f.kind == Kind::forall1 || f.kind == Kind::exists1) {
    if (!bound.insert(f.var).second) return false;
    const bool ok = hygiene(*f.left, bound);
    bound.erase(f.var);
    return ok;
  }
  return true;
}

class SuccessorExpander {
 public:
  MsoPtr run(const Node& f) {
    switch (f.kind) {
      case Kind::le1: {
        const Term z = Term::of("s_" + std::to_string(next_++));
        return conj(conj(le(f.a, f.b), neg(eq(f.a, f.b))),
                    all1(z.var, implies(conj(le(f.a, z), le(z, f.b)), disj(eq(z, f.a), eq(z, f.b)))));
      }
      case Kind::conj:
      case Kind::disj:
      case Kind::implies: {
        MsoPtr l = run(*f.left);
        MsoPtr r = run(*f.right);
        return make({.kind = f.kind, .left = std::move(l), .right = std::move(r)});
      }
      case Kind::neg:
      case Kind::forall1:
      case Kind::exists1:
      case Kind::forall2:
      case Kind::exists2:
        return make({.kind = f.kind, .var = f.var, .left = run(*f.left)});
      default:
        return make(Node(f));
    }
  }

 private:
  unsigned next_ = 0;
};

}  // namespace

FreeVars free_vars(const Node& f) {
  std::multiset<std::string> b1, b2;
  FreeVars out;
  collect(f, b1, b2, out);
  return out;
}

bool fresh_hygiene(const Node& f) {
  std::set<std::string> bound;
  return hygiene(f, bound);
}

MsoPtr eliminate_successor(const Node& f) { return SuccessorExpander().run(f); }

// ---------------------------------------------------------------------------

LogicClass parse_logic_class(std::string_view name) {
  using Tag = LogicClass::Tag;
  auto bad = [&]() -> LogicClass {
    throw Error(ErrorCode::invalid_argument,
                "unknown logic class '" + std::string(name) +
                    "' (expected qpHt, qpHt-<n>, qpHt-fin, qpHt-omega, s4t, s4t-<n>, s4t-fin)");
  };
  const bool int_family = name.starts_with("qpHt");
  const bool s4_family = name.starts_with("s4t");
  if (!int_family && !s4_family) return bad();
  std::string_view rest = name.substr(int_family ? 4 : 3);
  if (rest.empty()) return {int_family ? Tag::qpHt : Tag::s4t, 0};
  if (rest.front() != '-') return bad();
  rest.remove_prefix(1);
  if (rest == "fin") return {int_family ? Tag::qpHt_fin : Tag::s4t_fin, 0};
  if (rest == "omega" && int_family) return {Tag::qpHt_omega, 0};
  unsigned n = 0;
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc{} || p != rest.data() + rest.size() || n < 1) return bad();
  return {int_family ? Tag::qpHt_n : Tag::s4t_n, n};
}

std::string to_string(const LogicClass& c) {
  using Tag = LogicClass::Tag;
  switch (c.tag) {
    case Tag::qpHt: return "qpHt";
    case Tag::qpHt_n: return "qpHt-" + std::to_string(c.arity);
    case Tag::qpHt_fin: return "qpHt-fin";
    case Tag::qpHt_omega: return "qpHt-omega";
    case Tag::s4t: return "s4t";
    case Tag::s4t_n: return "s4t-" + std::to_string(c.arity);
    case Tag::s4t_fin: return "s4t-fin";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Translation

namespace {

const std::string kTree = "T";

std::string set_var(const std::string& p) { return "X_" + p; }

// "X is a proposition inside T": every member's successors in T are members.
MsoPtr prop_within(const std::string& x, const std::string& tree, const Term& u, const Term& v) {
  return all1(u.var, implies(member(u, x), all1(v.var, implies(member(v, tree),
                                                               implies(le(u, v), member(v, x))))));
}

class Translator {
 public:
  explicit Translator(TranslationMode mode) : mode_(mode) {}

  MsoPtr run(const FormulaNode& n, const Term& x) {
    switch (n.kind) {
      case Connective::var:
        return member(x, set_var(n.name));
      case Connective::bottom:
        return bottom();
      case Connective::conj: {
        MsoPtr l = run(*n.left, x);
        return conj(std::move(l), run(*n.right, x));
      }
      case Connective::disj: {
        MsoPtr l = run(*n.left, x);
        return disj(std::move(l), run(*n.right, x));
      }
      case Connective::implies: {
        if (mode_ == TranslationMode::s4) {
          MsoPtr l = run(*n.left, x);
          return implies(std::move(l), run(*n.right, x));
        }
        const Term y = fresh();
        MsoPtr l = run(*n.left, y);
        MsoPtr r = run(*n.right, y);
        return all1(y.var, implies(member(y, kTree), implies(le(x, y), implies(std::move(l), std::move(r)))));
      }
      case Connective::box: {
        const Term y = fresh();
        return all1(y.var, implies(member(y, kTree), implies(le(x, y), run(*n.left, y))));
      }
      case Connective::diamond: {
        const Term y = fresh();
        return ex1(y.var, conj(conj(member(y, kTree), le(x, y)), run(*n.left, y)));
      }
      case Connective::forall:
      case Connective::exists: {
        const std::string xp = set_var(n.name);
        MsoPtr guard = subset(xp, kTree);
        if (mode_ == TranslationMode::intuitionistic) {
          const Term u = fresh();
          const Term v = fresh();
          guard = conj(std::move(guard), prop_within(xp, kTree, u, v));
        }
        MsoPtr body = run(*n.left, x);
        return n.kind == Connective::forall ? all2(xp, implies(std::move(guard), std::move(body)))
                                            : ex2(xp, conj(std::move(guard), std::move(body)));
      }
    }
    return bottom();
  }

 private:
  Term fresh() { return Term::of("y_" + std::to_string(next_++)); }

  TranslationMode mode_;
  unsigned next_ = 0;
};

}  // namespace

MsoPtr translate_step(const Formula& a, const Term& x, TranslationMode mode) {
  const Language want = mode == TranslationMode::s4 ? Language::modal : Language::intuitionistic;
  if (a.language() != want)
    throw Error(ErrorCode::mode_mismatch, mode == TranslationMode::s4
                                              ? "S4 translation needs a modal formula"
                                              : "intuitionistic translation needs an intuitionistic formula");
  return Translator(mode).run(a.node(), x);
}

MsoPtr build_predicate(Predicate kind, const std::string& set, unsigned n) {
  const Term x = Term::of("x");
  const Term y = Term::of("y");
  const Term z = Term::of("z");
  switch (kind) {
    case Predicate::tree:
      return conj(member(Term::root(), set),
                  all1("x", implies(member(x, set), all1("y", implies(le(y, x), member(y, set))))));
    case Predicate::prop:
      return all1("x", implies(member(x, set), all1("y", implies(le(x, y), member(y, set)))));
    case Predicate::fin:
      return ex1("x", all1("y", implies(member(y, set), lex(y, x))));
    case Predicate::arity: {
      if (n < 1) throw Error(ErrorCode::invalid_argument, "arity must be at least 1");
      // Exactly n successors of x inside the set.
      auto succ = [&](const Term& t) { return conj(member(t, set), le1(x, t)); };
      std::vector<Term> ys;
      if (n == 1) ys.push_back(y);
      else
        for (unsigned i = 1; i <= n; ++i) ys.push_back(Term::of("y" + std::to_string(i)));
      MsoPtr body = succ(ys[0]);
      for (std::size_t i = 1; i < ys.size(); ++i) body = conj(body, succ(ys[i]));
      for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) body = conj(body, neg(eq(ys[i], ys[j])));
      MsoPtr some = eq(z, ys[0]);
      for (std::size_t i = 1; i < ys.size(); ++i) some = disj(some, eq(z, ys[i]));
      body = conj(body, all1("z", implies(succ(z), some)));
      for (auto it = ys.rbegin(); it != ys.rend(); ++it) body = ex1(it->var, body);
      return all1("x", implies(member(x, set), body));
    }
  }
  return bottom();
}

MsoPtr build_psi(const Formula& a, const LogicClass& cls) {
  using Tag = LogicClass::Tag;
  if (!is_closed(a)) throw Error(ErrorCode::open_formula, "the sentence needs a closed formula");
  MsoPtr guard;
  switch (cls.tag) {
    case Tag::qpHt:
    case Tag::s4t:
      guard = build_predicate(Predicate::tree, kTree);
      break;
    case Tag::qpHt_n:
    case Tag::s4t_n:
      guard = conj(build_predicate(Predicate::tree, kTree), build_predicate(Predicate::arity, kTree, cls.arity));
      break;
    case Tag::qpHt_fin:
    case Tag::s4t_fin:
      guard = conj(build_predicate(Predicate::tree, kTree), build_predicate(Predicate::fin, kTree));
      break;
    case Tag::qpHt_omega:
      guard = all1("z", member(Term::of("z"), kTree));
      break;
  }
  const auto mode = cls.modal() ? TranslationMode::s4 : TranslationMode::intuitionistic;
  return all2(kTree, implies(std::move(guard), translate_step(a, Term::root(), mode)));
}

WorldSet translated_extension(const Formula& a, const Model& m) {
  const auto mode =
      a.language() == Language::modal ? TranslationMode::s4 : TranslationMode::intuitionistic;
  const MsoPtr f = translate_step(a, Term::of("x"), mode);
  Env env;
  env.sets[kTree] = m.all();
  for (const auto& [p, s] : m.valuation()) env.sets[set_var(p)] = s;
  WorldSet out;
  for (std::size_t h = 0; h < m.size(); ++h) {
    env.individuals["x"] = h;
    if (eval_finite(*f, m, env)) out.insert(h);
  }
  return out;
}

}  // namespace qpt::mso
