#pragma once

#include <map>
#include <set>
#include <memory>
#include <string>
#include <string_view>

#include "qptree/formula.hpp"
#include "qptree/kripke.hpp"

namespace qpt::mso {

/// An individual term: a variable or the root constant.
struct Term {
  std::string var;  // empty for the root
  bool is_root() const noexcept { return var.empty(); }
  static Term root() { return {}; }
  static Term of(std::string v) { return {std::move(v)}; }
  friend bool operator==(const Term&, const Term&) = default;
};

enum class Kind {
  member,   // a in X
  le,       // a <= b, prefix order
  le1,      // b is an immediate successor of a
  lex,      // a lex<= b
  eq,       // a = b
  subset,   // X sub Y
  bottom,
  conj,
  disj,
  implies,
  neg,
  forall1,
  exists1,
  forall2,
  exists2,
};

struct Node;
using MsoPtr = std::shared_ptr<const Node>;

/// Second-order formula over trees. Atoms use `a`, `b` (individual terms)
/// and `set`, `set2` (set variables); quantifiers bind `var`.
struct Node {
  Kind kind = Kind::bottom;
  Term a{}, b{};
  std::string set{}, set2{};
  std::string var{};
  MsoPtr left{}, right{};
};

MsoPtr member(Term a, std::string set);
MsoPtr le(Term a, Term b);
MsoPtr le1(Term a, Term b);
MsoPtr lex(Term a, Term b);
MsoPtr eq(Term a, Term b);
MsoPtr subset(std::string x, std::string y);
MsoPtr bottom();
MsoPtr conj(MsoPtr l, MsoPtr r);
MsoPtr disj(MsoPtr l, MsoPtr r);
MsoPtr implies(MsoPtr l, MsoPtr r);
MsoPtr neg(MsoPtr a);
MsoPtr all1(std::string v, MsoPtr body);
MsoPtr ex1(std::string v, MsoPtr body);
MsoPtr all2(std::string v, MsoPtr body);
MsoPtr ex2(std::string v, MsoPtr body);

bool equal(const Node& a, const Node& b);

struct FreeVars {
  std::set<std::string> individuals;
  std::set<std::string> sets;
  bool empty() const noexcept { return individuals.empty() && sets.empty(); }
};
FreeVars free_vars(const Node& f);

/// True when no individual variable is bound twice on any root-to-leaf path.
bool fresh_hygiene(const Node& f);

/// Rewrites every immediate-successor atom into its first-order definition
/// x <= y & ~(x = y) & all1 z: ((x <= z & z <= y) => (z = x | z = y)),
/// with z drawn from fresh names s_0, s_1, ...
MsoPtr eliminate_successor(const Node& f);

// ---------------------------------------------------------------------------
// Logic classes

struct LogicClass {
  enum class Tag { qpHt, qpHt_n, qpHt_fin, qpHt_omega, s4t, s4t_n, s4t_fin };
  Tag tag = Tag::qpHt;
  unsigned arity = 0;  // only for the _n tags; >= 1

  bool modal() const noexcept { return tag == Tag::s4t || tag == Tag::s4t_n || tag == Tag::s4t_fin; }
  /// The complete infinitary tree cannot be a finite domain; sentences for
  /// this class are emitted but never evaluated.
  bool emit_only() const noexcept { return tag == Tag::qpHt_omega; }
};

/// Names: qpHt, qpHt-<n>, qpHt-fin, qpHt-omega, s4t, s4t-<n>, s4t-fin.
LogicClass parse_logic_class(std::string_view name);
std::string to_string(const LogicClass& c);

// ---------------------------------------------------------------------------
// Translation

enum class TranslationMode { intuitionistic, s4 };

/// A^x with respect to the tree variable T. Propositional variable p maps
/// to set variable X_p; new individual variables are y_0, y_1, ... from a
/// counter local to this call.
MsoPtr translate_step(const Formula& a, const Term& x, TranslationMode mode);

enum class Predicate { tree, prop, arity, fin };

/// Tree(X), Prop(X), Arity_n(X), Fin(X) with bound variables x, y, z.
MsoPtr build_predicate(Predicate kind, const std::string& set, unsigned n = 0);

/// Closed sentence: all2 T: (guard(T) => A^root).
MsoPtr build_psi(const Formula& a, const LogicClass& cls);

/// Deterministic text rendering; successor atoms are expanded first.
std::string emit(const Node& f);
/// Reader for the emitted grammar (successor-free formulas).
MsoPtr read(std::string_view text);

// ---------------------------------------------------------------------------
// Finite-domain evaluation

struct Env {
  std::map<std::string, std::size_t> individuals;  // world indices
  std::map<std::string, WorldSet> sets;
};

/// Tarskian truth over a finite tree model: individual quantifiers range over
/// the worlds, set quantifiers over all subsets of the worlds.
bool eval_finite(const Node& f, const Model& domain, const Env& env);

/// {h : eval_finite(A^x, m, x -> h, T -> worlds, X_p -> phi(p))}.
WorldSet translated_extension(const Formula& a, const Model& m);

}  // namespace qpt::mso
