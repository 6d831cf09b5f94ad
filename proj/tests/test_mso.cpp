#include "doctest.h"
#include "generators.hpp"
#include "qptree/mso.hpp"
#include "qptree/search.hpp"
#include "qptree/semantics.hpp"
#include "qptree/suite.hpp"
#include "util.hpp"

using namespace qpt;
using namespace qpt::testing;
namespace m2 = qpt::mso;

namespace {

m2::Term t(const char* v) { return m2::Term::of(v); }

/// Every prefix-closed word set of the domain that contains the root.
std::vector<WorldSet> subtrees(const Model& d) {
  std::vector<WorldSet> out;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << d.size()); ++b) {
    if (!(b & 1U)) continue;
    bool closed = true;
    for (std::size_t i = 0; i < d.size() && closed; ++i)
      if (b >> i & 1U)
        for (std::size_t j : d.down(i).members())
          if (!(b >> j & 1U)) closed = false;
    if (closed) out.emplace_back(b);
  }
  return out;
}

Model restrict_to(const Model& d, WorldSet s, Mode mode) {
  std::vector<Word> words;
  for (std::size_t i : s.members()) words.push_back(std::get<Word>(d.world(i)));
  return Model::tree(words, mode);
}

}  // namespace

TEST_CASE("translate_step: atoms") {
  CHECK(m2::equal(*m2::translate_step(I("p"), t("x"), m2::TranslationMode::intuitionistic),
                  *m2::member(t("x"), "X_p")));
  CHECK(m2::equal(*m2::translate_step(I("bot"), t("x"), m2::TranslationMode::intuitionistic), *m2::bottom()));
  CHECK(m2::emit(*m2::translate_step(S("dia p"), t("x"), m2::TranslationMode::s4)) ==
        "ex1 y_0: ((y_0 in T & x <= y_0) & y_0 in X_p)");
  CHECK(m2::emit(*m2::translate_step(S("box p"), t("x"), m2::TranslationMode::s4)) ==
        "all1 y_0: (y_0 in T => (x <= y_0 => y_0 in X_p))");
  CHECK(m2::emit(*m2::translate_step(I("p -> q"), t("x"), m2::TranslationMode::intuitionistic)) ==
        "all1 y_0: (y_0 in T => (x <= y_0 => (y_0 in X_p => y_0 in X_q)))");
  CHECK(m2::emit(*m2::translate_step(S("p -> q"), t("x"), m2::TranslationMode::s4)) == "x in X_p => x in X_q");
  CHECK(error_of([] { m2::translate_step(I("p"), t("x"), m2::TranslationMode::s4); }) == ErrorCode::mode_mismatch);
}

TEST_CASE("translate_step: fresh variables are numbered per call") {
  auto f = m2::translate_step(I("(p -> q) -> (q -> p)"), t("x"), m2::TranslationMode::intuitionistic);
  const auto text = m2::emit(*f);
  CHECK(text.find("y_0") != std::string::npos);
  CHECK(text.find("y_2") != std::string::npos);
  CHECK(text.find("y_3") == std::string::npos);
  CHECK(m2::fresh_hygiene(*f));
}

TEST_CASE("predicates") {
  CHECK(m2::equal(*m2::build_predicate(m2::Predicate::prop, "T"),
                  *m2::all1("x", m2::implies(m2::member(t("x"), "T"),
                                             m2::all1("y", m2::implies(m2::le(t("x"), t("y")),
                                                                       m2::member(t("y"), "T")))))));
  CHECK(m2::emit(*m2::build_predicate(m2::Predicate::fin, "T")) == "ex1 x: all1 y: (y in T => y lex<= x)");
  auto phi = [](const char* v) { return m2::conj(m2::member(t(v), "T"), m2::le1(t("x"), t(v))); };
  auto arity1 = m2::all1(
      "x", m2::implies(m2::member(t("x"), "T"),
                       m2::ex1("y", m2::conj(phi("y"), m2::all1("z", m2::implies(phi("z"), m2::eq(t("z"), t("y"))))))));
  CHECK(m2::equal(*m2::build_predicate(m2::Predicate::arity, "T", 1), *arity1));
}

TEST_CASE("predicates on finite domains") {
  auto d = Model::tree({{}, {0}, {1}, {0, 0}}, Mode::intuitionistic);
  auto prop = m2::build_predicate(m2::Predicate::prop, "X");
  for (std::uint64_t b = 0; b < 16; ++b) {
    m2::Env env;
    env.sets["X"] = WorldSet(b);
    CHECK(m2::eval_finite(*prop, d, env) == (upward_closure(d, WorldSet(b)) == WorldSet(b)));
  }
  auto tree = m2::build_predicate(m2::Predicate::tree, "X");
  const auto trees = subtrees(d);
  for (std::uint64_t b = 0; b < 16; ++b) {
    m2::Env env;
    env.sets["X"] = WorldSet(b);
    CHECK(m2::eval_finite(*tree, d, env) == (std::find(trees.begin(), trees.end(), WorldSet(b)) != trees.end()));
  }
  auto arity1 = m2::build_predicate(m2::Predicate::arity, "X", 1);
  auto arity2 = m2::build_predicate(m2::Predicate::arity, "X", 2);
  auto fin = m2::build_predicate(m2::Predicate::fin, "X");
  m2::Env env;
  env.sets["X"] = WorldSet(0b0011);  // root and [0]: [0] has no successor inside X
  CHECK_FALSE(m2::eval_finite(*arity1, d, env));
  env.sets["X"] = WorldSet();
  CHECK(m2::eval_finite(*arity1, d, env));
  CHECK(m2::eval_finite(*arity2, d, env));
  env.sets["X"] = d.all();
  CHECK(m2::eval_finite(*fin, d, env));
  m2::Env member;
  member.individuals["x"] = d.root();
  member.sets["X"] = WorldSet::single(d.root());
  CHECK(m2::eval_finite(*m2::member(t("x"), "X"), d, member));
  CHECK(error_of([&] { m2::eval_finite(*m2::member(t("x"), "Y"), d, member); }) == ErrorCode::unbound_variable);
}

TEST_CASE("emit: successor elimination and the reader") {
  CHECK(m2::emit(*m2::member(t("x"), "X_p")) == "x in X_p");
  CHECK(m2::emit(*m2::le1(t("x"), t("y"))) ==
        "(x <= y & ~x = y) & (all1 s_0: ((x <= s_0 & s_0 <= y) => (s_0 = x | s_0 = y)))");
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    FormulaShape shape;
    shape.closed = true;
    shape.lang = rng.chance(0.5) ? Language::modal : Language::intuitionistic;
    auto a = random_formula(rng, shape);
    for (const char* cls : {"qpHt", "qpHt-2", "qpHt-fin", "qpHt-omega", "s4t", "s4t-1", "s4t-fin"}) {
      const auto lc = m2::parse_logic_class(cls);
      if (lc.modal() != (a.language() == Language::modal)) continue;
      auto psi = m2::build_psi(a, lc);
      CHECK(m2::free_vars(*psi).empty());
      const auto text = m2::emit(*psi);
      auto back = m2::read(text);
      CHECK(m2::equal(*back, *m2::eliminate_successor(*psi)));
      CHECK(m2::emit(*back) == text);
      CHECK(m2::fresh_hygiene(*m2::eliminate_successor(*psi)));
    }
  }
}

TEST_CASE("build_psi: shapes and errors") {
  CHECK(m2::emit(*m2::build_psi(I("bot -> bot"), m2::parse_logic_class("qpHt"))) ==
        "all2 T: ((root in T & (all1 x: (x in T => (all1 y: (y <= x => y in T))))) => "
        "(all1 y_0: (y_0 in T => (root <= y_0 => (false => false)))))");
  CHECK(m2::emit(*m2::build_psi(I("bot"), m2::parse_logic_class("qpHt-omega"))) ==
        "all2 T: ((all1 z: z in T) => false)");
  CHECK(m2::emit(*m2::build_psi(I("bot"), m2::parse_logic_class("qpHt-fin"))).find(
            "& (ex1 x: all1 y: (y in T => y lex<= x))) => false)") != std::string::npos);
  CHECK(error_of([] { m2::build_psi(I("p"), m2::parse_logic_class("qpHt")); }) == ErrorCode::open_formula);
  CHECK(error_of([] { m2::parse_logic_class("qpHt-0"); }) == ErrorCode::invalid_argument);
  CHECK(error_of([] { m2::parse_logic_class("bogus"); }) == ErrorCode::invalid_argument);
  CHECK(m2::to_string(m2::parse_logic_class("s4t-3")) == "s4t-3");
}

TEST_CASE("property: translation agrees with the semantics") {
  Rng rng(31);
  for (int i = 0; i < 80; ++i) {
    const bool s4 = i % 2 == 1;
    auto m = with_random_valuation(rng, random_tree(rng, 5, s4 ? Mode::s4 : Mode::intuitionistic));
    FormulaShape shape;
    shape.lang = s4 ? Language::modal : Language::intuitionistic;
    auto a = random_formula(rng, shape);
    CHECK_MESSAGE(m2::translated_extension(a, m) == extension(m, a).worlds, print_formula(a));
  }
}

TEST_CASE("relativization: A^root over a larger domain evaluates A on the subtree T") {
  Rng rng(44);
  const std::vector<Formula> fixtures = {suite::formula_a(), suite::formula_b(), I("~forall p (p | ~p)"),
                                         I("~~forall p (p | ~p)"), I("exists p (p & ~forall q (q | ~q))")};
  const std::vector<Formula> modal = {S("forall p (dia ~p -> box p)"), S("exists p box dia p"),
                                      S("forall p (box p | box (box p -> box bot))")};
  for (int round = 0; round < 6; ++round) {
    auto d = random_tree(rng, 5, Mode::intuitionistic);
    for (WorldSet sub : subtrees(d)) {
      m2::Env env;
      env.sets["T"] = sub;
      for (const auto& a : fixtures) {
        auto body = m2::translate_step(a, m2::Term::root(), m2::TranslationMode::intuitionistic);
        CHECK(m2::eval_finite(*body, d, env) == validates(restrict_to(d, sub, Mode::intuitionistic), a));
      }
      for (const auto& a : modal) {
        auto body = m2::translate_step(a, m2::Term::root(), m2::TranslationMode::s4);
        CHECK(m2::eval_finite(*body, d, env) == validates(restrict_to(d, sub, Mode::s4), a));
      }
    }
  }
}

TEST_CASE("psi over a finite domain quantifies over its subtrees") {
  const auto d = Model::tree({{}, {0}, {1}, {0, 0}}, Mode::intuitionistic);
  const std::vector<Formula> fixtures = {suite::formula_a(), suite::formula_b(), I("~forall p (p | ~p)"),
                                         I("~~forall p (p | ~p)")};
  for (const auto& a : fixtures) {
    bool all = true;
    for (WorldSet sub : subtrees(d)) all = all && validates(restrict_to(d, sub, Mode::intuitionistic), a);
    for (const char* cls : {"qpHt", "qpHt-fin"})
      CHECK(m2::eval_finite(*m2::build_psi(a, m2::parse_logic_class(cls)), d, {}) == all);
  }
}
