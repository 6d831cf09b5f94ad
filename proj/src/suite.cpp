#include "qptree/suite.hpp"

#include "qptree/embedding.hpp"
#include "qptree/search.hpp"
#include "qptree/semantics.hpp"

namespace qpt::suite {

Formula formula_a() { return parse_formula(kFormulaA, Language::intuitionistic); }
Formula formula_b() { return parse_formula(kFormulaB, Language::intuitionistic); }

Model diamond(Mode mode) {
  return Model::poset({"g", "a", "b", "t"}, {{"g", "a"}, {"g", "b"}, {"a", "t"}, {"b", "t"}}, mode);
}

namespace {

constexpr std::size_t kTreeBound = 7;

CheckResult expect_countermodel(std::string name, const Formula& f, const SearchBounds& b,
                                const Model& expected) {
  const SearchOutcome r = bounded_validity(f, b);
  CheckResult c{std::move(name)};
  if (!r.refuted()) {
    c.detail = "no countermodel found";
    return c;
  }
  c.pass = *r.countermodel == expected;
  c.detail = "countermodel " + dump_model(*r.countermodel);
  return c;
}

CheckResult expect_no_countermodel(std::string name, const Formula& f, const SearchBounds& b) {
  const SearchOutcome r = bounded_validity(f, b);
  CheckResult c{std::move(name)};
  c.pass = !r.refuted();
  c.detail = c.pass ? "no countermodel among " + std::to_string(r.structures_checked) + " structures"
                    : "countermodel " + dump_model(*r.countermodel);
  return c;
}

}  // namespace

std::vector<CheckResult> run_examples() {
  const Formula a = formula_a();
  const Formula b = formula_b();
  const Formula not_b(ast::neg(b.ptr()), Language::intuitionistic);
  const Formula not_not_b(ast::neg(not_b.ptr()), Language::intuitionistic);
  const SearchBounds trees{kTreeBound, StructureClass::finite_trees};
  const SearchBounds posets{4, StructureClass::finite_posets};
  const Model one_node = Model::tree({Word{}}, Mode::intuitionistic);

  std::vector<CheckResult> out;
  {
    CheckResult c{"A refuted by the diamond"};
    c.pass = !validates(diamond(), a);
    c.detail = c.pass ? "root does not force A" : "root forces A";
    out.push_back(c);
  }
  {
    const SearchOutcome r = bounded_validity(a, posets);
    CheckResult c{"diamond is the least poset countermodel to A"};
    c.pass = r.refuted() && enumerate_upsets(*r.countermodel).size() == 6 &&
             r.countermodel->size() == 4 && r.countermodel->leaves().size() == 1;
    c.detail = r.refuted() ? "countermodel " + dump_model(*r.countermodel) : "none found";
    out.push_back(c);
  }
  out.push_back(expect_no_countermodel("A valid on finite trees up to 7 worlds", a, trees));
  out.push_back(expect_countermodel("~B refuted by the one-node tree", not_b, trees, one_node));
  out.push_back(expect_no_countermodel("~~B valid on finite trees up to 7 worlds", not_not_b, trees));
  {
    CheckResult c{"B defines the leaves on finite trees up to 7 worlds"};
    c.pass = true;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= kTreeBound; ++n)
      for (const Model& m : enumerate_trees(n)) {
        ++checked;
        if (extension_int(m, b).worlds != m.leaves()) c.pass = false;
      }
    c.detail = std::to_string(checked) + " trees checked";
    out.push_back(c);
  }

  const Formula a_t = t_embed(a);
  const Formula not_b_t = t_embed(not_b);
  const Formula not_not_b_t = t_embed(not_not_b);
  {
    CheckResult c{"A^T refuted by the diamond"};
    c.pass = !validates(diamond(Mode::s4), a_t);
    c.detail = print_formula(a_t);
    out.push_back(c);
  }
  out.push_back(expect_no_countermodel("A^T valid on finite trees up to 7 worlds", a_t, trees));
  out.push_back(expect_countermodel("(~B)^T refuted by the one-node tree", not_b_t, trees,
                                    one_node.with_mode(Mode::s4)));
  out.push_back(expect_no_countermodel("(~~B)^T valid on finite trees up to 7 worlds", not_not_b_t, trees));
  return out;
}

}  // namespace qpt::suite
