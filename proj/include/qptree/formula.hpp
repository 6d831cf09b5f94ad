#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace qpt {

enum class Language { intuitionistic, modal };

enum class Connective { var, bottom, conj, disj, implies, forall, exists, box, diamond };

struct FormulaNode;
using FormulaPtr = std::shared_ptr<const FormulaNode>;

// Immutable AST node. Unary connectives (quantifiers, box, diamond) keep
// their operand in `left`; `name` is the variable for var and quantifiers.
struct FormulaNode {
  Connective kind;
  std::string name;
  FormulaPtr left;
  FormulaPtr right;
};

bool is_unary(Connective c) noexcept;
bool is_binary(Connective c) noexcept;
bool is_quantifier(Connective c) noexcept;
bool is_modal(Connective c) noexcept;

namespace ast {

FormulaPtr var(std::string name);
FormulaPtr bot();
FormulaPtr conj(FormulaPtr l, FormulaPtr r);
FormulaPtr disj(FormulaPtr l, FormulaPtr r);
FormulaPtr impl(FormulaPtr l, FormulaPtr r);
/// ~a, i.e. a -> bot.
FormulaPtr neg(FormulaPtr a);
FormulaPtr forall(std::string v, FormulaPtr body);
FormulaPtr exists(std::string v, FormulaPtr body);
FormulaPtr box(FormulaPtr body);
FormulaPtr dia(FormulaPtr body);

bool equal(const FormulaNode& a, const FormulaNode& b);
std::size_t depth(const FormulaNode& a);
bool contains_modal(const FormulaNode& a);

}  // namespace ast

/// A formula of one of the two object languages. Construction checks that
/// no box or diamond occurs under the intuitionistic tag and that every
/// variable name is a well-formed identifier.
class Formula {
 public:
  Formula(FormulaPtr root, Language lang);

  const FormulaNode& node() const noexcept { return *root_; }
  const FormulaPtr& ptr() const noexcept { return root_; }
  Language language() const noexcept { return lang_; }

  /// Same tree under another tag; re-validated.
  Formula retag(Language lang) const { return Formula(root_, lang); }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.lang_ == b.lang_ && ast::equal(*a.root_, *b.root_);
  }

 private:
  FormulaPtr root_;
  Language lang_;
};

bool is_identifier(std::string_view s) noexcept;
bool is_keyword(std::string_view s) noexcept;

Formula parse_formula(std::string_view text, Language lang);
std::string print_formula(const Formula& f);
std::string print_formula(const FormulaNode& f);

std::set<std::string> free_vars(const FormulaNode& f);
inline std::set<std::string> free_vars(const Formula& f) { return free_vars(f.node()); }
inline bool is_closed(const Formula& f) { return free_vars(f).empty(); }

/// Universal closure over the free variables in name order.
Formula universal_closure(const Formula& f);

}  // namespace qpt
