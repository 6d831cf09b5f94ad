#include "qptree/formula.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "qptree/error.hpp"

namespace qpt {

bool is_unary(Connective c) noexcept {
  return c == Connective::forall || c == Connective::exists || c == Connective::box ||
         c == Connective::diamond;
}

bool is_binary(Connective c) noexcept {
  return c == Connective::conj || c == Connective::disj || c == Connective::implies;
}

bool is_quantifier(Connective c) noexcept {
  return c == Connective::forall || c == Connective::exists;
}

bool is_modal(Connective c) noexcept {
  return c == Connective::box || c == Connective::diamond;
}

namespace ast {

namespace {
FormulaPtr make(Connective k, std::string name, FormulaPtr l, FormulaPtr r) {
  return std::make_shared<const FormulaNode>(
      FormulaNode{k, std::move(name), std::move(l), std::move(r)});
}
}  // namespace

FormulaPtr var(std::string name) { return make(Connective::var, std::move(name), nullptr, nullptr); }
FormulaPtr bot() { return make(Connective::bottom, {}, nullptr, nullptr); }
FormulaPtr conj(FormulaPtr l, FormulaPtr r) { return make(Connective::conj, {}, std::move(l), std::move(r)); }
FormulaPtr disj(FormulaPtr l, FormulaPtr r) { return make(Connective::disj, {}, std::move(l), std::move(r)); }
FormulaPtr impl(FormulaPtr l, FormulaPtr r) { return make(Connective::implies, {}, std::move(l), std::move(r)); }
FormulaPtr neg(FormulaPtr a) { return impl(std::move(a), bot()); }
FormulaPtr forall(std::string v, FormulaPtr body) {
  return make(Connective::forall, std::move(v), std::move(body), nullptr);
}
FormulaPtr exists(std::string v, FormulaPtr body) {
  return make(Connective::exists, std::move(v), std::move(body), nullptr);
}
FormulaPtr box(FormulaPtr body) { return make(Connective::box, {}, std::move(body), nullptr); }
FormulaPtr dia(FormulaPtr body) { return make(Connective::diamond, {}, std::move(body), nullptr); }

bool equal(const FormulaNode& a, const FormulaNode& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.name != b.name) return false;
  if (is_binary(a.kind)) return equal(*a.left, *b.left) && equal(*a.right, *b.right);
  if (is_unary(a.kind)) return equal(*a.left, *b.left);
  return true;
}

std::size_t depth(const FormulaNode& a) {
  if (is_binary(a.kind)) return 1 + std::max(depth(*a.left), depth(*a.right));
  if (is_unary(a.kind)) return 1 + depth(*a.left);
  return 0;
}

bool contains_modal(const FormulaNode& a) {
  if (is_modal(a.kind)) return true;
  if (is_binary(a.kind)) return contains_modal(*a.left) || contains_modal(*a.right);
  if (is_unary(a.kind)) return contains_modal(*a.left);
  return false;
}

}  // namespace ast

bool is_keyword(std::string_view s) noexcept {
  return s == "bot" || s == "forall" || s == "exists" || s == "box" || s == "dia";
}

bool is_identifier(std::string_view s) noexcept {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return !is_keyword(s);
}

namespace {

void check_wellformed(const FormulaNode& n, Language lang) {
  switch (n.kind) {
    case Connective::var:
      if (!is_identifier(n.name))
        throw Error(ErrorCode::invalid_argument, "bad variable name '" + n.name + "'");
      return;
    case Connective::bottom:
      return;
    case Connective::forall:
    case Connective::exists:
      if (!is_identifier(n.name))
        throw Error(ErrorCode::invalid_argument, "bad bound variable name '" + n.name + "'");
      check_wellformed(*n.left, lang);
      return;
    case Connective::box:
    case Connective::diamond:
      if (lang == Language::intuitionistic)
        throw Error(ErrorCode::language, "modal operator in an intuitionistic formula");
      check_wellformed(*n.left, lang);
      return;
    default:
      check_wellformed(*n.left, lang);
      check_wellformed(*n.right, lang);
  }
}

}  // namespace

Formula::Formula(FormulaPtr root, Language lang) : root_(std::move(root)), lang_(lang) {
  if (!root_) throw Error(ErrorCode::invalid_argument, "null formula");
  check_wellformed(*root_, lang_);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { ident, kw_bot, kw_forall, kw_exists, kw_box, kw_dia, amp, bar, arrow, tilde, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

class Parser {
 public:
  Parser(std::string_view src, Language lang) : src_(src), lang_(lang) { advance(); }

  FormulaPtr parse() {
    FormulaPtr f = implication();
    if (cur_.kind != Tok::end) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::syntax,
                "syntax error at offset " + std::to_string(cur_.offset) + ": " + msg, cur_.offset);
  }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      cur_ = {Tok::end, {}, start};
      return;
    }
    const char c = src_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      cur_ = {k, src_.substr(start, 1), start};
    };
    switch (c) {
      case '&': return single(Tok::amp);
      case '|': return single(Tok::bar);
      case '~': return single(Tok::tilde);
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
          pos_ += 2;
          cur_ = {Tok::arrow, src_.substr(start, 2), start};
          return;
        }
        break;
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string_view word = src_.substr(start, pos_ - start);
      Tok k = Tok::ident;
      if (word == "bot") k = Tok::kw_bot;
      else if (word == "forall") k = Tok::kw_forall;
      else if (word == "exists") k = Tok::kw_exists;
      else if (word == "box") k = Tok::kw_box;
      else if (word == "dia") k = Tok::kw_dia;
      cur_ = {k, word, start};
      return;
    }
    cur_ = {Tok::end, {}, start};
    fail(std::string("unexpected character '") + c + "'");
  }

  void expect(Tok k, const char* what) {
    if (cur_.kind != k) fail(std::string("expected ") + what);
    advance();
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (cur_.kind == Tok::arrow) {
      advance();
      return ast::impl(std::move(lhs), implication());
    }
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (cur_.kind == Tok::bar) {
      advance();
      f = ast::disj(std::move(f), conjunction());
    }
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (cur_.kind == Tok::amp) {
      advance();
      f = ast::conj(std::move(f), unary());
    }
    return f;
  }

  FormulaPtr unary() {
    switch (cur_.kind) {
      case Tok::tilde:
        advance();
        return ast::neg(unary());
      case Tok::kw_box:
      case Tok::kw_dia: {
        if (lang_ == Language::intuitionistic)
          throw Error(ErrorCode::language,
                      "modal operator '" + std::string(cur_.text) +
                          "' not allowed in an intuitionistic formula (offset " +
                          std::to_string(cur_.offset) + ")",
                      cur_.offset);
        const bool is_box = cur_.kind == Tok::kw_box;
        advance();
        FormulaPtr body = unary();
        return is_box ? ast::box(std::move(body)) : ast::dia(std::move(body));
      }
      case Tok::kw_forall:
      case Tok::kw_exists: {
        const bool is_all = cur_.kind == Tok::kw_forall;
        advance();
        if (cur_.kind != Tok::ident) fail("expected a variable after quantifier");
        std::string v(cur_.text);
        advance();
        FormulaPtr body = unary();
        return is_all ? ast::forall(std::move(v), std::move(body))
                      : ast::exists(std::move(v), std::move(body));
      }
      default:
        return atom();
    }
  }

  FormulaPtr atom() {
    switch (cur_.kind) {
      case Tok::ident: {
        FormulaPtr v = ast::var(std::string(cur_.text));
        advance();
        return v;
      }
      case Tok::kw_bot:
        advance();
        return ast::bot();
      case Tok::lparen: {
        advance();
        FormulaPtr f = implication();
        expect(Tok::rparen, "')'");
        return f;
      }
      default:
        fail("expected a formula");
    }
  }

  std::string_view src_;
  Language lang_;
  std::size_t pos_ = 0;
  Token cur_{Tok::end, {}, 0};
};

// Binding strength: implication 0, disjunction 1, conjunction 2, prefix
// operators and atoms 3.
int level(const FormulaNode& n) {
  switch (n.kind) {
    case Connective::implies:
      return n.right->kind == Connective::bottom ? 3 : 0;
    case Connective::disj:
      return 1;
    case Connective::conj:
      return 2;
    default:
      return 3;
  }
}

void print(const FormulaNode& n, int need, std::string& out) {
  const bool paren = level(n) < need;
  if (paren) out += '(';
  switch (n.kind) {
    case Connective::var:
      out += n.name;
      break;
    case Connective::bottom:
      out += "bot";
      break;
    case Connective::implies:
      if (n.right->kind == Connective::bottom) {
        out += '~';
        print(*n.left, 3, out);
      } else {
        print(*n.left, 1, out);
        out += " -> ";
        print(*n.right, 0, out);
      }
      break;
    case Connective::disj:
      print(*n.left, 1, out);
      out += " | ";
      print(*n.right, 2, out);
      break;
    case Connective::conj:
      print(*n.left, 2, out);
      out += " & ";
      print(*n.right, 3, out);
      break;
    case Connective::forall:
    case Connective::exists:
      out += n.kind == Connective::forall ? "forall " : "exists ";
      out += n.name;
      out += ' ';
      print(*n.left, 3, out);
      break;
    case Connective::box:
    case Connective::diamond:
      out += n.kind == Connective::box ? "box " : "dia ";
      print(*n.left, 3, out);
      break;
  }
  if (paren) out += ')';
}

void collect_free(const FormulaNode& n, std::multiset<std::string>& bound,
                  std::set<std::string>& out) {
  switch (n.kind) {
    case Connective::var:
      if (!bound.contains(n.name)) out.insert(n.name);
      return;
    case Connective::bottom:
      return;
    case Connective::forall:
    case Connective::exists: {
      auto it = bound.insert(n.name);
      collect_free(*n.left, bound, out);
      bound.erase(it);
      return;
    }
    case Connective::box:
    case Connective::diamond:
      collect_free(*n.left, bound, out);
      return;
    default:
      collect_free(*n.left, bound, out);
      collect_free(*n.right, bound, out);
  }
}

}  // namespace

Formula parse_formula(std::string_view text, Language lang) {
  return Formula(Parser(text, lang).parse(), lang);
}

std::string print_formula(const FormulaNode& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

std::string print_formula(const Formula& f) { return print_formula(f.node()); }

std::set<std::string> free_vars(const FormulaNode& f) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

Formula universal_closure(const Formula& f) {
  const auto fv = free_vars(f);
  FormulaPtr body = f.ptr();
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) body = ast::forall(*it, body);
  return Formula(body, f.language());
}

}  // namespace qpt
