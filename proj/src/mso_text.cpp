#include <cctype>

#include "qptree/error.hpp"
#include "qptree/mso.hpp"

namespace qpt::mso {

namespace {

bool is_compound(Kind k) {
  return k == Kind::conj || k == Kind::disj || k == Kind::implies || k == Kind::forall1 ||
         k == Kind::exists1 || k == Kind::forall2 || k == Kind::exists2;
}

std::string term(const Term& t) { return t.is_root() ? "root" : t.var; }

void render(const Node& f, std::string& out);

// Operands of connectives are parenthesized whenever they are binary or
// quantified, so the output never depends on precedence.
void operand(const Node& f, std::string& out) {
  if (is_compound(f.kind)) {
    out += '(';
    render(f, out);
    out += ')';
  } else {
    render(f, out);
  }
}

void render(const Node& f, std::string& out) {
  switch (f.kind) {
    case Kind::member:
      out += term(f.a) + " in " + f.set;
      return;
    case Kind::le:
      out += term(f.a) + " <= " + term(f.b);
      return;
    case Kind::lex:
      out += term(f.a) + " lex<= " + term(f.b);
      return;
    case Kind::eq:
      out += term(f.a) + " = " + term(f.b);
      return;
    case Kind::subset:
      out += f.set + " sub " + f.set2;
      return;
    case Kind::bottom:
      out += "false";
      return;
    case Kind::le1:
      // emit() removes these first
      throw Error(ErrorCode::invalid_argument, "successor atom reached the renderer");
    case Kind::neg:
      out += '~';
      operand(*f.left, out);
      return;
    case Kind::conj:
    case Kind::disj:
    case Kind::implies:
      operand(*f.left, out);
      out += f.kind == Kind::conj ? " & " : f.kind == Kind::disj ? " | " : " => ";
      operand(*f.right, out);
      return;
    case Kind::forall1:
    case Kind::exists1:
    case Kind::forall2:
    case Kind::exists2: {
      static const char* const names[] = {"all1 ", "ex1 ", "all2 ", "ex2 "};
      out += names[static_cast<int>(f.kind) - static_cast<int>(Kind::forall1)];
      out += f.var;
      out += ": ";
      const Kind b = f.left->kind;
      if (b == Kind::conj || b == Kind::disj || b == Kind::implies) {
        out += '(';
        render(*f.left, out);
        out += ')';
      } else {
        render(*f.left, out);
      }
      return;
    }
  }
}

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  MsoPtr parse() {
    MsoPtr f = formula();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::syntax, "MSO syntax error at offset " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string_view peek_word() {
    skip();
    std::size_t e = pos_;
    while (e < s_.size() && word_char(s_[e])) ++e;
    return s_.substr(pos_, e - pos_);
  }

  std::string word() {
    std::string_view w = peek_word();
    if (w.empty()) fail("expected a name");
    pos_ += w.size();
    return std::string(w);
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    // keep "lex<=" from matching "lex" followed by other text
    if (word_char(tok.back()) && pos_ + tok.size() < s_.size() && word_char(s_[pos_ + tok.size()]))
      return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  MsoPtr formula() {
    for (int q = 0; q < 4; ++q) {
      static const char* const names[] = {"all1", "ex1", "all2", "ex2"};
      if (accept(names[q])) {
        std::string v = word();
        expect(":");
        MsoPtr body = formula();
        switch (q) {
          case 0: return all1(std::move(v), std::move(body));
          case 1: return ex1(std::move(v), std::move(body));
          case 2: return all2(std::move(v), std::move(body));
          default: return ex2(std::move(v), std::move(body));
        }
      }
    }
    MsoPtr l = unary();
    if (accept("&")) return conj(std::move(l), unary());
    if (accept("|")) return disj(std::move(l), unary());
    if (accept("=>")) return implies(std::move(l), unary());
    return l;
  }

  MsoPtr unary() {
    if (accept("~")) return neg(unary());
    if (accept("(")) {
      MsoPtr f = formula();
      expect(")");
      return f;
    }
    return atom();
  }

  Term read_term() {
    std::string w = word();
    return w == "root" ? Term::root() : Term::of(std::move(w));
  }

  MsoPtr atom() {
    if (accept("false")) return bottom();
    const std::size_t start = pos_;
    std::string first = word();
    if (accept("sub")) return subset(std::move(first), word());
    pos_ = start;
    Term a = read_term();
    if (accept("in")) return member(std::move(a), word());
    if (accept("lex<=")) return lex(std::move(a), read_term());
    if (accept("<=")) return le(std::move(a), read_term());
    if (accept("=")) return eq(std::move(a), read_term());
    fail("expected an atom");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string emit(const Node& f) {
  std::string out;
  render(*eliminate_successor(f), out);
  return out;
}

MsoPtr read(std::string_view text) { return Reader(text).parse(); }

}  // namespace qpt::mso
