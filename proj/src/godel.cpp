#include "qptree/godel.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "qptree/error.hpp"
#include "qptree/search.hpp"
#include "qptree/semantics.hpp"

namespace qpt::godel {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw Error(ErrorCode::invalid_argument, "bad rational '" + std::string(whole) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto i = s.find(sep);
    out.push_back(trim(s.substr(0, i)));
    if (i == std::string_view::npos) return out;
    s.remove_prefix(i + 1);
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(t, text));
  const std::int64_t den = parse_int(t.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::invalid_argument, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(t.substr(0, slash), text), den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

TruthValueSet::TruthValueSet(std::vector<Rational> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  if (std::adjacent_find(values_.begin(), values_.end()) != values_.end())
    throw Error(ErrorCode::invalid_argument, "duplicate truth value");
  if (values_.empty() || values_.front() != Rational(0) || values_.back() != Rational(1))
    throw Error(ErrorCode::invalid_argument, "truth values must lie in [0,1] and include 0 and 1");
}

TruthValueSet TruthValueSet::parse(std::string_view text) {
  std::vector<Rational> vs;
  for (std::string_view part : split(text, ',')) vs.push_back(parse_rational(part));
  return TruthValueSet(std::move(vs));
}

TruthValueSet TruthValueSet::equally_spaced(unsigned k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "need at least one step");
  std::vector<Rational> vs;
  for (unsigned i = 0; i <= k; ++i) vs.emplace_back(i, k);
  return TruthValueSet(std::move(vs));
}

bool TruthValueSet::contains(const Rational& r) const {
  return std::binary_search(values_.begin(), values_.end(), r);
}

std::string TruthValueSet::str() const {
  std::string out;
  for (const Rational& r : values_) {
    if (!out.empty()) out += ',';
    out += to_string(r);
  }
  return out;
}

GodelValuation parse_valuation(std::string_view text) {
  GodelValuation v;
  if (trim(text).empty()) return v;
  for (std::string_view part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::invalid_argument, "valuation entries look like p=1/2");
    const std::string var(trim(part.substr(0, eq)));
    if (!is_identifier(var)) throw Error(ErrorCode::invalid_argument, "bad variable name '" + var + "'");
    v[var] = parse_rational(part.substr(eq + 1));
  }
  return v;
}

namespace {

class Evaluator {
 public:
  Evaluator(GodelValuation v, const TruthValueSet& values) : v_(std::move(v)), values_(values) {}

  Rational eval(const FormulaNode& n) {
    switch (n.kind) {
      case Connective::var: {
        auto it = v_.find(n.name);
        if (it == v_.end())
          throw Error(ErrorCode::unbound_variable, "variable '" + n.name + "' has no truth value");
        return it->second;
      }
      case Connective::bottom:
        return Rational(0);
      case Connective::conj:
        return std::min(eval(*n.left), eval(*n.right));
      case Connective::disj:
        return std::max(eval(*n.left), eval(*n.right));
      case Connective::implies: {
        const Rational a = eval(*n.left);
        const Rational b = eval(*n.right);
        return a <= b ? Rational(1) : b;
      }
      case Connective::forall:
      case Connective::exists: {
        // finite V, so sup and inf are attained
        const bool all = n.kind == Connective::forall;
        auto saved = v_.find(n.name) != v_.end() ? std::optional<Rational>(v_[n.name]) : std::nullopt;
        Rational acc = all ? Rational(1) : Rational(0);
        for (const Rational& w : values_.values()) {
          v_[n.name] = w;
          const Rational r = eval(*n.left);
          acc = all ? std::min(acc, r) : std::max(acc, r);
        }
        if (saved) v_[n.name] = *saved;
        else v_.erase(n.name);
        return acc;
      }
      case Connective::box:
      case Connective::diamond:
        break;
    }
    throw Error(ErrorCode::language, "modal operator in a Goedel-Dummett formula");
  }

 private:
  GodelValuation v_;
  const TruthValueSet& values_;
};

}  // namespace

Rational godel_eval(const GodelValuation& v, const Formula& a, const TruthValueSet& values) {
  if (a.language() != Language::intuitionistic)
    throw Error(ErrorCode::language, "Goedel-Dummett evaluation needs an intuitionistic formula");
  for (const auto& [var, value] : v)
    if (!values.contains(value))
      throw Error(ErrorCode::invalid_argument,
                  "value " + to_string(value) + " of '" + var + "' is not in {" + values.str() + "}");
  return Evaluator(v, values).eval(a.node());
}

TautologyVerdict godel_tautology(const Formula& a, const TruthValueSet& values) {
  const auto fv = free_vars(a);
  const std::vector<std::string> vars(fv.begin(), fv.end());
  const std::size_t base = values.values().size();
  std::vector<std::size_t> digits(vars.size(), 0);
  TautologyVerdict out;
  bool first = true;
  while (true) {
    GodelValuation v;
    for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = values.values()[digits[i]];
    const Rational r = godel_eval(v, a, values);
    if (first || r < out.least) {
      out.least = r;
      out.witness = v;
      first = false;
    }
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == base) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  out.tautology = out.least == Rational(1);
  return out;
}

std::pair<bool, bool> chain_correspondence(unsigned k, const Formula& a) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "chain length must be at least 1");
  if (!is_closed(a)) throw Error(ErrorCode::open_formula, "chain correspondence needs a closed formula");
  const bool kripke = validates(chain(k), a);
  const bool godel = godel_eval({}, a, TruthValueSet::equally_spaced(k)) == Rational(1);
  return {kripke, godel};
}

}  // namespace qpt::godel
