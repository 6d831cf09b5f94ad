#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "qptree/formula.hpp"

namespace qpt::godel {

using Rational = boost::rational<std::int64_t>;

/// "3/4", "1", "0".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Finite set of truth values in [0,1] containing 0 and 1, kept sorted.
class TruthValueSet {
 public:
  explicit TruthValueSet(std::vector<Rational> values);

  /// Comma-separated rationals, e.g. "0,1/3,1/2,1". Order is free.
  static TruthValueSet parse(std::string_view text);
  /// {0, 1/k, 2/k, ..., 1}.
  static TruthValueSet equally_spaced(unsigned k);

  const std::vector<Rational>& values() const noexcept { return values_; }
  bool contains(const Rational& r) const;
  std::string str() const;

 private:
  std::vector<Rational> values_;
};

using GodelValuation = std::map<std::string, Rational>;

/// "p=1/2,q=1".
GodelValuation parse_valuation(std::string_view text);

/// Value of an intuitionistic formula: bottom 0, min, max, residuated
/// implication, quantifiers as max/min over the truth values.
Rational godel_eval(const GodelValuation& v, const Formula& a, const TruthValueSet& values);

struct TautologyVerdict {
  bool tautology = true;
  Rational least{1};
  GodelValuation witness;  // a valuation reaching `least`
};

/// Checks value 1 under every valuation of the free variables into V.
TautologyVerdict godel_tautology(const Formula& a, const TruthValueSet& values);

/// (valid on the k-element chain, 1-tautology over the k+1 equally spaced values).
std::pair<bool, bool> chain_correspondence(unsigned k, const Formula& a);

}  // namespace qpt::godel
