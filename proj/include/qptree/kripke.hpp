#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qpt {

/// Maximum number of worlds in a model; propositions are 64-bit masks.
inline constexpr std::size_t kMaxWorlds = 64;

/// A set of worlds of one model, as a bit vector indexed by world position.
class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr WorldSet single(std::size_t i) { return WorldSet(std::uint64_t{1} << i); }
  static constexpr WorldSet first_n(std::size_t n) {
    return WorldSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
  constexpr std::size_t size() const noexcept { return std::popcount(bits_); }
  constexpr bool subset_of(WorldSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(WorldSet o) const noexcept { return (bits_ & o.bits_) != 0; }

  constexpr void insert(std::size_t i) noexcept { bits_ |= std::uint64_t{1} << i; }

  friend constexpr WorldSet operator&(WorldSet a, WorldSet b) { return WorldSet(a.bits_ & b.bits_); }
  friend constexpr WorldSet operator|(WorldSet a, WorldSet b) { return WorldSet(a.bits_ | b.bits_); }
  /// Relative complement a \ b.
  friend constexpr WorldSet operator-(WorldSet a, WorldSet b) { return WorldSet(a.bits_ & ~b.bits_); }
  WorldSet& operator&=(WorldSet o) { bits_ &= o.bits_; return *this; }
  WorldSet& operator|=(WorldSet o) { bits_ |= o.bits_; return *this; }

  friend constexpr bool operator==(WorldSet, WorldSet) = default;
  friend constexpr auto operator<=>(WorldSet a, WorldSet b) { return a.bits_ <=> b.bits_; }

  /// Indices of the members in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

using Proposition = WorldSet;

/// A tree node: a finite word over the naturals; the empty word is the root.
using Word = std::vector<std::uint32_t>;
/// Worlds are words in tree models and opaque labels in poset models.
using NodeId = std::variant<Word, std::string>;

/// Prefix order: x <= y iff y = xz.
bool is_prefix(const Word& x, const Word& y) noexcept;
/// Lexicographic order on words, prefixes first.
bool lex_le(const Word& x, const Word& y) noexcept;

/// JSON-style rendering: words as "[0,1]", labels quoted.
std::string to_string(const NodeId& id);

enum class ModelKind { tree, poset };
enum class Mode { intuitionistic, s4 };

const char* to_string(Mode m) noexcept;
const char* to_string(ModelKind k) noexcept;

using Valuation = std::map<std::string, WorldSet>;

/// A finite Kripke model: worlds sorted (words lexicographically, labels by
/// string order), a partial order with a least element, and a valuation.
/// Immutable once built; the factories validate every structural invariant.
class Model {
 public:
  /// Tree model on a prefix-closed word set; order is prefix order.
  static Model tree(std::vector<Word> words, Mode mode,
                    const std::map<std::string, std::vector<Word>>& valuation = {});
  /// Poset model; `edges` may be any relation whose reflexive-transitive
  /// closure is a partial order with a least element.
  static Model poset(std::vector<std::string> labels,
                     const std::vector<std::pair<std::string, std::string>>& edges, Mode mode,
                     const std::map<std::string, std::vector<std::string>>& valuation = {});

  ModelKind kind() const noexcept { return kind_; }
  Mode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return worlds_.size(); }
  const std::vector<NodeId>& worlds() const noexcept { return worlds_; }
  const NodeId& world(std::size_t i) const { return worlds_.at(i); }
  std::size_t root() const noexcept { return root_; }
  WorldSet all() const noexcept { return WorldSet::first_n(worlds_.size()); }

  /// Worlds >= i (including i).
  WorldSet up(std::size_t i) const { return up_.at(i); }
  /// Worlds <= i (including i).
  WorldSet down(std::size_t i) const { return down_.at(i); }
  bool le(std::size_t i, std::size_t j) const { return up_.at(i).contains(j); }
  WorldSet leaves() const;

  std::optional<std::size_t> find(const NodeId& id) const;
  /// Like find, but throws unknown_world.
  std::size_t index_of(const NodeId& id) const;

  const Valuation& valuation() const noexcept { return valuation_; }
  bool is_upset(WorldSet s) const;

  /// Copy with another mode. Switching to intuitionistic re-checks the valuation.
  Model with_mode(Mode m) const;
  /// Copy with the valuation entry for `var` replaced.
  Model with_value(const std::string& var, WorldSet s) const;
  Model with_valuation(Valuation v) const;

  /// A fixed linear extension of the order (every world after all worlds below it).
  const std::vector<std::size_t>& linear_extension() const noexcept { return linear_; }

  friend bool operator==(const Model& a, const Model& b) {
    return a.kind_ == b.kind_ && a.mode_ == b.mode_ && a.worlds_ == b.worlds_ &&
           a.up_ == b.up_ && a.valuation_ == b.valuation_;
  }

 private:
  Model() = default;
  void finish(const std::vector<std::vector<bool>>& le);
  void check_valuation() const;

  ModelKind kind_ = ModelKind::tree;
  Mode mode_ = Mode::intuitionistic;
  std::vector<NodeId> worlds_;
  std::vector<WorldSet> up_;
  std::vector<WorldSet> down_;
  std::vector<std::size_t> linear_;
  std::size_t root_ = 0;
  Valuation valuation_;
};

/// Every upward-closed subset of the worlds, exactly once, in ascending
/// order of the characteristic bit vector (bit i is world i).
std::vector<Proposition> enumerate_upsets(const Model& m);
/// All 2^n subsets in ascending bit-vector order.
std::vector<Proposition> enumerate_subsets(const Model& m);
/// Least upward-closed superset. Throws unknown_world for bits outside the model.
Proposition upward_closure(const Model& m, WorldSet s);

/// Model file (JSON) reader and writer.
Model load_model(std::string_view json_text);
Model load_model_file(const std::string& path);
std::string dump_model(const Model& m);
/// JSON array of the given worlds, in world order.
std::string dump_worlds(const Model& m, WorldSet s);

}  // namespace qpt
