#include "qptree/kripke.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qptree/error.hpp"
#include "qptree/formula.hpp"

namespace qpt {

bool is_prefix(const Word& x, const Word& y) noexcept {
  return x.size() <= y.size() && std::equal(x.begin(), x.end(), y.begin());
}

bool lex_le(const Word& x, const Word& y) noexcept { return !(y < x); }

std::string to_string(const NodeId& id) {
  if (const auto* w = std::get_if<Word>(&id)) {
    std::string s = "[";
    for (std::size_t i = 0; i < w->size(); ++i) {
      if (i) s += ',';
      s += std::to_string((*w)[i]);
    }
    return s + "]";
  }
  return "\"" + std::get<std::string>(id) + "\"";
}

const char* to_string(Mode m) noexcept { return m == Mode::intuitionistic ? "int" : "s4"; }
const char* to_string(ModelKind k) noexcept { return k == ModelKind::tree ? "tree" : "poset"; }

namespace {

void check_size(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::no_least_element, "model has no worlds");
  if (n > kMaxWorlds)
    throw Error(ErrorCode::bound_exceeded,
                "model has " + std::to_string(n) + " worlds; at most " +
                    std::to_string(kMaxWorlds) + " are supported");
}

void check_var_name(const std::string& v) {
  if (!is_identifier(v)) throw Error(ErrorCode::model_parse, "bad variable name '" + v + "'");
}

}  // namespace

Model Model::tree(std::vector<Word> words, Mode mode,
                  const std::map<std::string, std::vector<Word>>& valuation) {
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end())
    throw Error(ErrorCode::model_parse, "duplicate world in tree");
  check_size(words.size());
  for (const Word& w : words) {
    if (w.empty()) continue;
    Word parent(w.begin(), w.end() - 1);
    if (!std::binary_search(words.begin(), words.end(), parent))
      throw Error(ErrorCode::tree_not_prefix_closed,
                  "tree is not closed under prefixes: " + to_string(NodeId{w}) + " lacks parent " +
                      to_string(NodeId{parent}));
  }
  if (!words.front().empty())
    throw Error(ErrorCode::tree_not_prefix_closed, "tree lacks the empty word");

  Model m;
  m.kind_ = ModelKind::tree;
  m.mode_ = mode;
  const std::size_t n = words.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) le[i][j] = is_prefix(words[i], words[j]);
  for (Word& w : words) m.worlds_.emplace_back(std::move(w));
  m.finish(le);
  for (const auto& [var, ws] : valuation) {
    check_var_name(var);
    WorldSet s;
    for (const Word& w : ws) s.insert(m.index_of(NodeId{w}));
    m.valuation_[var] = s;
  }
  m.check_valuation();
  return m;
}

Model Model::poset(std::vector<std::string> labels,
                   const std::vector<std::pair<std::string, std::string>>& edges, Mode mode,
                   const std::map<std::string, std::vector<std::string>>& valuation) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw Error(ErrorCode::model_parse, "duplicate world in poset");
  check_size(labels.size());

  Model m;
  m.kind_ = ModelKind::poset;
  m.mode_ = mode;
  for (std::string& l : labels) m.worlds_.emplace_back(std::move(l));
  const std::size_t n = m.worlds_.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [a, b] : edges) le[m.index_of(NodeId{a})][m.index_of(NodeId{b})] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (le[i][j] && le[j][i])
        throw Error(ErrorCode::not_partial_order,
                    "edges form a cycle through " + to_string(m.worlds_[i]) + " and " +
                        to_string(m.worlds_[j]));
  m.finish(le);
  for (const auto& [var, ws] : valuation) {
    check_var_name(var);
    WorldSet s;
    for (const std::string& w : ws) s.insert(m.index_of(NodeId{w}));
    m.valuation_[var] = s;
  }
  m.check_valuation();
  return m;
}

void Model::finish(const std::vector<std::vector<bool>>& le) {
  const std::size_t n = worlds_.size();
  up_.assign(n, WorldSet{});
  down_.assign(n, WorldSet{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (le[i][j]) {
        up_[i].insert(j);
        down_[j].insert(i);
      }
  const WorldSet everything = all();
  std::optional<std::size_t> least;
  for (std::size_t i = 0; i < n; ++i)
    if (up_[i] == everything) least = i;
  if (!least) throw Error(ErrorCode::no_least_element, "order has no least element");
  root_ = *least;
  // Strictly smaller worlds have strictly smaller down-sets.
  linear_.resize(n);
  std::iota(linear_.begin(), linear_.end(), std::size_t{0});
  std::stable_sort(linear_.begin(), linear_.end(), [&](std::size_t a, std::size_t b) {
    return down_[a].size() < down_[b].size();
  });
}

void Model::check_valuation() const {
  if (mode_ != Mode::intuitionistic) return;
  for (const auto& [var, s] : valuation_)
    if (!is_upset(s))
      throw Error(ErrorCode::valuation_not_proposition,
                  "valuation of '" + var + "' is not upward closed");
}

WorldSet Model::leaves() const {
  WorldSet out;
  for (std::size_t i = 0; i < size(); ++i)
    if (up_[i].size() == 1) out.insert(i);
  return out;
}

std::optional<std::size_t> Model::find(const NodeId& id) const {
  auto it = std::lower_bound(worlds_.begin(), worlds_.end(), id);
  if (it == worlds_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - worlds_.begin());
}

std::size_t Model::index_of(const NodeId& id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorCode::unknown_world, "unknown world " + to_string(id));
}

bool Model::is_upset(WorldSet s) const {
  for (std::size_t i : s.members())
    if (i >= size() || !up_[i].subset_of(s)) return false;
  return true;
}

Model Model::with_mode(Mode m) const {
  Model out = *this;
  out.mode_ = m;
  out.check_valuation();
  return out;
}

Model Model::with_value(const std::string& var, WorldSet s) const {
  Valuation v = valuation_;
  v[var] = s;
  return with_valuation(std::move(v));
}

Model Model::with_valuation(Valuation v) const {
  for (const auto& [var, s] : v) {
    check_var_name(var);
    if (!s.subset_of(all())) throw Error(ErrorCode::unknown_world, "valuation outside the model");
  }
  Model out = *this;
  out.valuation_ = std::move(v);
  out.check_valuation();
  return out;
}

namespace {

// Walk the linear extension bottom-up. Including a world forces its whole
// up-set in; excluding it is possible only when no earlier world was
// included below it, which holds whenever it is not already forced. Each
// leaf of the recursion is a distinct upset.
void upsets_from(const Model& m, std::size_t pos, WorldSet in, std::vector<Proposition>& out) {
  const auto& order = m.linear_extension();
  while (pos < order.size() && in.contains(order[pos])) ++pos;
  if (pos == order.size()) {
    out.push_back(in);
    return;
  }
  const std::size_t w = order[pos];
  upsets_from(m, pos + 1, in, out);
  upsets_from(m, pos + 1, in | m.up(w), out);
}

}  // namespace

std::vector<Proposition> enumerate_upsets(const Model& m) {
  std::vector<Proposition> out;
  upsets_from(m, 0, WorldSet{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Proposition> enumerate_subsets(const Model& m) {
  if (m.size() > 24)
    throw Error(ErrorCode::bound_exceeded, "too many worlds to enumerate all subsets");
  const std::uint64_t n = std::uint64_t{1} << m.size();
  std::vector<Proposition> out;
  out.reserve(n);
  for (std::uint64_t b = 0; b < n; ++b) out.emplace_back(b);
  return out;
}

Proposition upward_closure(const Model& m, WorldSet s) {
  if (!s.subset_of(m.all())) throw Error(ErrorCode::unknown_world, "set contains unknown worlds");
  WorldSet out;
  for (std::size_t i : s.members()) out |= m.up(i);
  return out;
}

}  // namespace qpt
