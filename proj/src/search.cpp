#include "qptree/search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

#include "qptree/error.hpp"
#include "qptree/semantics.hpp"

namespace qpt {

StructureClass parse_structure_class(std::string_view name) {
  if (name == "finite-trees") return StructureClass::finite_trees;
  if (name == "finite-posets") return StructureClass::finite_posets;
  if (name == "chains") return StructureClass::chains;
  throw Error(ErrorCode::invalid_argument,
              "unknown structure class '" + std::string(name) +
                  "' (expected finite-trees, finite-posets or chains)");
}

const char* to_string(StructureClass c) noexcept {
  switch (c) {
    case StructureClass::finite_trees: return "finite-trees";
    case StructureClass::finite_posets: return "finite-posets";
    case StructureClass::chains: return "chains";
  }
  return "";
}

namespace {

// Parent-array trees, node 0 the root.
struct ParentTree {
  std::vector<int> parent;
};

std::string encode(const std::vector<std::vector<int>>& kids, int v) {
  std::vector<std::string> parts;
  for (int c : kids[v]) parts.push_back(encode(kids, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

std::string encode(const ParentTree& t) {
  std::vector<std::vector<int>> kids(t.parent.size());
  for (std::size_t i = 1; i < t.parent.size(); ++i) kids[t.parent[i]].push_back(static_cast<int>(i));
  return encode(kids, 0);
}

// Splits "(...)(...)" into its top-level groups.
std::vector<std::string_view> groups(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' && depth++ == 0) start = i;
    if (s[i] == ')' && --depth == 0) out.push_back(s.substr(start, i - start + 1));
  }
  return out;
}

void decode_words(std::string_view enc, Word& prefix, std::vector<Word>& out) {
  out.push_back(prefix);
  const auto kids = groups(enc.substr(1, enc.size() - 2));
  for (std::size_t i = 0; i < kids.size(); ++i) {
    prefix.push_back(static_cast<std::uint32_t>(i));
    decode_words(kids[i], prefix, out);
    prefix.pop_back();
  }
}

ParentTree decode_parents(std::string_view enc) {
  ParentTree t;
  std::vector<int> stack;
  for (char c : enc) {
    if (c == '(') {
      t.parent.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(static_cast<int>(t.parent.size()) - 1);
    } else {
      stack.pop_back();
    }
  }
  return t;
}

std::vector<std::string> tree_codes(std::size_t n) {
  std::set<std::string> codes{"()"};
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<std::string> next;
    for (const std::string& c : codes) {
      const ParentTree base = decode_parents(c);
      for (std::size_t v = 0; v < base.parent.size(); ++v) {
        ParentTree t = base;
        t.parent.push_back(static_cast<int>(v));
        next.insert(encode(t));
      }
    }
    codes = std::move(next);
  }
  return {codes.begin(), codes.end()};
}

}  // namespace

std::string tree_encoding(const Model& tree) {
  if (tree.kind() != ModelKind::tree) throw Error(ErrorCode::invalid_argument, "not a tree model");
  std::vector<std::vector<int>> kids(tree.size());
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const Word& w = std::get<Word>(tree.world(i));
    if (w.empty()) continue;
    kids[tree.index_of(Word(w.begin(), w.end() - 1))].push_back(static_cast<int>(i));
  }
  return encode(kids, static_cast<int>(tree.root()));
}

std::vector<Model> enumerate_trees(std::size_t n, Mode mode) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "trees need at least one node");
  if (n > kMaxTreeWorlds)
    throw Error(ErrorCode::bound_exceeded,
                "tree enumeration is capped at " + std::to_string(kMaxTreeWorlds) + " nodes");
  std::vector<Model> out;
  for (const std::string& code : tree_codes(n)) {
    std::vector<Word> words;
    Word prefix;
    decode_words(code, prefix, words);
    out.push_back(Model::tree(std::move(words), mode));
  }
  return out;
}

std::vector<Model> enumerate_posets(std::size_t n, Mode mode) {
  if (n < 1 || n > kMaxPosetWorlds)
    throw Error(ErrorCode::bound_exceeded,
                "poset enumeration needs 1 <= n <= " + std::to_string(kMaxPosetWorlds));
  // Element 0 is the least element. Every poset on the other elements has a
  // linear extension, so strict relations i < j with i < j numerically suffice.
  const std::size_t m = n - 1;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) pairs.emplace_back(i, j);

  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{1});
  std::set<std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::array<std::array<bool, kMaxPosetWorlds>, kMaxPosetWorlds> le{};
    for (std::size_t i = 0; i < n; ++i) le[0][i] = le[i][i] = true;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) le[pairs[k].first][pairs[k].second] = true;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        for (std::size_t k = 0; k < n && transitive; ++k)
          if (le[i][j] && le[j][k] && !le[i][k]) transitive = false;
    if (!transitive) continue;
    // Canonical code: least row-major bit string over relabellings that fix 0.
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::size_t> p = perm;
    do {
      std::array<std::size_t, kMaxPosetWorlds> to{};
      for (std::size_t i = 0; i < m; ++i) to[p[i]] = i + 1;
      std::uint64_t code = 0;
      std::array<std::array<bool, kMaxPosetWorlds>, kMaxPosetWorlds> q{};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[to[i]][j == 0 ? 0 : to[j]] = le[i][j];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) code = (code << 1) | (q[i][j] ? 1U : 0U);
      best = std::min(best, code);
    } while (std::next_permutation(p.begin(), p.end()));
    seen.insert(best);
  }

  std::vector<Model> out;
  for (std::uint64_t code : seen) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && ((code >> ((n * n - 1) - (i * n + j))) & 1U)) edges.emplace_back(labels[i], labels[j]);
    out.push_back(Model::poset(std::move(labels), edges, mode));
  }
  return out;
}

Model chain(std::size_t k, Mode mode) {
  if (k < 1 || k > kMaxWorlds) throw Error(ErrorCode::bound_exceeded, "chain length out of range");
  std::vector<Word> words;
  for (std::size_t i = 0; i < k; ++i) words.emplace_back(i, 0U);
  return Model::tree(std::move(words), mode);
}

SearchOutcome bounded_validity(const Formula& a, const SearchBounds& b) {
  if (!is_closed(a)) throw Error(ErrorCode::open_formula, "bounded validity needs a closed formula");
  if (b.max_worlds < 1) throw Error(ErrorCode::invalid_argument, "max_worlds must be at least 1");
  if (b.structure_class == StructureClass::finite_posets && b.max_worlds > kMaxPosetWorlds)
    throw Error(ErrorCode::bound_exceeded, "poset search is capped at " + std::to_string(kMaxPosetWorlds) + " worlds");
  if (b.structure_class == StructureClass::finite_trees && b.max_worlds > kMaxTreeWorlds)
    throw Error(ErrorCode::bound_exceeded, "tree search is capped at " + std::to_string(kMaxTreeWorlds) + " worlds");
  const Mode mode = a.language() == Language::modal ? Mode::s4 : Mode::intuitionistic;
  SearchOutcome out;
  out.bounds = b;
  for (std::size_t n = 1; n <= b.max_worlds; ++n) {
    std::vector<Model> structures;
    switch (b.structure_class) {
      case StructureClass::finite_trees: structures = enumerate_trees(n, mode); break;
      case StructureClass::finite_posets: structures = enumerate_posets(n, mode); break;
      case StructureClass::chains: structures.push_back(chain(n, mode)); break;
    }
    for (Model& m : structures) {
      ++out.structures_checked;
      if (!validates(m, a)) {
        out.countermodel = std::move(m);
        return out;
      }
    }
  }
  return out;
}

}  // namespace qpt
