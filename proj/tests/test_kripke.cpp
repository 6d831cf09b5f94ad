#include "doctest.h"
#include "generators.hpp"
#include "qptree/search.hpp"
#include "qptree/suite.hpp"
#include "util.hpp"

using namespace qpt;
using namespace qpt::testing;

namespace {

std::vector<WorldSet> brute_upsets(const Model& m) {
  std::vector<WorldSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m.size()); ++b)
    if (naive_upset(m, b)) out.emplace_back(b);
  return out;
}

WorldSet labels(const Model& m, std::initializer_list<const char*> names) {
  WorldSet s;
  for (const char* n : names) s.insert(m.index_of(std::string(n)));
  return s;
}

}  // namespace

TEST_CASE("load: single world and diamond") {
  auto one = load_model(R"({"kind":"tree","worlds":[[]],"valuation":{},"mode":"int"})");
  CHECK(one.size() == 1);
  CHECK(one.kind() == ModelKind::tree);
  auto d = load_model(R"({"kind":"poset","worlds":["g","a","b","t"],
      "edges":[["g","a"],["g","b"],["a","t"],["b","t"]],"valuation":{},"mode":"int"})");
  CHECK(d.size() == 4);
  CHECK(d.world(d.root()) == NodeId(std::string("g")));
  CHECK(d == suite::diamond());
  CHECK(d.le(d.index_of(std::string("g")), d.index_of(std::string("t"))));
  CHECK(load_model(dump_model(d)) == d);
}

TEST_CASE("load: errors") {
  CHECK(error_of([] { load_model(R"({"kind":"poset","worlds":["a","b"],"edges":[["a","b"],["b","a"]],"mode":"int"})"); }) ==
        ErrorCode::not_partial_order);
  CHECK(error_of([] { load_model(R"({"kind":"poset","worlds":["a","b"],"edges":[],"mode":"int"})"); }) ==
        ErrorCode::no_least_element);
  CHECK(error_of([] { load_model(R"({"kind":"tree","worlds":[[],[0,1]],"mode":"int"})"); }) ==
        ErrorCode::tree_not_prefix_closed);
  CHECK(error_of([] {
          load_model(R"({"kind":"tree","worlds":[[],[0]],"valuation":{"p":[[]]},"mode":"int"})");
        }) == ErrorCode::valuation_not_proposition);
  CHECK(error_of([] { load_model("{not json"); }) == ErrorCode::model_parse);
  CHECK(error_of([] { load_model(R"({"kind":"tree","worlds":[[]],"valuation":{"p":[[3]]},"mode":"int"})"); }) ==
        ErrorCode::unknown_world);
  // s4 accepts any subset
  auto s4 = load_model(R"({"kind":"tree","worlds":[[],[0]],"valuation":{"p":[[]]},"mode":"s4"})");
  CHECK(s4.valuation().at("p") == WorldSet::single(0));
}

TEST_CASE("upsets: documented examples") {
  auto c2 = chain(2);
  CHECK(enumerate_upsets(c2) == std::vector<WorldSet>{WorldSet(0), WorldSet(2), WorldSet(3)});
  auto d = suite::diamond();
  const std::vector<WorldSet> expected = {WorldSet(), labels(d, {"t"}), labels(d, {"a", "t"}), labels(d, {"b", "t"}),
                                          labels(d, {"a", "b", "t"}), d.all()};
  auto got = enumerate_upsets(d);
  std::sort(got.begin(), got.end());
  auto sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  CHECK(got == sorted);
  CHECK(enumerate_upsets(chain(1)).size() == 2);
  CHECK(enumerate_subsets(chain(1)).size() == 2);
  CHECK(enumerate_subsets(c2).size() == 4);
  CHECK(enumerate_subsets(d).size() == 16);
}

TEST_CASE("upsets: chains have n + 1") {
  for (std::size_t n = 1; n <= 12; ++n) CHECK(enumerate_upsets(chain(n)).size() == n + 1);
}

TEST_CASE("upsets: agree with a powerset filter") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto m = random_model(rng, 6, Mode::intuitionistic);
    auto fast = enumerate_upsets(m);
    CHECK(std::is_sorted(fast.begin(), fast.end()));
    CHECK(fast == brute_upsets(m));
    for (auto s : fast) CHECK(upward_closure(m, s) == s);
  }
}

TEST_CASE("upward closure") {
  auto d = suite::diamond();
  CHECK(upward_closure(d, labels(d, {"a"})) == labels(d, {"a", "t"}));
  CHECK(upward_closure(d, WorldSet()) == WorldSet());
  CHECK(upward_closure(d, d.all()) == d.all());
  CHECK(error_of([&] { upward_closure(d, WorldSet::single(9)); }) == ErrorCode::unknown_world);
}

TEST_CASE("loaded int valuations are closure fixed points; loading is deterministic") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto m = with_random_valuation(rng, random_model(rng, 6, Mode::intuitionistic));
    const auto text = dump_model(m);
    auto a = load_model(text);
    auto b = load_model(text);
    CHECK(a == b);
    CHECK(a == m);
    for (const auto& [p, s] : a.valuation()) CHECK(upward_closure(a, s) == s);
  }
}

TEST_CASE("world sorting and ids") {
  auto t = Model::tree({{}, {1}, {0}, {0, 0}}, Mode::intuitionistic);
  CHECK(t.world(0) == NodeId(Word{}));
  CHECK(t.world(1) == NodeId(Word{0}));
  CHECK(t.world(2) == NodeId(Word{0, 0}));
  CHECK(t.world(3) == NodeId(Word{1}));
  CHECK(t.leaves() == WorldSet(0b1100));
  CHECK(to_string(t.world(2)) == "[0,0]");
  CHECK(dump_worlds(t, t.leaves()) == "[[0,0],[1]]");
}
