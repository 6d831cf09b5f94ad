#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "qptree/qptree.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qpt_string_free(s);
  return out;
}

qpt_formula* parse(const char* text, qpt_language lang = QPT_LANG_INTUITIONISTIC) {
  qpt_formula* f = nullptr;
  REQUIRE(qpt_formula_parse(text, lang, &f) == QPT_OK);
  return f;
}

const char* kDiamond =
    R"({"kind":"poset","worlds":["g","a","b","t"],"edges":[["g","a"],["g","b"],["a","t"],["b","t"]],"mode":"int"})";

}  // namespace

TEST_CASE("formulas") {
  qpt_formula* f = parse("forall p (p | ~p) & q");
  char* s = nullptr;
  CHECK(qpt_formula_print(f, &s) == QPT_OK);
  CHECK(take(s) == "forall p (p | ~p) & q");
  CHECK(qpt_formula_free_vars(f, &s) == QPT_OK);
  CHECK(take(s) == "q");
  qpt_formula* e = nullptr;
  CHECK(qpt_formula_embed(f, &e) == QPT_OK);
  qpt_language lang{};
  CHECK(qpt_formula_language(e, &lang) == QPT_OK);
  CHECK(lang == QPT_LANG_MODAL);
  CHECK(qpt_formula_print(e, &s) == QPT_OK);
  CHECK(take(s) == "forall p (box p | box (box p -> box bot)) & box q");
  qpt_formula_free(e);
  qpt_formula_free(f);

  qpt_formula* bad = nullptr;
  CHECK(qpt_formula_parse("p & & q", QPT_LANG_INTUITIONISTIC, &bad) == QPT_ERR_SYNTAX);
  CHECK(bad == nullptr);
  CHECK(qpt_last_error_offset() == 4);
  CHECK(std::string(qpt_last_error()).size() > 0);
  CHECK(std::string(qpt_status_name(QPT_ERR_SYNTAX)) == "syntax-error");
  CHECK(qpt_formula_parse("box p", QPT_LANG_INTUITIONISTIC, &bad) == QPT_ERR_LANGUAGE);
  CHECK(qpt_formula_parse(nullptr, QPT_LANG_INTUITIONISTIC, &bad) == QPT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("models and semantics") {
  qpt_model* m = nullptr;
  REQUIRE(qpt_model_load(kDiamond, &m) == QPT_OK);
  size_t n = 0;
  CHECK(qpt_model_world_count(m, &n) == QPT_OK);
  CHECK(n == 4);
  char* s = nullptr;
  CHECK(qpt_model_root(m, &s) == QPT_OK);
  CHECK(take(s) == "\"g\"");
  qpt_formula* b = parse("forall p (p | ~p)");
  CHECK(qpt_extension(m, b, &s) == QPT_OK);
  CHECK(take(s) == "[\"t\"]");
  int out = -1;
  CHECK(qpt_forces(m, "\"t\"", b, &out) == QPT_OK);
  CHECK(out == 1);
  CHECK(qpt_forces(m, "\"zz\"", b, &out) == QPT_ERR_UNKNOWN_WORLD);
  qpt_formula* a = parse("forall p (~p | ~~p) -> forall p forall q ((p -> q) | (q -> p))");
  CHECK(qpt_validates(m, a, &out) == QPT_OK);
  CHECK(out == 0);
  int l = -1, r = -1;
  CHECK(qpt_embedding_pair(m, a, &l, &r) == QPT_OK);
  CHECK(l == 0);
  CHECK(r == 0);

  CHECK(qpt_model_set_mode(m, QPT_MODE_S4) == QPT_OK);
  qpt_mode mode{};
  CHECK(qpt_model_mode(m, &mode) == QPT_OK);
  CHECK(mode == QPT_MODE_S4);
  CHECK(qpt_validates(m, a, &out) == QPT_ERR_LANGUAGE);
  CHECK(qpt_model_box_closure(m) == QPT_OK);
  CHECK(qpt_model_dump(m, &s) == QPT_OK);
  CHECK(take(s).find("\"mode\":\"s4\"") != std::string::npos);
  qpt_formula_free(a);
  qpt_formula_free(b);
  qpt_model_free(m);

  CHECK(qpt_model_load(R"({"kind":"poset","worlds":["a","b"],"edges":[["a","b"],["b","a"]],"mode":"int"})", &m) ==
        QPT_ERR_NOT_PARTIAL_ORDER);
  CHECK(qpt_model_load_file(QPT_TEST_DATA "/diamond.json", &m) == QPT_OK);
  qpt_model_free(m);
  CHECK(qpt_model_load_file(QPT_TEST_DATA "/missing.json", &m) == QPT_ERR_IO);
}

TEST_CASE("search, translation, goedel, examples") {
  qpt_formula* a = parse("forall p (~p | ~~p) -> forall p forall q ((p -> q) | (q -> p))");
  qpt_model* cm = nullptr;
  size_t checked = 0;
  CHECK(qpt_decide(a, "finite-posets", 4, &cm, &checked) == QPT_OK);
  REQUIRE(cm != nullptr);
  size_t n = 0;
  CHECK(qpt_model_world_count(cm, &n) == QPT_OK);
  CHECK(n == 4);
  CHECK(checked > 0);
  qpt_model_free(cm);
  CHECK(qpt_decide(a, "finite-trees", 5, &cm, &checked) == QPT_OK);
  CHECK(cm == nullptr);
  CHECK(qpt_decide(a, "lattices", 5, &cm, &checked) == QPT_ERR_INVALID_ARGUMENT);

  char* s = nullptr;
  qpt_formula* bot = parse("bot");
  CHECK(qpt_translate(bot, "qpHt-omega", &s) == QPT_OK);
  CHECK(take(s) == "all2 T: ((all1 z: z in T) => false)");
  qpt_formula* p = parse("p");
  CHECK(qpt_translate_step(p, &s) == QPT_OK);
  CHECK(take(s) == "x in X_p");
  CHECK(qpt_translate(p, "qpHt", &s) == QPT_ERR_OPEN_FORMULA);

  qpt_model* d = nullptr;
  REQUIRE(qpt_model_load(R"({"kind":"tree","worlds":[[],[0],[1]],"mode":"int"})", &d) == QPT_OK);
  int out = -1;
  CHECK(qpt_translate_eval(a, "qpHt-fin", d, &out) == QPT_OK);
  CHECK(out == 1);
  qpt_formula* nb = parse("~forall p (p | ~p)");
  CHECK(qpt_translate_eval(nb, "qpHt", d, &out) == QPT_OK);
  CHECK(out == 0);
  CHECK(qpt_translate_eval(a, "qpHt-omega", d, &out) == QPT_ERR_INVALID_ARGUMENT);
  qpt_model_free(d);

  qpt_formula* b = parse("forall p (p | ~p)");
  int taut = -1;
  char* least = nullptr;
  char* witness = nullptr;
  CHECK(qpt_godel_tautology(b, "0,1/2,1", &taut, &least, &witness) == QPT_OK);
  CHECK(taut == 0);
  CHECK(take(least) == "1/2");
  take(witness);
  qpt_formula* imp = parse("p -> q");
  CHECK(qpt_godel_eval(imp, "0,1/2,1", "p=1/2,q=1", &s) == QPT_OK);
  CHECK(take(s) == "1");
  int k = -1, g = -1;
  CHECK(qpt_chain_correspondence(b, 2, &k, &g) == QPT_OK);
  CHECK(k == 0);
  CHECK(g == 0);

  int all = 0;
  CHECK(qpt_run_examples(&s, &all) == QPT_OK);
  CHECK(all == 1);
  CHECK(take(s).find("FAIL") == std::string::npos);

  for (auto* f : {a, bot, p, nb, b, imp}) qpt_formula_free(f);
}
