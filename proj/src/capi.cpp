#include <cstdlib>
#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "qptree/embedding.hpp"
#include "qptree/error.hpp"
#include "qptree/godel.hpp"
#include "qptree/mso.hpp"
#include "qptree/qptree.h"
#include "qptree/search.hpp"
#include "qptree/semantics.hpp"
#include "qptree/suite.hpp"

struct qpt_formula {
  qpt::Formula value;
};

struct qpt_model {
  qpt::Model value;
};

namespace {

thread_local std::string g_error;
thread_local long g_offset = -1;

qpt_status to_status(qpt::ErrorCode c) {
  using qpt::ErrorCode;
  switch (c) {
    case ErrorCode::syntax: return QPT_ERR_SYNTAX;
    case ErrorCode::language: return QPT_ERR_LANGUAGE;
    case ErrorCode::model_parse: return QPT_ERR_MODEL_PARSE;
    case ErrorCode::no_least_element: return QPT_ERR_NO_LEAST_ELEMENT;
    case ErrorCode::not_partial_order: return QPT_ERR_NOT_PARTIAL_ORDER;
    case ErrorCode::valuation_not_proposition: return QPT_ERR_VALUATION_NOT_PROPOSITION;
    case ErrorCode::tree_not_prefix_closed: return QPT_ERR_TREE_NOT_PREFIX_CLOSED;
    case ErrorCode::unknown_world: return QPT_ERR_UNKNOWN_WORLD;
    case ErrorCode::unbound_variable: return QPT_ERR_UNBOUND_VARIABLE;
    case ErrorCode::open_formula: return QPT_ERR_OPEN_FORMULA;
    case ErrorCode::mode_mismatch: return QPT_ERR_MODE_MISMATCH;
    case ErrorCode::bound_exceeded: return QPT_ERR_BOUND_EXCEEDED;
    case ErrorCode::invalid_argument: return QPT_ERR_INVALID_ARGUMENT;
    case ErrorCode::io: return QPT_ERR_IO;
  }
  return QPT_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
qpt_status guarded(F&& body) {
  g_error.clear();
  g_offset = -1;
  try {
    body();
    return QPT_OK;
  } catch (const qpt::Error& e) {
    g_error = e.what();
    if (e.offset()) g_offset = static_cast<long>(*e.offset());
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_error = e.what();
    return QPT_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw qpt::Error(qpt::ErrorCode::invalid_argument, std::string("null ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qpt::Language to_language(qpt_language l) {
  return l == QPT_LANG_MODAL ? qpt::Language::modal : qpt::Language::intuitionistic;
}

qpt::Mode to_mode(qpt_mode m) { return m == QPT_MODE_S4 ? qpt::Mode::s4 : qpt::Mode::intuitionistic; }

qpt::NodeId parse_world(const char* text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw qpt::Error(qpt::ErrorCode::unknown_world, std::string("bad world '") + text + "'");
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    qpt::Word w;
    for (const auto& x : j) {
      if (!x.is_number_unsigned()) throw qpt::Error(qpt::ErrorCode::unknown_world, std::string("bad world '") + text + "'");
      w.push_back(x.get<std::uint32_t>());
    }
    return w;
  }
  throw qpt::Error(qpt::ErrorCode::unknown_world, std::string("bad world '") + text + "'");
}

}  // namespace

extern "C" {

const char* qpt_last_error(void) { return g_error.c_str(); }
long qpt_last_error_offset(void) { return g_offset; }
void qpt_string_free(char* s) { std::free(s); }

const char* qpt_status_name(qpt_status status) {
  switch (status) {
    case QPT_OK: return "ok";
    case QPT_ERR_SYNTAX: return "syntax-error";
    case QPT_ERR_LANGUAGE: return "language-violation";
    case QPT_ERR_MODEL_PARSE: return "parse-error";
    case QPT_ERR_NO_LEAST_ELEMENT: return "no-least-element";
    case QPT_ERR_NOT_PARTIAL_ORDER: return "not-a-partial-order";
    case QPT_ERR_VALUATION_NOT_PROPOSITION: return "valuation-not-a-proposition";
    case QPT_ERR_TREE_NOT_PREFIX_CLOSED: return "tree-not-prefix-closed";
    case QPT_ERR_UNKNOWN_WORLD: return "unknown-world";
    case QPT_ERR_UNBOUND_VARIABLE: return "unbound-variable";
    case QPT_ERR_OPEN_FORMULA: return "open-formula";
    case QPT_ERR_MODE_MISMATCH: return "mode-mismatch";
    case QPT_ERR_BOUND_EXCEEDED: return "bound-exceeded";
    case QPT_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case QPT_ERR_IO: return "io-error";
    case QPT_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

qpt_status qpt_formula_parse(const char* text, qpt_language lang, qpt_formula** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new qpt_formula{qpt::parse_formula(text, to_language(lang))};
  });
}

void qpt_formula_free(qpt_formula* f) { delete f; }

qpt_status qpt_formula_print(const qpt_formula* f, char** out) {
  return guarded([&] {
    require(f, "formula");
    require(out, "output");
    *out = dup(qpt::print_formula(f->value));
  });
}

qpt_status qpt_formula_language(const qpt_formula* f, qpt_language* out) {
  return guarded([&] {
    require(f, "formula");
    require(out, "output");
    *out = f->value.language() == qpt::Language::modal ? QPT_LANG_MODAL : QPT_LANG_INTUITIONISTIC;
  });
}

qpt_status qpt_formula_free_vars(const qpt_formula* f, char** out) {
  return guarded([&] {
    require(f, "formula");
    require(out, "output");
    std::string s;
    for (const auto& v : qpt::free_vars(f->value)) {
      if (!s.empty()) s += ',';
      s += v;
    }
    *out = dup(s);
  });
}

qpt_status qpt_formula_embed(const qpt_formula* f, qpt_formula** out) {
  return guarded([&] {
    require(f, "formula");
    require(out, "output");
    *out = new qpt_formula{qpt::t_embed(f->value)};
  });
}

qpt_status qpt_model_load(const char* json, qpt_model** out) {
  return guarded([&] {
    require(json, "text");
    require(out, "output");
    *out = new qpt_model{qpt::load_model(json)};
  });
}

qpt_status qpt_model_load_file(const char* path, qpt_model** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new qpt_model{qpt::load_model_file(path)};
  });
}

void qpt_model_free(qpt_model* m) { delete m; }

qpt_status qpt_model_dump(const qpt_model* m, char** out) {
  return guarded([&] {
    require(m, "model");
    require(out, "output");
    *out = dup(qpt::dump_model(m->value));
  });
}

qpt_status qpt_model_mode(const qpt_model* m, qpt_mode* out) {
  return guarded([&] {
    require(m, "model");
    require(out, "output");
    *out = m->value.mode() == qpt::Mode::s4 ? QPT_MODE_S4 : QPT_MODE_INT;
  });
}

qpt_status qpt_model_world_count(const qpt_model* m, size_t* out) {
  return guarded([&] {
    require(m, "model");
    require(out, "output");
    *out = m->value.size();
  });
}

qpt_status qpt_model_root(const qpt_model* m, char** out) {
  return guarded([&] {
    require(m, "model");
    require(out, "output");
    *out = dup(qpt::to_string(m->value.world(m->value.root())));
  });
}

qpt_status qpt_model_set_mode(qpt_model* m, qpt_mode mode) {
  return guarded([&] {
    require(m, "model");
    m->value = m->value.with_mode(to_mode(mode));
  });
}

qpt_status qpt_model_box_closure(qpt_model* m) {
  return guarded([&] {
    require(m, "model");
    m->value = qpt::box_closure_valuation(m->value);
  });
}

qpt_status qpt_extension(const qpt_model* m, const qpt_formula* f, char** worlds_json) {
  return guarded([&] {
    require(m, "model");
    require(f, "formula");
    require(worlds_json, "output");
    *worlds_json = dup(qpt::dump_worlds(m->value, qpt::extension(m->value, f->value).worlds));
  });
}

qpt_status qpt_forces(const qpt_model* m, const char* world_json, const qpt_formula* f, int* out) {
  return guarded([&] {
    require(m, "model");
    require(world_json, "world");
    require(f, "formula");
    require(out, "output");
    const std::size_t w = m->value.index_of(parse_world(world_json));
    *out = qpt::extension(m->value, f->value).worlds.contains(w) ? 1 : 0;
  });
}

qpt_status qpt_validates(const qpt_model* m, const qpt_formula* f, int* out) {
  return guarded([&] {
    require(m, "model");
    require(f, "formula");
    require(out, "output");
    *out = qpt::validates(m->value, f->value) ? 1 : 0;
  });
}

qpt_status qpt_embedding_pair(const qpt_model* m, const qpt_formula* f, int* intuitionistic,
                              int* modal) {
  return guarded([&] {
    require(m, "model");
    require(f, "formula");
    require(intuitionistic, "output");
    require(modal, "output");
    const auto [a, b] = qpt::check_embedding_pair(m->value, f->value);
    *intuitionistic = a ? 1 : 0;
    *modal = b ? 1 : 0;
  });
}

qpt_status qpt_decide(const qpt_formula* f, const char* structure_class, size_t max_worlds,
                      qpt_model** countermodel, size_t* structures_checked) {
  return guarded([&] {
    require(f, "formula");
    require(structure_class, "structure class");
    require(countermodel, "output");
    *countermodel = nullptr;
    const qpt::SearchBounds b{max_worlds, qpt::parse_structure_class(structure_class)};
    qpt::SearchOutcome r = qpt::bounded_validity(f->value, b);
    if (structures_checked) *structures_checked = r.structures_checked;
    if (r.countermodel) *countermodel = new qpt_model{std::move(*r.countermodel)};
  });
}

qpt_status qpt_translate(const qpt_formula* f, const char* logic_class, char** out) {
  return guarded([&] {
    require(f, "formula");
    require(logic_class, "logic class");
    require(out, "output");
    const auto cls = qpt::mso::parse_logic_class(logic_class);
    *out = dup(qpt::mso::emit(*qpt::mso::build_psi(f->value, cls)));
  });
}

qpt_status qpt_translate_step(const qpt_formula* f, char** out) {
  return guarded([&] {
    require(f, "formula");
    require(out, "output");
    const auto mode = f->value.language() == qpt::Language::modal ? qpt::mso::TranslationMode::s4
                                                                    : qpt::mso::TranslationMode::intuitionistic;
    *out = dup(qpt::mso::emit(*qpt::mso::translate_step(f->value, qpt::mso::Term::of("x"), mode)));
  });
}

qpt_status qpt_translate_eval(const qpt_formula* f, const char* logic_class, const qpt_model* domain,
                              int* out) {
  return guarded([&] {
    require(f, "formula");
    require(logic_class, "logic class");
    require(domain, "domain");
    require(out, "output");
    const auto cls = qpt::mso::parse_logic_class(logic_class);
    if (cls.emit_only())
      throw qpt::Error(qpt::ErrorCode::invalid_argument,
                       "class " + qpt::mso::to_string(cls) + " is emit-only");
    *out = qpt::mso::eval_finite(*qpt::mso::build_psi(f->value, cls), domain->value, {}) ? 1 : 0;
  });
}

qpt_status qpt_godel_eval(const qpt_formula* f, const char* values, const char* valuation,
                          char** value) {
  return guarded([&] {
    require(f, "formula");
    require(values, "truth values");
    require(valuation, "valuation");
    require(value, "output");
    const auto vs = qpt::godel::TruthValueSet::parse(values);
    *value = dup(qpt::godel::to_string(
        qpt::godel::godel_eval(qpt::godel::parse_valuation(valuation), f->value, vs)));
  });
}

qpt_status qpt_godel_tautology(const qpt_formula* f, const char* values, int* tautology,
                               char** least_value, char** witness) {
  return guarded([&] {
    require(f, "formula");
    require(values, "truth values");
    require(tautology, "output");
    const auto r = qpt::godel::godel_tautology(f->value, qpt::godel::TruthValueSet::parse(values));
    *tautology = r.tautology ? 1 : 0;
    if (least_value) *least_value = dup(qpt::godel::to_string(r.least));
    if (witness) {
      std::string s;
      for (const auto& [var, v] : r.witness) {
        if (!s.empty()) s += ',';
        s += var + "=" + qpt::godel::to_string(v);
      }
      *witness = dup(s);
    }
  });
}

qpt_status qpt_chain_correspondence(const qpt_formula* f, unsigned k, int* kripke, int* godel) {
  return guarded([&] {
    require(f, "formula");
    require(kripke, "output");
    require(godel, "output");
    const auto [a, b] = qpt::godel::chain_correspondence(k, f->value);
    *kripke = a ? 1 : 0;
    *godel = b ? 1 : 0;
  });
}

qpt_status qpt_run_examples(char** report, int* all_pass) {
  return guarded([&] {
    require(report, "output");
    require(all_pass, "output");
    std::string s;
    bool ok = true;
    for (const auto& c : qpt::suite::run_examples()) {
      ok = ok && c.pass;
      s += (c.pass ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
    }
    *report = dup(s);
    *all_pass = ok ? 1 : 0;
  });
}

}  // extern "C"
