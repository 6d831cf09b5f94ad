// Command-line front end. Talks to the library only through the C API.
//
// Exit status: 0 success, 1 refutation or countermodel found, 2 usage or
// input error. Output is line-oriented "KEY: value".

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qptree/qptree.h"

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kInputError = 2;

struct FormulaDeleter {
  void operator()(qpt_formula* f) const { qpt_formula_free(f); }
};
struct ModelDeleter {
  void operator()(qpt_model* m) const { qpt_model_free(m); }
};
struct StringDeleter {
  void operator()(char* s) const { qpt_string_free(s); }
};
using FormulaHandle = std::unique_ptr<qpt_formula, FormulaDeleter>;
using ModelHandle = std::unique_ptr<qpt_model, ModelDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct Failure {
  qpt_status status;
  std::string message;
};

void check(qpt_status s) {
  if (s != QPT_OK) throw Failure{s, qpt_last_error()};
}

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string print(const qpt_formula* f) {
  char* out = nullptr;
  check(qpt_formula_print(f, &out));
  return take(out);
}

struct FormulaSource {
  std::string inline_text;
  std::string file;

  std::string text() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Failure{QPT_ERR_IO, "cannot open formula file '" + file + "'"};
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
    return inline_text;
  }

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("-f,--formula", inline_text, "Formula text");
    auto* b = cmd->add_option("--formula-file", file, "File holding the formula");
    a->excludes(b);
    b->excludes(a);
  }

  bool given() const { return !inline_text.empty() || !file.empty(); }
};

FormulaHandle parse(const FormulaSource& src, qpt_language lang) {
  if (!src.given()) throw Failure{QPT_ERR_INVALID_ARGUMENT, "a formula is required (--formula or --formula-file)"};
  qpt_formula* f = nullptr;
  check(qpt_formula_parse(src.text().c_str(), lang, &f));
  return FormulaHandle(f);
}

qpt_language language_of(const std::string& mode) {
  if (mode == "int") return QPT_LANG_INTUITIONISTIC;
  if (mode == "s4") return QPT_LANG_MODAL;
  throw Failure{QPT_ERR_INVALID_ARGUMENT, "mode must be int or s4"};
}

const char* yes_no(int b) { return b ? "true" : "false"; }

int run_check(const std::string& model_path, const FormulaSource& src, const std::string& world) {
  qpt_model* raw = nullptr;
  check(qpt_model_load_file(model_path.c_str(), &raw));
  ModelHandle model(raw);
  qpt_mode mode{};
  check(qpt_model_mode(model.get(), &mode));
  auto f = parse(src, mode == QPT_MODE_S4 ? QPT_LANG_MODAL : QPT_LANG_INTUITIONISTIC);

  char* ext = nullptr;
  check(qpt_extension(model.get(), f.get(), &ext));
  std::string at = world;
  if (at.empty()) {
    char* root = nullptr;
    check(qpt_model_root(model.get(), &root));
    at = take(root);
  }
  int forced = 0;
  check(qpt_forces(model.get(), at.c_str(), f.get(), &forced));

  std::cout << "MODE: " << (mode == QPT_MODE_S4 ? "s4" : "int") << "\n"
            << "FORMULA: " << print(f.get()) << "\n"
            << "EXTENSION: " << take(ext) << "\n"
            << "WORLD: " << at << "\n"
            << "VERDICT: " << yes_no(forced) << "\n";
  return forced ? kOk : kRefuted;
}

int run_decide(const FormulaSource& src, const std::string& cls, std::size_t max, const std::string& mode) {
  auto f = parse(src, language_of(mode));
  qpt_model* raw = nullptr;
  std::size_t checked = 0;
  check(qpt_decide(f.get(), cls.c_str(), max, &raw, &checked));
  ModelHandle counter(raw);
  std::cout << "FORMULA: " << print(f.get()) << "\n"
            << "CLASS: " << cls << "\n"
            << "MAX-WORLDS: " << max << "\n"
            << "CHECKED: " << checked << "\n";
  if (!counter) {
    std::cout << "OUTCOME: no-counterexample-up-to " << max << "\n";
    return kOk;
  }
  char* dump = nullptr;
  check(qpt_model_dump(counter.get(), &dump));
  std::cout << "OUTCOME: countermodel\n"
            << "COUNTERMODEL: " << take(dump) << "\n";
  return kRefuted;
}

int run_translate(const FormulaSource& src, const std::string& cls) {
  const bool modal = cls.rfind("s4t", 0) == 0;
  auto f = parse(src, modal ? QPT_LANG_MODAL : QPT_LANG_INTUITIONISTIC);
  char* psi = nullptr;
  check(qpt_translate(f.get(), cls.c_str(), &psi));
  std::cout << "FORMULA: " << print(f.get()) << "\n"
            << "CLASS: " << cls << "\n";
  if (cls == "qpHt-omega") std::cout << "EVALUATION: emit-only\n";
  std::cout << "PSI: " << take(psi) << "\n";
  return kOk;
}

int run_embed(const FormulaSource& src) {
  auto f = parse(src, QPT_LANG_INTUITIONISTIC);
  qpt_formula* raw = nullptr;
  check(qpt_formula_embed(f.get(), &raw));
  FormulaHandle image(raw);
  std::cout << "FORMULA: " << print(f.get()) << "\n"
            << "EMBEDDED: " << print(image.get()) << "\n";
  return kOk;
}

int run_godel(const FormulaSource& src, const std::string& values, const std::optional<std::string>& valuation) {
  auto f = parse(src, QPT_LANG_INTUITIONISTIC);
  std::cout << "FORMULA: " << print(f.get()) << "\n"
            << "VALUES: " << values << "\n";
  if (valuation) {
    char* value = nullptr;
    check(qpt_godel_eval(f.get(), values.c_str(), valuation->c_str(), &value));
    std::cout << "VALUE: " << take(value) << "\n";
    return kOk;
  }
  int taut = 0;
  char* least = nullptr;
  char* witness = nullptr;
  check(qpt_godel_tautology(f.get(), values.c_str(), &taut, &least, &witness));
  std::cout << "LEAST: " << take(least) << "\n"
            << "WITNESS: " << take(witness) << "\n"
            << "TAUTOLOGY: " << yes_no(taut) << "\n";
  return taut ? kOk : kRefuted;
}

int run_examples() {
  char* report = nullptr;
  int all = 0;
  check(qpt_run_examples(&report, &all));
  std::cout << take(report) << "RESULT: " << (all ? "pass" : "fail") << "\n";
  return all ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantified propositional intuitionistic logic and S4 on trees"};
  app.require_subcommand(1);

  FormulaSource formula;

  auto* check_cmd = app.add_subcommand("check", "Extension of a formula in a model and its truth at a world");
  std::string model_path, world;
  check_cmd->add_option("-m,--model", model_path, "Model file (JSON)")->required();
  check_cmd->add_option("-w,--world", world, "World, e.g. [0,1] or '\"a\"' (default: root)");
  formula.attach(check_cmd);

  auto* decide_cmd = app.add_subcommand("decide", "Bounded countermodel search");
  std::string structure = "finite-trees";
  std::size_t max_worlds = 0;
  std::string mode = "int";
  formula.attach(decide_cmd);
  decide_cmd->add_option("-c,--class", structure, "finite-trees, finite-posets or chains");
  decide_cmd->add_option("--max", max_worlds, "Largest number of worlds")->required();
  decide_cmd->add_option("--mode", mode, "int or s4 (language of the formula)");

  auto* translate_cmd = app.add_subcommand("translate", "Emit the monadic second-order sentence");
  std::string logic_class;
  formula.attach(translate_cmd);
  translate_cmd->add_option("-c,--class", logic_class,
                            "qpHt, qpHt-<n>, qpHt-fin, qpHt-omega, s4t, s4t-<n>, s4t-fin")
      ->required();

  auto* embed_cmd = app.add_subcommand("embed", "T-embedding into S4");
  formula.attach(embed_cmd);

  auto* godel_cmd = app.add_subcommand("godel", "Goedel-Dummett evaluation over a finite truth-value set");
  std::string values;
  std::string valuation;
  formula.attach(godel_cmd);
  godel_cmd->add_option("--values", values, "Comma-separated truth values, e.g. 0,1/2,1")->required();
  auto* valuation_opt = godel_cmd->add_option("--valuation", valuation, "e.g. p=1/2,q=1");

  auto* examples_cmd = app.add_subcommand("examples", "Rerun the packaged separation examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check_cmd) return run_check(model_path, formula, world);
    if (*decide_cmd) return run_decide(formula, structure, max_worlds, mode);
    if (*translate_cmd) return run_translate(formula, logic_class);
    if (*embed_cmd) return run_embed(formula);
    if (*godel_cmd)
      return run_godel(formula, values, *valuation_opt ? std::optional<std::string>(valuation) : std::nullopt);
    if (*examples_cmd) return run_examples();
  } catch (const Failure& f) {
    std::cerr << "ERROR: " << qpt_status_name(f.status) << ": " << f.message << "\n";
    return kInputError;
  }
  return kInputError;
}
