#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qptree/error.hpp"
#include "qptree/kripke.hpp"

namespace qpt {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::model_parse, msg); }

Word to_word(const json& j) {
  if (!j.is_array()) bad("tree worlds must be arrays of naturals, got " + j.dump());
  Word w;
  for (const json& x : j) {
    if (!x.is_number_unsigned()) bad("tree word entries must be naturals, got " + j.dump());
    w.push_back(x.get<std::uint32_t>());
  }
  return w;
}

std::string to_label(const json& j) {
  if (!j.is_string()) bad("poset worlds must be strings, got " + j.dump());
  return j.get<std::string>();
}

Mode to_mode(const json& root) {
  if (!root.contains("mode")) return Mode::intuitionistic;
  const json& m = root["mode"];
  if (m == "int") return Mode::intuitionistic;
  if (m == "s4") return Mode::s4;
  bad("mode must be \"int\" or \"s4\", got " + m.dump());
}

template <class T, class F>
std::map<std::string, std::vector<T>> read_valuation(const json& root, F convert) {
  std::map<std::string, std::vector<T>> out;
  if (!root.contains("valuation")) return out;
  const json& v = root["valuation"];
  if (!v.is_object()) bad("valuation must be an object");
  for (const auto& [var, ws] : v.items()) {
    if (!ws.is_array()) bad("valuation of '" + var + "' must be an array");
    auto& dst = out[var];
    for (const json& w : ws) dst.push_back(convert(w));
  }
  return out;
}

json world_json(const NodeId& id) {
  if (const auto* w = std::get_if<Word>(&id)) return json(*w);
  return json(std::get<std::string>(id));
}

}  // namespace

Model load_model(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) bad("model file must be a JSON object");
  if (!root.contains("kind")) bad("missing \"kind\"");
  if (!root.contains("worlds") || !root["worlds"].is_array()) bad("missing \"worlds\" array");
  const Mode mode = to_mode(root);
  const json& kind = root["kind"];

  if (kind == "tree") {
    std::vector<Word> words;
    for (const json& w : root["worlds"]) words.push_back(to_word(w));
    return Model::tree(std::move(words), mode, read_valuation<Word>(root, to_word));
  }
  if (kind == "poset") {
    std::vector<std::string> labels;
    for (const json& w : root["worlds"]) labels.push_back(to_label(w));
    std::vector<std::pair<std::string, std::string>> edges;
    if (root.contains("edges")) {
      if (!root["edges"].is_array()) bad("\"edges\" must be an array");
      for (const json& e : root["edges"]) {
        if (!e.is_array() || e.size() != 2) bad("each edge must be a pair, got " + e.dump());
        edges.emplace_back(to_label(e[0]), to_label(e[1]));
      }
    }
    return Model::poset(std::move(labels), edges, mode,
                        read_valuation<std::string>(root, to_label));
  }
  bad("kind must be \"tree\" or \"poset\", got " + kind.dump());
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open model file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model(ss.str());
}

std::string dump_worlds(const Model& m, WorldSet s) {
  json out = json::array();
  for (std::size_t i : s.members()) out.push_back(world_json(m.world(i)));
  return out.dump();
}

std::string dump_model(const Model& m) {
  nlohmann::ordered_json out;
  out["kind"] = to_string(m.kind());
  json worlds = json::array();
  for (const NodeId& w : m.worlds()) worlds.push_back(world_json(w));
  out["worlds"] = worlds;
  if (m.kind() == ModelKind::poset) {
    // Covering pairs only; the loader closes them again.
    json edges = json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j : (m.up(i) - WorldSet::single(i)).members()) {
        bool covering = true;
        for (std::size_t k : (m.up(i) - WorldSet::single(i)).members())
          if (k != j && m.le(k, j)) covering = false;
        if (covering) edges.push_back(json::array({world_json(m.world(i)), world_json(m.world(j))}));
      }
    out["edges"] = edges;
  }
  json val = json::object();
  for (const auto& [var, s] : m.valuation()) val[var] = json::parse(dump_worlds(m, s));
  out["valuation"] = val;
  out["mode"] = to_string(m.mode());
  return out.dump();
}

}  // namespace qpt
