#include "qwit/spec_io.hpp"

#include <cstdio>
#include <fstream>

#include "qwit/error.hpp"

namespace qwit {

using nlohmann::json;

namespace {

template <typename T>
T require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw SchemaError(std::string("witness document is missing \"") + key + "\"");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

WitnessSpec spec_from_json(const json& doc) {
  const auto n = require<std::size_t>(doc, "n");
  const auto k = require<std::size_t>(doc, "k");
  auto edges = require<std::vector<Tuple>>(doc, "edges");
  if (!doc.contains("terms") || !doc.at("terms").is_array()) {
    throw SchemaError("witness document is missing \"terms\" array");
  }

  WitnessSpec spec;
  spec.graph = build_graph(n, k, std::move(edges));
  for (const auto& t : doc.at("terms")) {
    WitnessTerm term;
    const int alpha = t.value("alpha", 1);
    if (alpha != 0 && alpha != 1) throw SchemaError("alpha must be 0 or 1");
    term.active = alpha == 1;
    for (const auto& letter : require<std::vector<std::string>>(t, "letters")) {
      if (letter.size() != 1) throw SchemaError("letter \"" + letter + "\" is not a single character");
      term.letters.push_back(pauli_from_char(letter[0]));
    }
    spec.terms.push_back(std::move(term));
  }
  validate(spec);
  return spec;
}

json spec_to_json(const WitnessSpec& spec) {
  json terms = json::array();
  for (const auto& t : spec.terms) {
    json letters = json::array();
    for (Pauli p : t.letters) letters.push_back(std::string(1, to_char(p)));
    terms.push_back({{"alpha", t.active ? 1 : 0}, {"letters", letters}});
  }
  return {{"n", spec.graph.num_nodes()},
          {"k", spec.graph.arity()},
          {"edges", spec.graph.edges()},
          {"terms", terms}};
}

WitnessSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open witness spec " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
  return spec_from_json(doc);
}

json observable_to_json(const Observable& obs) {
  json terms = json::array();
  for (const auto& t : obs.terms()) {
    terms.push_back({{"coefficient", t.coefficient}, {"pauli", t.pauli.str()}});
  }
  return {{"n_qubits", obs.num_qubits()}, {"terms", terms}};
}

std::string spec_hash(const WitnessSpec& spec) {
  const std::string canon = spec_to_json(spec).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qwit
