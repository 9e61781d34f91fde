#include "common.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "qwit/error.hpp"
#include "qwit/spec_io.hpp"

namespace qwit::cli {

void GraphArgs::add(CLI::App* cmd) {
  cmd->add_option("--family", family, "line, ring, complete, pairs or tuple")
      ->check(CLI::IsMember({"line", "ring", "complete", "pairs", "tuple"}));
  cmd->add_option("--n", n, "Number of qubits")->check(CLI::Range(1, 63));
}

GeneralizedGraph GraphArgs::graph() const { return family_graph(family, n); }

nlohmann::json GraphArgs::echo() const { return {{"family", family}, {"n", n}}; }

GeneralizedGraph family_graph(const std::string& family, std::size_t n) {
  if (family == "line") return line_graph(n);
  if (family == "ring") return ring_graph(n);
  if (family == "complete") return complete_graph(n);
  if (family == "pairs") return disjoint_pairs_graph(n);
  if (family == "tuple") return single_tuple_graph(n);
  throw PreconditionError("unknown graph family " + family);
}

void WitnessArgs::add(CLI::App* cmd) {
  cmd->add_option("--spec", spec_path, "Witness spec JSON")->check(CLI::ExistingFile);
  cmd->add_option("--letters", letters, "XZ, XY, YZ or XYZ on every edge when no --spec is given");
}

Pauli letter(char c) {
  const Pauli p = pauli_from_char(c);
  if (p == Pauli::I) throw PreconditionError("witness letters must be X, Y or Z");
  return p;
}

WitnessSpec WitnessArgs::spec(const GraphArgs& graph) const {
  if (!spec_path.empty()) return load_spec(spec_path);
  const auto g = graph.graph();
  if (letters.size() == 3) {
    WitnessSpec s = xyz_spec(g);
    validate(s);
    return s;
  }
  if (letters.size() != 2) throw PreconditionError("--letters takes two or three Pauli letters");
  return pq_spec(g, letter(letters[0]), letter(letters[1]));
}

nlohmann::json WitnessArgs::echo(const GraphArgs& graph) const {
  if (!spec_path.empty()) {
    const auto s = load_spec(spec_path);
    return {{"spec", spec_to_json(s)}, {"spec_hash", spec_hash(s)}};
  }
  auto j = graph.echo();
  j["letters"] = letters;
  return j;
}

namespace {

void write(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Error("cannot write " + g.out);
  f << text;
}

}  // namespace

void emit_json(const Global& g, const std::string& command, nlohmann::json config, nlohmann::json result) {
  nlohmann::json doc{{"command", command},
                     {"version", QWIT_VERSION},
                     {"seed", g.seed},
                     {"config", std::move(config)},
                     {"result", std::move(result)}};
  write(g, doc.dump(2) + "\n");
}

void emit_csv(const Global& g, const std::string& command, const nlohmann::json& config,
              const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  out << "# qwit " << QWIT_VERSION << " " << command << "\n";
  out << "# seed " << g.seed << "\n";
  out << "# config " << config.dump() << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << "\n";
  out.precision(17);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  write(g, out.str());
}

void emit(const Global& g, const std::string& command, nlohmann::json config, nlohmann::json result,
          const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows) {
  if (g.format == "csv") {
    if (columns.empty()) throw PreconditionError(command + " has no CSV form; use --format json");
    emit_csv(g, command, config, columns, rows);
  } else {
    emit_json(g, command, std::move(config), std::move(result));
  }
}

}  // namespace qwit::cli
