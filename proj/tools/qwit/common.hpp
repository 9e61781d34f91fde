#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwit/graph.hpp"
#include "qwit/statesim.hpp"
#include "qwit/witness.hpp"

namespace qwit::cli {

/// Options shared by every subcommand.
struct Global {
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;
  std::string out;  // empty means stdout
  std::string format = "json";
  double tolerance = 1e-6;
  bool error_json = false;
};

/// --family/--n, or a witness spec file whose graph is reused.
struct GraphArgs {
  std::string family = "line";
  std::size_t n = 4;

  void add(CLI::App* cmd);
  GeneralizedGraph graph() const;
  nlohmann::json echo() const;
};

/// Witness given either by --spec or by --letters on the selected graph.
struct WitnessArgs {
  std::string spec_path;
  std::string letters = "XZ";

  void add(CLI::App* cmd);
  WitnessSpec spec(const GraphArgs& graph) const;
  nlohmann::json echo(const GraphArgs& graph) const;
};

Pauli letter(char c);
GeneralizedGraph family_graph(const std::string& family, std::size_t n);

/// Writes {"command", "version", "seed", "config", "result"} to --out or stdout.
void emit_json(const Global& g, const std::string& command, nlohmann::json config, nlohmann::json result);

/// CSV with '#'-prefixed header lines carrying version, command, seed and config.
void emit_csv(const Global& g, const std::string& command, const nlohmann::json& config,
              const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows);

/// Dispatches on --format.
void emit(const Global& g, const std::string& command, nlohmann::json config, nlohmann::json result,
          const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows);

void register_witness(CLI::App& app, Global& g);
void register_qaoa(CLI::App& app, Global& g);
void register_potency(CLI::App& app, Global& g);
void register_tomography(CLI::App& app, Global& g);

}  // namespace qwit::cli
