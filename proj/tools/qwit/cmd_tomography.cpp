#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>

#include "common.hpp"
#include "qwit/analytic.hpp"
#include "qwit/error.hpp"
#include "qwit/tomography.hpp"

namespace qwit::cli {

namespace {

struct ReportArgs {
  std::string shots;
  GraphArgs graph;
  double gamma = 0.0;
};

struct SimulateArgs {
  GraphArgs graph;
  double gamma = std::numbers::pi / 8;
  double beta = std::numbers::pi / 8;
  std::size_t shots = 10000;
  double p_noise = 0.0;
};

struct FitArgs {
  std::string input;
  GraphArgs graph;
  double beta = std::numbers::pi / 8;
};

// Two numeric columns per line; '#' lines and a non-numeric header are skipped.
std::vector<std::pair<double, double>> read_sweep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::vector<std::pair<double, double>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double gamma = 0.0;
    double value = 0.0;
    if (!(fields >> gamma >> value)) {
      if (out.empty() && lineno <= 4) continue;  // header row
      throw SchemaError(path + ":" + std::to_string(lineno) + ": expected gamma,value");
    }
    out.emplace_back(gamma, value);
  }
  return out;
}

std::function<double(double)> family_model(const GraphArgs& a, double beta) {
  const auto g = a.graph();
  return [g, beta](double gamma) { return xz_witness_p1(g, gamma, beta); };
}

}  // namespace

void register_tomography(CLI::App& app, Global& g) {
  auto* sqrdm = app.add_subcommand("sqrdm", "Single-qubit reduced states from shot data");
  sqrdm->require_subcommand(1);
  auto r = std::make_shared<ReportArgs>();
  auto* rc = sqrdm->add_subcommand("report", "Coherence and fidelity per qubit");
  rc->add_option("--shots", r->shots, "Shot file")->required()->check(CLI::ExistingFile);
  r->graph.add(rc);
  rc->add_option("--gamma", r->gamma, "Gamma of the ideal p = 1 state (radians)");
  rc->callback([r, &g] {
    const auto ds = load_shots(r->shots);
    const auto graph = r->graph.graph();
    if (graph.num_nodes() != ds.n_qubits) throw PreconditionError("graph size does not match the shot file");
    std::vector<std::size_t> degrees;
    for (std::size_t q = 0; q < ds.n_qubits; ++q) degrees.push_back(graph.neighbors(q).size());
    const auto report = coherence_report(ds, degrees, r->gamma);
    nlohmann::json qubits = nlohmann::json::array();
    std::vector<std::vector<double>> rows;
    for (std::size_t q = 0; q < report.qubits.size(); ++q) {
      const auto& c = report.qubits[q];
      const auto mle = c.mle.bloch();
      qubits.push_back({{"qubit", q}, {"degree", degrees[q]}, {"bloch_raw", {c.raw.x, c.raw.y, c.raw.z}},
                        {"bloch_error", {c.raw_error.x, c.raw_error.y, c.raw_error.z}},
                        {"bloch_mle", {mle.x, mle.y, mle.z}}, {"coherence", c.coherence},
                        {"coherence_error", c.coherence_error}, {"fidelity", c.fidelity},
                        {"classical_fidelity", c.classical_fidelity}, {"margin", c.margin}});
      rows.push_back({static_cast<double>(q), r->gamma, c.coherence, c.coherence_error, c.fidelity,
                      c.classical_fidelity, c.margin});
    }
    auto config = r->graph.echo();
    config.update({{"shots", r->shots}, {"gamma", r->gamma}});
    emit(g, "sqrdm report", config, {{"qubits", qubits}, {"max_coherence", report.max_coherence}},
         {"qubit", "gamma", "coherence", "coherence_error", "fidelity", "classical_fidelity", "margin"}, rows);
  });

  auto* shots = app.add_subcommand("shots", "Synthetic measurement data");
  shots->require_subcommand(1);
  auto s = std::make_shared<SimulateArgs>();
  auto* sc = shots->add_subcommand("simulate", "X/Y/Z shots from a p = 1 MaxCut QAOA state");
  s->graph.add(sc);
  sc->add_option("--gamma", s->gamma);
  sc->add_option("--beta", s->beta);
  sc->add_option("--shots", s->shots, "Shots per basis")->check(CLI::PositiveNumber);
  sc->add_option("--p-noise", s->p_noise, "Global depolarizing strength")->check(CLI::Range(0.0, 1.0));
  sc->callback([s, &g] {
    const auto state = qaoa_state(maxcut_hamiltonian(s->graph.graph()), {{s->gamma}, {s->beta}});
    auto ds = simulate_shots(state, s->shots, g.seed, s->p_noise);
    auto config = s->graph.echo();
    config.update({{"gamma", s->gamma}, {"beta", s->beta}, {"shots", s->shots}, {"p_noise", s->p_noise}});
    ds.meta = {{"command", "shots simulate"}, {"version", QWIT_VERSION}, {"seed", g.seed}, {"config", config}};
    if (g.out.empty()) {
      std::cout << dataset_to_json(ds).dump(2) << '\n';
    } else {
      save_shots(ds, g.out);
    }
  });

  auto f = std::make_shared<FitArgs>();
  auto* fc = app.add_subcommand("fit-noise", "Fit a depolarizing strength to a measured p = 1 sweep");
  fc->add_option("--input", f->input, "CSV of gamma,value")->required()->check(CLI::ExistingFile);
  f->graph.add(fc);
  fc->add_option("--beta", f->beta, "Beta used in the sweep (radians)");
  fc->callback([f, &g] {
    const auto fit = fit_depolarizing(read_sweep(f->input), family_model(f->graph, f->beta), f->graph.n);
    auto config = f->graph.echo();
    config.update({{"input", f->input}, {"beta", f->beta}});
    emit(g, "fit-noise", config,
         {{"p_noise", fit.p_noise}, {"residual_rms", fit.residual_rms}, {"n_points", fit.n_points},
          {"critical_threshold", fit.critical_threshold}, {"below_threshold", fit.p_noise < fit.critical_threshold}},
         {"p_noise", "residual_rms", "n_points", "critical_threshold"},
         {{fit.p_noise, fit.residual_rms, static_cast<double>(fit.n_points), fit.critical_threshold}});
  });
}

}  // namespace qwit::cli
