#include <memory>
#include <numbers>

#include "common.hpp"
#include "qwit/analytic.hpp"
#include "qwit/certify.hpp"
#include "qwit/error.hpp"
#include "qwit/qaoa.hpp"

namespace qwit::cli {

namespace {

struct SweepArgs {
  GraphArgs graph;
  WitnessArgs witness;
  double gamma_start = 0.0;
  double gamma_stop = std::numbers::pi;
  std::size_t gamma_steps = 21;
  double beta_start = std::numbers::pi / 8;
  double beta_stop = std::numbers::pi / 8;
  std::size_t beta_steps = 1;
  bool simulate = false;
};

// The p = 1 closed form covers W_XZ on the Hamiltonian's own graph.
bool closed_form_applies(const WitnessSpec& spec, const GeneralizedGraph& g) {
  const auto pq = as_pq_form(spec);
  if (!pq || spec.graph != g) return false;
  return (pq->first == Pauli::X && pq->second == Pauli::Z) || (pq->first == Pauli::Z && pq->second == Pauli::X);
}

struct OptimizeArgs {
  GraphArgs graph;
  WitnessArgs witness;
  std::size_t depth = 1;
  std::size_t starts = 20;
};

struct SeparabilityArgs {
  GraphArgs graph;
  WitnessArgs witness;
  std::size_t k = 0;
  std::size_t restarts = 8;
};

}  // namespace

void register_qaoa(CLI::App& app, Global& g) {
  auto* qaoa = app.add_subcommand("qaoa", "Witness values over QAOA angles");
  qaoa->require_subcommand(1);

  auto sweep = std::make_shared<SweepArgs>();
  auto* s = qaoa->add_subcommand("sweep", "Witness expectation on a p = 1 (gamma, beta) grid");
  sweep->graph.add(s);
  sweep->witness.add(s);
  s->add_option("--gamma-start", sweep->gamma_start);
  s->add_option("--gamma-stop", sweep->gamma_stop);
  s->add_option("--gamma-steps", sweep->gamma_steps)->check(CLI::PositiveNumber);
  auto* beta = s->add_option("--beta", sweep->beta_start, "Fixed beta (radians)");
  s->add_option("--beta-start", sweep->beta_start)->excludes(beta);
  s->add_option("--beta-stop", sweep->beta_stop)->excludes(beta);
  s->add_option("--beta-steps", sweep->beta_steps)->check(CLI::PositiveNumber)->excludes(beta);
  s->add_flag("--simulate", sweep->simulate, "Use the statevector even when a closed form exists");
  s->callback([sweep, beta, &g] {
    const auto ham_graph = sweep->graph.graph();
    const auto spec = sweep->witness.spec(sweep->graph);
    if (beta->count() > 0) sweep->beta_stop = sweep->beta_start;
    const bool analytic = !sweep->simulate && closed_form_applies(spec, ham_graph);
    std::unique_ptr<QaoaSimulator> sim;
    const auto w = build_witness(spec);
    if (!analytic) sim = std::make_unique<QaoaSimulator>(maxcut_hamiltonian(ham_graph));
    const double bound = static_cast<double>(spec.graph.num_edges());

    std::vector<std::vector<double>> rows;
    nlohmann::json points = nlohmann::json::array();
    for (double b : linspace(sweep->beta_start, sweep->beta_stop, sweep->beta_steps)) {
      for (double gm : linspace(sweep->gamma_start, sweep->gamma_stop, sweep->gamma_steps)) {
        const double v = analytic ? xz_witness_p1(ham_graph, gm, b) : expectation(w, sim->state({{gm}, {b}}));
        rows.push_back({gm, b, v, bound, v - bound});
        points.push_back({{"gamma", gm}, {"beta", b}, {"witness", v}});
      }
    }
    auto config = sweep->witness.echo(sweep->graph);
    config.update({{"hamiltonian", sweep->graph.echo()}, {"gamma", {sweep->gamma_start, sweep->gamma_stop, sweep->gamma_steps}},
                   {"beta", {sweep->beta_start, sweep->beta_stop, sweep->beta_steps}},
                   {"method", analytic ? "closed_form" : "statevector"}});
    emit(g, "qaoa sweep", config, {{"separable", bound}, {"points", points}},
         {"gamma", "beta", "witness", "separable", "excess"}, rows);
  });

  auto opt = std::make_shared<OptimizeArgs>();
  auto* o = qaoa->add_subcommand("optimize", "Maximize the witness over QAOA angles");
  opt->graph.add(o);
  opt->witness.add(o);
  o->add_option("--p", opt->depth, "QAOA depth")->check(CLI::PositiveNumber);
  o->add_option("--starts", opt->starts, "Simplex restarts")->check(CLI::PositiveNumber);
  o->callback([opt, &g] {
    const auto ham_graph = opt->graph.graph();
    const auto spec = opt->witness.spec(opt->graph);
    nlohmann::json result;
    std::string method;
    if (opt->depth == 1 && closed_form_applies(spec, ham_graph)) {
      const auto r = maximize_angles([&](double a, double b) { return xz_witness_p1(ham_graph, a, b); });
      result = {{"gammas", {r.x[0]}}, {"betas", {r.x[1]}}, {"value", r.value}};
      method = "closed_form_grid";
    } else {
      const auto r = maximize_qaoa(maxcut_hamiltonian(ham_graph), build_witness(spec), opt->depth, opt->starts, g.seed);
      result = {{"gammas", r.params.gammas}, {"betas", r.params.betas}, {"value", r.value}, {"evaluations", r.evaluations}};
      method = "statevector_simplex";
    }
    const auto v = verdict(spec, result["value"].get<double>(), g.tolerance);
    result.update({{"separable", v.bound}, {"excess", v.margin}, {"entangled", v.entangled()}});
    auto config = opt->witness.echo(opt->graph);
    config.update({{"p", opt->depth}, {"starts", opt->starts}, {"method", method}, {"tolerance", g.tolerance}});
    emit(g, "qaoa optimize", config, result, {}, {});
  });

  auto sep = std::make_shared<SeparabilityArgs>();
  auto* sp = app.add_subcommand("separability", "Best k-separable witness values");
  sep->graph.add(sp);
  sep->witness.add(sp);
  sp->add_option("--k", sep->k, "Single block count (default: every k from N to 1)");
  sp->add_option("--restarts", sep->restarts, "Random starts per partition")->check(CLI::PositiveNumber);
  sp->callback([sep, &g] {
    const auto spec = sep->witness.spec(sep->graph);
    const auto w = build_witness(spec);
    KsepOptions options;
    options.restarts = sep->restarts;
    options.seed = g.seed;
    std::vector<SeparabilityReport> reports;
    if (sep->k == 0) {
      reports = ksep_hierarchy(w, options);
    } else {
      reports.push_back(ksep_max(w, sep->k, options));
    }
    nlohmann::json levels = nlohmann::json::array();
    std::vector<std::vector<double>> rows;
    for (const auto& r : reports) {
      levels.push_back({{"k", r.k}, {"max_expectation", r.max_expectation}, {"partition", r.partition},
                        {"restarts", r.optimizer_restarts}, {"partitions_tried", r.partitions_tried},
                        {"converged", r.converged}, {"heuristic", r.heuristic}});
      rows.push_back({static_cast<double>(r.k), r.max_expectation});
    }
    auto config = sep->witness.echo(sep->graph);
    config.update({{"k", sep->k}, {"restarts", sep->restarts}});
    emit(g, "separability", config, {{"separable", separable_bound(spec)}, {"levels", levels}},
         {"k", "max_expectation"}, rows);
  });
}

}  // namespace qwit::cli
