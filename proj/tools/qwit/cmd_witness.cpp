#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "common.hpp"
#include "qwit/certify.hpp"
#include "qwit/error.hpp"
#include "qwit/spec_io.hpp"
#include "qwit/tomography.hpp"

namespace qwit::cli {

namespace {

struct BuildArgs {
  GraphArgs graph;
  std::string letters = "XZ";
  std::vector<std::string> terms;
};

WitnessSpec build_from(const BuildArgs& a) {
  const auto g = a.graph.graph();
  if (a.terms.empty()) {
    WitnessArgs w;
    w.letters = a.letters;
    return w.spec(a.graph);
  }
  WitnessSpec spec{g, {}};
  for (const auto& t : a.terms) {
    WitnessTerm term;
    for (char c : t) term.letters.push_back(letter(c));
    spec.terms.push_back(std::move(term));
  }
  validate(spec);
  return spec;
}

struct EvalArgs {
  GraphArgs graph;
  WitnessArgs witness;
  std::string state = "plus";
  std::vector<std::size_t> flips;
  int sign = 1;
  std::vector<double> gammas;
  std::vector<double> betas;
  std::string shots;
};

StateVector eval_state(const EvalArgs& a, const WitnessSpec& spec, std::uint64_t seed) {
  const std::size_t n = spec.graph.num_nodes();
  if (a.state == "plus") return StateVector::plus(n);
  if (a.state == "ghz") return ghz_state(n, a.flips, a.sign);
  if (a.state == "haar") return haar_random(n, seed);
  // QAOA on the witness graph when it is a pair graph, else on --family/--n.
  const auto g = spec.graph.arity() == 2 ? spec.graph : a.graph.graph();
  if (g.num_nodes() != n) throw PreconditionError("Hamiltonian graph and witness act on different qubit counts");
  return qaoa_state(maxcut_hamiltonian(g), {a.gammas, a.betas});
}

}  // namespace

void register_witness(CLI::App& app, Global& g) {
  auto* witness = app.add_subcommand("witness", "Build, evaluate and bound witness observables");
  witness->require_subcommand(1);

  auto build = std::make_shared<BuildArgs>();
  auto* b = witness->add_subcommand("build", "Write a witness spec JSON");
  build->graph.add(b);
  b->add_option("--letters", build->letters, "XZ, XY, YZ or XYZ");
  b->add_option("--terms", build->terms, "Explicit per-position letter strings, one per term (e.g. XYZZYX ZXYXZY)");
  b->callback([build, &g] {
    const auto spec = build_from(*build);
    auto doc = spec_to_json(spec);
    auto config = build->graph.echo();
    config["letters"] = build->letters;
    config["terms"] = build->terms;
    doc["meta"] = {{"command", "witness build"}, {"version", QWIT_VERSION}, {"seed", g.seed}, {"config", config},
                   {"spec_hash", spec_hash(spec)}};
    const std::string text = doc.dump(2) + "\n";
    if (g.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream(g.out) << text;
    }
  });

  auto eval = std::make_shared<EvalArgs>();
  auto* e = witness->add_subcommand("eval", "Expectation value and verdict for a state or shot file");
  eval->graph.add(e);
  eval->witness.add(e);
  e->add_option("--state", eval->state, "plus, ghz, haar or qaoa")
      ->check(CLI::IsMember({"plus", "ghz", "haar", "qaoa"}));
  e->add_option("--flips", eval->flips, "Qubits flipped in the GHZ state");
  e->add_option("--sign", eval->sign, "GHZ relative sign")->check(CLI::IsMember({-1, 1}));
  e->add_option("--gammas", eval->gammas, "QAOA gammas (radians)");
  e->add_option("--betas", eval->betas, "QAOA betas (radians)");
  e->add_option("--shots", eval->shots, "Estimate from a shot file instead")->check(CLI::ExistingFile);
  e->callback([eval, &g] {
    const auto spec = eval->witness.spec(eval->graph);
    auto config = eval->witness.echo(eval->graph);
    nlohmann::json result;
    if (!eval->shots.empty()) {
      const auto est = witness_expectation_from_shots(load_shots(eval->shots), spec);
      // Shot estimates need a 3-sigma margin on top of the analytic tolerance.
      const auto v = verdict(spec, est.value, g.tolerance + 3 * est.std_error);
      config["shots"] = eval->shots;
      result = {{"expectation", est.value}, {"std_error", est.std_error}, {"separable", v.bound},
                {"upper_violated", v.upper_violated}, {"lower_violated", v.lower_violated},
                {"entangled", v.entangled()}, {"margin", v.margin}};
    } else {
      const double value = expectation(build_witness(spec), eval_state(*eval, spec, g.seed));
      const auto v = verdict(spec, value, g.tolerance);
      config["state"] = eval->state;
      if (eval->state == "ghz") config.update({{"flips", eval->flips}, {"sign", eval->sign}});
      if (eval->state == "qaoa") config.update({{"gammas", eval->gammas}, {"betas", eval->betas}});
      result = {{"expectation", value}, {"separable", v.bound}, {"upper_violated", v.upper_violated},
                {"lower_violated", v.lower_violated}, {"entangled", v.entangled()}, {"margin", v.margin}};
    }
    config["tolerance"] = g.tolerance;
    emit(g, "witness eval", config, result, {}, {});
  });

  auto bounds = std::make_shared<std::pair<GraphArgs, WitnessArgs>>();
  auto no_spectrum = std::make_shared<bool>(false);
  auto* bd = witness->add_subcommand("bounds", "Separable, Weyl, moment and spectral bounds");
  bounds->first.add(bd);
  bounds->second.add(bd);
  bd->add_flag("--no-spectrum", *no_spectrum, "Skip the eigenvalue computation");
  bd->callback([bounds, no_spectrum, &g] {
    const auto spec = bounds->second.spec(bounds->first);
    const auto r = bound_report(spec, !*no_spectrum);
    nlohmann::json result{{"separable", r.separable_bound}, {"weyl_upper", r.weyl_upper},
                          {"moment_lower", r.moment_lower ? nlohmann::json(*r.moment_lower) : nlohmann::json()},
                          {"terms", spec.num_active_terms()}, {"edges", spec.graph.num_edges()}};
    if (r.lambda_max) {
      result["lambda_max"] = *r.lambda_max;
      result["lambda_min"] = *r.lambda_min;
      result["method"] = to_string(r.method);
    }
    auto config = bounds->second.echo(bounds->first);
    config["spectrum"] = !*no_spectrum;
    emit(g, "witness bounds", config, result, {}, {});
  });
}

}  // namespace qwit::cli
