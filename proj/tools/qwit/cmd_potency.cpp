#include <memory>

#include "common.hpp"
#include "qwit/potency.hpp"

namespace qwit::cli {

namespace {

struct QaoaPotencyArgs {
  GraphArgs graph;
  WitnessArgs witness;
  std::size_t depth = 1;
  bool two_sided = false;
  std::string per_sample;
};

struct TableArgs {
  std::size_t n = 4;
  std::size_t hams = 0;
  std::size_t depth = 1;
  std::size_t haar_samples = 10000;
};

nlohmann::json summary(const PotencyEstimate& e) {
  return {{"fraction", e.fraction}, {"samples", e.samples}, {"detected", e.detected}, {"std_error", e.std_error},
          {"family", e.family}, {"depth", e.depth}, {"spec_hash", e.spec_hash}, {"separable", e.bound}};
}

// Table I used 60, 80 and 100 Hamiltonians for N = 4, 5, 6.
std::size_t default_hamiltonians(std::size_t n) { return n <= 4 ? 60 : n == 5 ? 80 : 100; }

}  // namespace

void register_potency(CLI::App& app, Global& g) {
  auto* potency = app.add_subcommand("potency", "Fraction of sampled states a witness detects");
  potency->require_subcommand(1);

  auto q = std::make_shared<QaoaPotencyArgs>();
  auto* qc = potency->add_subcommand("qaoa", "Uniform QAOA angles on [0, 2pi)");
  q->graph.add(qc);
  q->witness.add(qc);
  qc->add_option("--p", q->depth, "QAOA depth")->check(CLI::PositiveNumber);
  qc->add_flag("--two-sided", q->two_sided, "Also count <W> < -|E_k|");
  qc->add_option("--per-sample", q->per_sample, "Write per-sample CSV here");
  qc->callback([q, &g] {
    const auto spec = q->witness.spec(q->graph);
    PotencyOptions o;
    o.two_sided = q->two_sided;
    o.keep_samples = !q->per_sample.empty();
    const std::size_t samples = g.samples.value_or(10000);
    const auto e = potency_qaoa(spec, maxcut_hamiltonian(q->graph.graph()), q->depth, samples, g.seed, o);
    auto config = q->witness.echo(q->graph);
    config.update({{"p", q->depth}, {"samples", samples}, {"two_sided", q->two_sided}});
    if (!q->per_sample.empty()) {
      std::vector<std::string> cols;
      for (std::size_t j = 0; j < q->depth; ++j) cols.push_back("gamma" + std::to_string(j + 1));
      for (std::size_t j = 0; j < q->depth; ++j) cols.push_back("beta" + std::to_string(j + 1));
      cols.insert(cols.end(), {"expectation", "detected"});
      std::vector<std::vector<double>> rows;
      for (const auto& r : e.records) {
        std::vector<double> row(r.gammas);
        row.insert(row.end(), r.betas.begin(), r.betas.end());
        row.insert(row.end(), {r.expectation, r.detected ? 1.0 : 0.0});
        rows.push_back(std::move(row));
      }
      Global side = g;
      side.out = q->per_sample;
      emit_csv(side, "potency qaoa", config, cols, rows);
    }
    emit(g, "potency qaoa", config, summary(e), {}, {});
  });

  auto h = std::make_shared<std::pair<GraphArgs, WitnessArgs>>();
  auto two_sided = std::make_shared<bool>(false);
  auto* hc = potency->add_subcommand("haar", "Haar-random states");
  h->first.add(hc);
  h->second.add(hc);
  hc->add_flag("--two-sided", *two_sided, "Also count <W> < -|E_k|");
  hc->callback([h, two_sided, &g] {
    const auto spec = h->second.spec(h->first);
    PotencyOptions o;
    o.two_sided = *two_sided;
    const std::size_t samples = g.samples.value_or(10000);
    auto config = h->second.echo(h->first);
    config.update({{"samples", samples}, {"two_sided", *two_sided}});
    emit(g, "potency haar", config, summary(potency_haar(spec, samples, g.seed, o)), {}, {});
  });

  auto t = std::make_shared<TableArgs>();
  auto* tc = potency->add_subcommand("table1", "W_XZ on one N-tuple over random Z2 Hamiltonians");
  tc->add_option("--n", t->n, "Qubits")->check(CLI::Range(2, 20));
  tc->add_option("--hams", t->hams, "Hamiltonians (default 60/80/100 for N = 4/5/6)");
  tc->add_option("--p", t->depth, "QAOA depth")->check(CLI::PositiveNumber);
  tc->add_option("--haar-samples", t->haar_samples, "Haar states for the random column (0 to skip)");
  tc->callback([t, &g] {
    const std::size_t hams = t->hams ? t->hams : default_hamiltonians(t->n);
    const std::size_t samples = g.samples.value_or(1000);
    const auto s = table_i_protocol(t->n, hams, samples, t->depth, g.seed);
    nlohmann::json result{{"mean", s.mean}, {"max", s.max}, {"min", s.min}, {"fractions", s.fractions}};
    if (t->haar_samples > 0) {
      const auto spec = pq_spec(single_tuple_graph(t->n), Pauli::X, Pauli::Z);
      result["haar"] = summary(potency_haar(spec, t->haar_samples, g.seed));
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < s.fractions.size(); ++i) rows.push_back({static_cast<double>(i), s.fractions[i]});
    const nlohmann::json config{{"n", t->n}, {"hamiltonians", hams}, {"samples_per_hamiltonian", samples},
                                {"p", t->depth}, {"haar_samples", t->haar_samples}};
    emit(g, "potency table1", config, result, {"hamiltonian", "fraction"}, rows);
  });

  auto resolution = std::make_shared<std::size_t>(2000);
  auto* rc = potency->add_subcommand("ring-integral", "Grid estimate of the ring p = 1 potency");
  rc->add_option("--resolution", *resolution, "Grid points per axis")->check(CLI::Range(100, 100000));
  rc->callback([resolution, &g] {
    const double v = heaviside_ring_integral(*resolution);
    emit(g, "potency ring-integral", {{"resolution", *resolution}}, {{"fraction", v}}, {"resolution", "fraction"},
         {{static_cast<double>(*resolution), v}});
  });
}

}  // namespace qwit::cli
