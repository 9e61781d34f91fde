#include "qwit/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "qwit/error.hpp"

namespace qwit {

namespace {

constexpr std::array<Pauli, 3> kBases{Pauli::X, Pauli::Y, Pauli::Z};

std::size_t basis_index(Pauli b) {
  switch (b) {
    case Pauli::X: return 0;
    case Pauli::Y: return 1;
    case Pauli::Z: return 2;
    default: throw PreconditionError("measurement basis must be X, Y or Z");
  }
}

void check_bitstring(const std::string& bits, std::size_t n, char basis) {
  if (bits.size() != n) {
    throw SchemaError(std::string("basis ") + basis + ": bitstring '" + bits + "' has wrong length");
  }
  if (bits.find_first_not_of("01") != std::string::npos) {
    throw SchemaError(std::string("basis ") + basis + ": bitstring '" + bits + "' is not binary");
  }
}

}  // namespace

Counts& MeasurementDataset::counts(Pauli basis) { return bases[basis_index(basis)]; }
const Counts& MeasurementDataset::counts(Pauli basis) const { return bases[basis_index(basis)]; }

std::uint64_t MeasurementDataset::shots(Pauli basis) const {
  std::uint64_t total = 0;
  for (const auto& [bits, c] : counts(basis)) total += c;
  return total;
}

MeasurementDataset dataset_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
    throw SchemaError("shot file needs an integer n_qubits");
  }
  const auto n = doc["n_qubits"].get<std::int64_t>();
  if (n < 1 || n > static_cast<std::int64_t>(kMaxPauliQubits)) throw SchemaError("n_qubits out of range");
  if (!doc.contains("bases") || !doc["bases"].is_object()) throw SchemaError("shot file needs a bases object");

  MeasurementDataset ds;
  ds.n_qubits = static_cast<std::size_t>(n);
  for (Pauli b : kBases) {
    const std::string key(1, to_char(b));
    if (!doc["bases"].contains(key)) throw SchemaError("shot file is missing basis " + key);
    const auto& section = doc["bases"][key];
    if (!section.is_object()) throw SchemaError("basis " + key + " must map bitstrings to counts");
    for (const auto& [bits, count] : section.items()) {
      check_bitstring(bits, ds.n_qubits, key[0]);
      if (!count.is_number_integer() || count.get<std::int64_t>() < 0) {
        throw SchemaError("basis " + key + ": count for '" + bits + "' must be a nonnegative integer");
      }
      ds.counts(b)[bits] += count.get<std::uint64_t>();
    }
  }
  if (doc.contains("meta")) ds.meta = doc["meta"];
  return ds;
}

nlohmann::json dataset_to_json(const MeasurementDataset& ds) {
  nlohmann::json bases = nlohmann::json::object();
  for (Pauli b : kBases) {
    nlohmann::json section = nlohmann::json::object();
    for (const auto& [bits, c] : ds.counts(b)) section[bits] = c;
    bases[std::string(1, to_char(b))] = std::move(section);
  }
  return {{"n_qubits", ds.n_qubits}, {"bases", std::move(bases)}, {"meta", ds.meta}};
}

MeasurementDataset load_shots(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open shot file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("shot file " + path.string() + " is not valid JSON: " + e.what());
  }
  return dataset_from_json(doc);
}

void save_shots(const MeasurementDataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << dataset_to_json(ds).dump(2) << '\n';
}

std::vector<double> basis_probabilities(const StateVector& state, Pauli basis) {
  basis_index(basis);
  std::vector<Amplitude> psi(state.amplitudes().begin(), state.amplitudes().end());
  const double h = 1.0 / std::sqrt(2.0);
  // X: apply H to every qubit. Y: apply H S^dagger. Z: nothing.
  if (basis != Pauli::Z) {
    for (std::size_t q = 0; q < state.num_qubits(); ++q) {
      const std::size_t bit = std::size_t{1} << q;
      for (std::size_t b = 0; b < psi.size(); ++b) {
        if (b & bit) continue;
        const Amplitude a0 = psi[b];
        const Amplitude a1 = basis == Pauli::Y ? psi[b | bit] * Amplitude(0, -1) : psi[b | bit];
        psi[b] = h * (a0 + a1);
        psi[b | bit] = h * (a0 - a1);
      }
    }
  }
  std::vector<double> p(psi.size());
  for (std::size_t b = 0; b < psi.size(); ++b) p[b] = std::norm(psi[b]);
  return p;
}

MeasurementDataset simulate_shots(const StateVector& state, std::size_t shots, std::uint64_t seed,
                                  double p_noise) {
  if (shots == 0) throw PreconditionError("shots must be at least 1");
  if (!(p_noise >= 0.0 && p_noise <= 1.0)) throw PreconditionError("p_noise must lie in [0, 1]");
  const std::size_t n = state.num_qubits();
  MeasurementDataset ds;
  ds.n_qubits = n;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution noisy(p_noise);
  std::uniform_int_distribution<std::uint64_t> uniform(0, state.dim() - 1);
  for (Pauli b : kBases) {
    const auto probs = basis_probabilities(state, b);
    std::discrete_distribution<std::uint64_t> ideal(probs.begin(), probs.end());
    std::vector<std::uint64_t> tally(state.dim(), 0);
    for (std::size_t s = 0; s < shots; ++s) ++tally[noisy(rng) ? uniform(rng) : ideal(rng)];
    for (std::size_t idx = 0; idx < tally.size(); ++idx) {
      if (tally[idx] == 0) continue;
      std::string bits(n, '0');
      for (std::size_t q = 0; q < n; ++q) {
        if ((idx >> q) & 1U) bits[q] = '1';
      }
      ds.counts(b)[bits] = tally[idx];
    }
  }
  ds.meta = {{"source", "simulated"}, {"seed", seed}, {"shots_per_basis", shots}, {"p_noise", p_noise}};
  return ds;
}

namespace {

struct Marginal {
  std::uint64_t n0 = 0;
  std::uint64_t n1 = 0;
};

Marginal marginal(const MeasurementDataset& ds, Pauli basis, std::size_t qubit) {
  if (qubit >= ds.n_qubits) throw PreconditionError("qubit index out of range");
  Marginal m;
  for (const auto& [bits, c] : ds.counts(basis)) (bits[qubit] == '0' ? m.n0 : m.n1) += c;
  if (m.n0 + m.n1 == 0) throw PreconditionError(std::string("no shots in basis ") + to_char(basis));
  return m;
}

double mean_outcome(const Marginal& m) {
  return (static_cast<double>(m.n0) - static_cast<double>(m.n1)) / static_cast<double>(m.n0 + m.n1);
}

double binomial_error(double e, std::uint64_t n) {
  return std::sqrt(std::max(0.0, 1.0 - e * e) / static_cast<double>(n));
}

}  // namespace

BlochVector estimate_bloch(const MeasurementDataset& ds, std::size_t qubit) {
  return {mean_outcome(marginal(ds, Pauli::X, qubit)), mean_outcome(marginal(ds, Pauli::Y, qubit)),
          mean_outcome(marginal(ds, Pauli::Z, qubit))};
}

BlochVector bloch_std_error(const MeasurementDataset& ds, std::size_t qubit) {
  std::array<double, 3> err{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto m = marginal(ds, kBases[i], qubit);
    err[i] = binomial_error(mean_outcome(m), m.n0 + m.n1);
  }
  return {err[0], err[1], err[2]};
}

DensityMatrix2 mle_project(const BlochVector& raw) {
  const double r = raw.norm();
  if (r <= 1.0) return density_from_bloch(raw);
  return density_from_bloch({raw.x / r, raw.y / r, raw.z / r});
}

CoherenceReport coherence_report(const MeasurementDataset& ds, const std::vector<std::size_t>& degrees,
                                 double gamma) {
  if (degrees.size() != ds.n_qubits) throw PreconditionError("need one degree per qubit");
  CoherenceReport report;
  for (std::size_t q = 0; q < ds.n_qubits; ++q) {
    QubitCoherence c;
    c.raw = estimate_bloch(ds, q);
    c.raw_error = bloch_std_error(ds, q);
    c.mle = mle_project(c.raw);
    c.coherence = coherence(c.mle);
    // C = |x - iy| / 2 on the raw estimate, first-order error propagation.
    const double t = std::hypot(c.raw.x, c.raw.y);
    c.coherence_error = t > 0.0 ? 0.5 * std::hypot(c.raw.x * c.raw_error.x, c.raw.y * c.raw_error.y) / t
                                : 0.5 * std::hypot(c.raw_error.x, c.raw_error.y);
    c.fidelity = fidelity_qaoa(degrees[q], gamma, c.mle.bloch());
    c.classical_fidelity = max_classical_fidelity(degrees[q], gamma);
    c.margin = c.fidelity - c.classical_fidelity;
    report.max_coherence = std::max(report.max_coherence, c.coherence);
    report.qubits.push_back(c);
  }
  return report;
}

ShotEstimate witness_expectation_from_shots(const MeasurementDataset& ds, const Observable& obs) {
  if (obs.num_qubits() != ds.n_qubits) throw PreconditionError("observable and dataset sizes differ");
  ShotEstimate est;
  double variance = 0.0;
  for (const auto& term : obs.terms()) {
    if (term.pauli.is_identity()) {
      est.value += term.coefficient;
      continue;
    }
    if (!term.pauli.is_uniform()) {
      throw PreconditionError("term " + term.pauli.str() + " mixes letters; X/Y/Z global bases cannot measure it");
    }
    Pauli basis = Pauli::I;
    std::vector<std::size_t> support;
    for (std::size_t q = 0; q < obs.num_qubits(); ++q) {
      if (term.pauli[q] != Pauli::I) {
        basis = term.pauli[q];
        support.push_back(q);
      }
    }
    const auto& counts = ds.counts(basis);
    std::int64_t signed_total = 0;
    std::uint64_t total = 0;
    for (const auto& [bits, c] : counts) {
      bool odd = false;
      for (std::size_t q : support) odd ^= bits[q] == '1';
      signed_total += odd ? -static_cast<std::int64_t>(c) : static_cast<std::int64_t>(c);
      total += c;
    }
    if (total == 0) throw PreconditionError(std::string("no shots in basis ") + to_char(basis));
    const double e = static_cast<double>(signed_total) / static_cast<double>(total);
    est.value += term.coefficient * e;
    const double s = term.coefficient * binomial_error(e, total);
    variance += s * s;
  }
  est.std_error = std::sqrt(variance);
  return est;
}

ShotEstimate witness_expectation_from_shots(const MeasurementDataset& ds, const WitnessSpec& spec) {
  return witness_expectation_from_shots(ds, build_witness(spec));
}

NoiseFit fit_depolarizing(const std::vector<std::pair<double, double>>& observed,
                          const std::function<double(double)>& model, std::size_t n_qubits) {
  if (observed.size() < 2) throw PreconditionError("need at least two sweep points");
  double vm = 0.0;
  double mm = 0.0;
  std::vector<double> m(observed.size());
  for (std::size_t i = 0; i < observed.size(); ++i) {
    m[i] = model(observed[i].first);
    vm += observed[i].second * m[i];
    mm += m[i] * m[i];
  }
  if (!(mm > 1e-300)) throw PreconditionError("model is identically zero on the sweep");
  NoiseFit fit;
  fit.p_noise = std::clamp(1.0 - vm / mm, 0.0, 1.0);
  double ss = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double r = observed[i].second - (1.0 - fit.p_noise) * m[i];
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(observed.size()));
  fit.n_points = observed.size();
  fit.critical_threshold = critical_threshold(n_qubits);
  return fit;
}

double critical_threshold(std::size_t n) {
  if (n < 2) throw PreconditionError("critical threshold needs n >= 2");
  if (n == 2) return 0.5;
  const double nd = static_cast<double>(n);
  return 1.0 - (nd - 1.0) / (1.207 * nd - 1.019);
}

}  // namespace qwit
