#include "qwit/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qwit/error.hpp"

namespace qwit {

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default: break;
  }
  throw SchemaError(std::string("not a Pauli letter: '") + c + "'");
}

PauliString::PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {
  if (letters_.size() > kMaxPauliQubits) {
    throw PreconditionError("Pauli string longer than " + std::to_string(kMaxPauliQubits));
  }
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    const auto bit = std::uint64_t{1} << q;
    switch (letters_[q]) {
      case Pauli::I: break;
      case Pauli::X: x_mask_ |= bit; break;
      case Pauli::Y: x_mask_ |= bit; z_mask_ |= bit; ++y_count_; break;
      case Pauli::Z: z_mask_ |= bit; break;
    }
  }
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(pauli_from_char(c));
  return PauliString(std::move(letters));
}

PauliString PauliString::on_qubits(std::size_t n_qubits, std::span<const std::size_t> qubits,
                                   std::span<const Pauli> letters) {
  if (qubits.size() != letters.size()) {
    throw PreconditionError("qubit list and letter list differ in length");
  }
  std::vector<Pauli> full(n_qubits, Pauli::I);
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    if (qubits[j] >= n_qubits) throw PreconditionError("qubit index out of range");
    if (full[qubits[j]] != Pauli::I) throw PreconditionError("qubit addressed twice");
    full[qubits[j]] = letters[j];
  }
  return PauliString(std::move(full));
}

std::size_t PauliString::weight() const noexcept {
  return static_cast<std::size_t>(std::popcount(x_mask_ | z_mask_));
}

bool PauliString::is_uniform() const noexcept {
  Pauli seen = Pauli::I;
  for (Pauli p : letters_) {
    if (p == Pauli::I) continue;
    if (seen == Pauli::I) seen = p;
    else if (p != seen) return false;
  }
  return true;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Pauli p : letters_) s.push_back(to_char(p));
  return s;
}

Observable::Observable(std::size_t n_qubits, std::vector<Term> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.pauli.num_qubits() != n_qubits_) {
      throw PreconditionError("term " + t.pauli.str() + " does not match " +
                              std::to_string(n_qubits_) + " qubits");
    }
    if (!std::isfinite(t.coefficient)) throw PreconditionError("non-finite coefficient");
  }
}

double Observable::normalized_trace() const noexcept {
  double tr = 0.0;
  for (const auto& t : terms_) {
    if (t.pauli.is_identity()) tr += t.coefficient;
  }
  return tr;
}

double Observable::coefficient_l1() const noexcept {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coefficient);
  return s;
}

}  // namespace qwit
