#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qwit {

/// Largest register any Pauli string may address (bit masks are 64-bit).
inline constexpr std::size_t kMaxPauliQubits = 63;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// Tensor product of single-qubit Paulis. Letter q acts on qubit q, and
/// qubit q is bit q of a computational-basis index (little-endian).
///
/// Action on a basis state: P|b> = i^{#Y} (-1)^{popcount(b & z_mask)} |b ^ x_mask>.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> letters);

  /// Parses "XIZY"-style text; character q is the letter on qubit q.
  static PauliString parse(std::string_view text);
  /// Identity everywhere except `letter` on each listed qubit.
  static PauliString on_qubits(std::size_t n_qubits, std::span<const std::size_t> qubits,
                               std::span<const Pauli> letters);

  std::size_t num_qubits() const noexcept { return letters_.size(); }
  Pauli operator[](std::size_t q) const { return letters_[q]; }
  std::span<const Pauli> letters() const noexcept { return letters_; }

  std::uint64_t x_mask() const noexcept { return x_mask_; }
  std::uint64_t z_mask() const noexcept { return z_mask_; }
  int y_count() const noexcept { return y_count_; }
  /// Number of non-identity letters.
  std::size_t weight() const noexcept;
  bool is_identity() const noexcept { return x_mask_ == 0 && z_mask_ == 0; }
  /// True when every non-identity letter equals the same Pauli.
  bool is_uniform() const noexcept;

  std::string str() const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Pauli> letters_;
  std::uint64_t x_mask_ = 0;
  std::uint64_t z_mask_ = 0;
  int y_count_ = 0;
};

struct Term {
  double coefficient = 1.0;
  PauliString pauli;
};

/// Real-weighted sum of Pauli strings, hence Hermitian.
class Observable {
 public:
  Observable() = default;
  Observable(std::size_t n_qubits, std::vector<Term> terms);

  std::size_t num_qubits() const noexcept { return n_qubits_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Tr(W) / 2^N, i.e. the summed coefficients of identity terms.
  double normalized_trace() const noexcept;
  /// Sum of |coefficient|; an upper bound on the spectral radius.
  double coefficient_l1() const noexcept;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Term> terms_;
};

}  // namespace qwit
