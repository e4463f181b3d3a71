#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace symproj {

using Complex = std::complex<double>;

/// Coefficients at or below this magnitude are not reported as terms.
inline constexpr double kReportCutoff = 1e-9;
/// Internal threshold applied to intermediate products.
inline constexpr double kArithmeticThreshold = 1e-12;
/// Words are stored in two 64-bit masks.
inline constexpr std::size_t kMaxQubits = 64;

/// Power of i multiplying a word product: a*b = i^k c.
enum class Phase : std::uint8_t { kOne = 0, kI = 1, kMinusOne = 2, kMinusI = 3 };

Complex to_complex(Phase p);
Phase operator*(Phase a, Phase b);

/**
 * Tensor product of single-qubit Paulis in symplectic form.
 *
 * Qubit q carries X if only the x-bit is set, Z if only the z-bit is set,
 * Y if both are set and the identity otherwise. With this convention every
 * word is Hermitian: W = i^{|x & z|} X^x Z^z.
 */
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::size_t n_qubits);
  PauliWord(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  static PauliWord identity(std::size_t n_qubits) { return PauliWord(n_qubits); }
  /// Single-qubit word; `pauli` is one of 'I', 'X', 'Y', 'Z'.
  static PauliWord single(std::size_t n_qubits, std::size_t qubit, char pauli);
  /// Z on every qubit of `mask`.
  static PauliWord z_string(std::size_t n_qubits, std::uint64_t mask) {
    return PauliWord(n_qubits, 0, mask);
  }
  /// X on every qubit of `mask`.
  static PauliWord x_string(std::size_t n_qubits, std::uint64_t mask) {
    return PauliWord(n_qubits, mask, 0);
  }
  /// Parses the canonical text form ("X3 Z1 Y0", "I"). Factors may appear in
  /// any order but a qubit may only appear once.
  static PauliWord parse(std::string_view text, std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  std::uint64_t support() const { return x_ | z_; }
  char at(std::size_t qubit) const;
  bool is_identity() const { return (x_ | z_) == 0; }
  std::size_t weight() const;
  bool commutes_with(const PauliWord& other) const;

  /// Canonical text: descending qubit index, space separated, "I" for identity.
  std::string to_string() const;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
  friend auto operator<=>(const PauliWord&, const PauliWord&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// Returns (c, phase) with a * b = phase * c. Throws DimensionError.
std::pair<PauliWord, Phase> multiply(const PauliWord& a, const PauliWord& b);

}  // namespace symproj

template <>
struct std::hash<symproj::PauliWord> {
  std::size_t operator()(const symproj::PauliWord& w) const noexcept {
    std::uint64_t h = w.x_mask() * 0x9E3779B97F4A7C15ULL;
    h ^= w.z_mask() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    h ^= w.n_qubits() + (h << 7);
    return static_cast<std::size_t>(h);
  }
};

namespace symproj {

/// Complex-weighted linear combination of Pauli words on a fixed register.
class PauliSum {
 public:
  using TermMap = std::unordered_map<PauliWord, Complex>;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}
  explicit PauliSum(const PauliWord& word, Complex coefficient = 1.0);

  static PauliSum identity(std::size_t n_qubits, Complex coefficient = 1.0);
  static PauliSum zero(std::size_t n_qubits) { return PauliSum(n_qubits); }

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Complex coefficient(const PauliWord& word) const;

  void add_term(const PauliWord& word, Complex coefficient);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scalar);

  /// Drops every term with |c| <= threshold.
  PauliSum& prune(double threshold = kArithmeticThreshold);
  PauliSum pruned(double threshold = kArithmeticThreshold) const;

  PauliSum adjoint() const;
  /// Words are Hermitian, so the sum is Hermitian iff every coefficient is real.
  bool is_hermitian(double tolerance = 1e-10) const;
  /// Sum of |c|; an upper bound on the operator norm.
  double one_norm() const;
  /// Terms sorted by word for deterministic output.
  std::vector<std::pair<PauliWord, Complex>> sorted_terms() const;
  /// Qubits touched by at least one term.
  std::uint64_t support() const;

 private:
  std::size_t n_qubits_ = 0;
  TermMap terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a);
PauliSum operator*(PauliSum a, Complex scalar);
PauliSum operator*(Complex scalar, PauliSum a);

/// Distributive product with like terms merged and |c| <= prune dropped.
PauliSum multiply(const PauliSum& a, const PauliSum& b, double prune = kArithmeticThreshold);
inline PauliSum operator*(const PauliSum& a, const PauliSum& b) { return multiply(a, b); }

/// ab - ba, pruned.
PauliSum commutator(const PauliSum& a, const PauliSum& b, double prune = kArithmeticThreshold);
/// ab + ba, pruned.
PauliSum anticommutator(const PauliSum& a, const PauliSum& b,
                        double prune = kArithmeticThreshold);

/// Number of words with |c| > cutoff. The identity counts as a term.
std::size_t term_count(const PauliSum& a, double cutoff = kReportCutoff);
/// |words(a) ∪ words(b)| after dropping |c| <= cutoff in each.
std::size_t unique_union_count(const PauliSum& a, const PauliSum& b,
                               double cutoff = kReportCutoff);

/// max over words of |a_w - b_w|.
double max_coefficient_difference(const PauliSum& a, const PauliSum& b);
inline bool approx_equal(const PauliSum& a, const PauliSum& b, double tolerance = 1e-10) {
  return a.n_qubits() == b.n_qubits() && max_coefficient_difference(a, b) <= tolerance;
}

/// a^k by repeated multiplication; a^0 is the identity.
PauliSum power(const PauliSum& a, unsigned k, double prune = kArithmeticThreshold);

/// Multi-line human-readable listing, one term per line.
std::string to_string(const PauliSum& a);

}  // namespace symproj
