#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "symproj/pauli.hpp"

namespace symproj {

/// Largest register accepted by dense routines.
inline constexpr std::size_t kDenseQubitCap = 14;

/// Amplitudes over 2^n basis states, little-endian: qubit 0 is the least
/// significant bit of the basis index.
class StateVector {
 public:
  StateVector() = default;
  /// |0...0>.
  explicit StateVector(std::size_t n_qubits);
  StateVector(std::size_t n_qubits, Eigen::VectorXcd amplitudes);

  static StateVector basis(std::size_t n_qubits, std::uint64_t index);

  std::size_t n_qubits() const { return n_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

  double norm() const { return amps_.norm(); }
  StateVector normalized() const;
  Complex inner(const StateVector& other) const { return amps_.dot(other.amps_); }

 private:
  std::size_t n_ = 0;
  Eigen::VectorXcd amps_;
};

/// op|s> term by term: W|b> = i^{|x&z|} (-1)^{|z&b|} |b xor x>.
StateVector apply(const PauliSum& op, const StateVector& s);

/// <s|op|s> for Hermitian op and normalized s. Throws NumericalError for a
/// non-Hermitian op or an imaginary residue above 1e-10.
double expectation(const PauliSum& op, const StateVector& s);
/// <s|op op|s> - <s|op|s>^2, clamped at zero when above -1e-12.
double variance(const PauliSum& op, const StateVector& s);
/// <a|op|b> without Hermiticity checks.
Complex matrix_element(const StateVector& a, const PauliSum& op, const StateVector& b);

/// Dense 2^n x 2^n matrix. Throws DimensionError above the qubit cap.
Eigen::MatrixXcd to_dense(const PauliSum& op, std::size_t cap = kDenseQubitCap);

struct Eigensystem {
  Eigen::VectorXd values;    ///< ascending
  Eigen::MatrixXcd vectors;  ///< columns
};

/// Full spectrum of a Hermitian sum. Throws DimensionError above the cap and
/// NumericalError for non-Hermitian input.
Eigensystem exact_diagonalize(const PauliSum& op, std::size_t cap = kDenseQubitCap);

/// Lowest eigenvalue of h inside range(p). Builds an orthonormal basis of the
/// eigenvalue-1 space of p (tolerance 1e-8) and diagonalizes h there. Throws
/// NumericalError if the range is empty or [h, p] != 0.
double sector_ground_energy(const PauliSum& h, const PauliSum& p);

}  // namespace symproj
