#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symproj/pauli.hpp"

namespace symproj {

/// Placement of spin-orbitals on modes.
///   kInterleaved: (0a, 0b, 1a, 1b, ...)
///   kBlocked:     (0a, 1a, ..., 0b, 1b, ...)
enum class SpinOrdering { kInterleaved, kBlocked };

enum class Spin { kAlpha = 0, kBeta = 1 };

std::size_t spin_orbital_index(std::size_t orbital, Spin spin, std::size_t n_orbitals,
                               SpinOrdering ordering);
std::string to_string(SpinOrdering ordering);
SpinOrdering parse_spin_ordering(const std::string& text);

struct LadderOp {
  std::size_t mode = 0;
  bool dagger = false;
  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

/// Product of ladder operators in the given order (no normal ordering).
struct FermionString {
  Complex coefficient{1.0, 0.0};
  std::vector<LadderOp> ops;
};

/// Linear combination of ladder-operator strings over a fixed set of modes.
class FermionOperator {
 public:
  FermionOperator() = default;
  explicit FermionOperator(std::size_t n_modes) : n_modes_(n_modes) {}

  static FermionOperator identity(std::size_t n_modes, Complex coefficient = 1.0);

  std::size_t n_modes() const { return n_modes_; }
  const std::vector<FermionString>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Appends `coefficient * ops`. Throws DimensionError for modes >= n_modes.
  void add_term(Complex coefficient, std::vector<LadderOp> ops);

  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator*=(Complex scalar);

  /// Reverses every string, flips daggers and conjugates coefficients.
  FermionOperator adjoint() const;

 private:
  std::size_t n_modes_ = 0;
  std::vector<FermionString> terms_;
};

FermionOperator operator+(FermionOperator a, const FermionOperator& b);
FermionOperator operator*(FermionOperator a, Complex scalar);
/// String concatenation product; term count is |a| * |b|.
FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

/**
 * One- and two-electron integrals over spatial orbitals.
 *
 * `two_body` is stored in physicists' order, two_body(p,q,r,s) = <pq|rs> =
 * (pr|qs) in chemists' notation. Spin-orbital expansion happens when the
 * Hamiltonian is built.
 */
class MolecularIntegrals {
 public:
  MolecularIntegrals() = default;
  explicit MolecularIntegrals(std::size_t n_orbitals);

  std::size_t n_orbitals() const { return n_orbitals_; }
  std::size_t n_spin_orbitals() const { return 2 * n_orbitals_; }

  double& one_body(std::size_t p, std::size_t q) { return h_[p * n_orbitals_ + q]; }
  double one_body(std::size_t p, std::size_t q) const { return h_[p * n_orbitals_ + q]; }
  double& two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return g_[((p * n_orbitals_ + q) * n_orbitals_ + r) * n_orbitals_ + s];
  }
  double two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return g_[((p * n_orbitals_ + q) * n_orbitals_ + r) * n_orbitals_ + s];
  }

  double core_energy = 0.0;
  int n_electrons = 0;
  int ms2 = 0;
  /// Irrep index per spatial orbital (FCIDUMP ORBSYM convention), may be empty.
  std::vector<int> orbital_irreps;

  /// Throws InputError if h is not symmetric or g lacks the real 8-fold
  /// permutational symmetry, each within `tolerance`.
  void validate(double tolerance = 1e-10) const;

 private:
  std::size_t n_orbitals_ = 0;
  std::vector<double> h_;
  std::vector<double> g_;
};

/// sum h_pq a+_p a_q + 1/2 sum g_pqrs a+_p a+_q a_s a_r + core * 1 over spin-orbitals.
FermionOperator build_hamiltonian(const MolecularIntegrals& ints,
                                  SpinOrdering ordering = SpinOrdering::kInterleaved);

/// sum_p a+_p a_p over all modes.
FermionOperator number_operator(std::size_t n_modes);
/// 1/2 sum_p (n_pa - n_pb). Throws InputError for odd `n_modes`.
FermionOperator sz_operator(std::size_t n_modes, SpinOrdering ordering = SpinOrdering::kInterleaved);
/// sum_p a+_pa a_pb.
FermionOperator splus_operator(std::size_t n_modes,
                               SpinOrdering ordering = SpinOrdering::kInterleaved);
/// sum_p a+_pb a_pa.
FermionOperator sminus_operator(std::size_t n_modes,
                                SpinOrdering ordering = SpinOrdering::kInterleaved);
/// S- S+ + Sz^2 + Sz.
FermionOperator s2_operator(std::size_t n_modes, SpinOrdering ordering = SpinOrdering::kInterleaved);

struct RotationGeneratorOptions {
  /// Treat `kappa` as a spatial-orbital matrix and apply it to both spins.
  bool spin_duplicate = false;
  SpinOrdering ordering = SpinOrdering::kInterleaved;
  /// Total modes; defaults to kappa.rows() (x2 when spin_duplicate).
  std::optional<std::size_t> n_modes;
};

/**
 * kappa_hat = sum_i kappa_ii a+_i a_i
 *           - sum_{i<j} ( Re k_ij (a+_j a_i - a+_i a_j) - i Im k_ij (a+_i a_j + a+_j a_i) ).
 *
 * Equal to sum_ij kappa_ij a+_i a_j for anti-Hermitian kappa. Throws
 * InputError if kappa is not anti-Hermitian within 1e-10.
 */
FermionOperator orbital_rotation_generator(const Eigen::MatrixXcd& kappa,
                                           const RotationGeneratorOptions& options = {});

/// Dense matrix of a fermion operator on the 2^n occupation-number basis,
/// built directly from creation/annihilation rules (basis index bit p = n_p).
Eigen::MatrixXcd fock_matrix(const FermionOperator& op);

}  // namespace symproj
