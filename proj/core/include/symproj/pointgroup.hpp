#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symproj/encoding.hpp"
#include "symproj/fermion.hpp"
#include "symproj/pauli.hpp"
#include "symproj/projectors.hpp"

namespace symproj {

/// Character table of a finite point group.
struct GroupSpec {
  std::string name;
  std::vector<std::string> elements;
  /// Partition of `elements` into conjugacy classes.
  std::vector<std::vector<std::string>> classes;
  std::vector<std::string> irreps;
  std::vector<int> dimensions;
  /// characters[irrep][class].
  std::vector<std::vector<Complex>> characters;

  std::size_t order() const { return elements.size(); }
  std::size_t irrep_index(const std::string& label) const;
  std::size_t class_of(const std::string& element) const;
  Complex character(const std::string& irrep, const std::string& element) const;

  /// Throws InputError unless |G| = sum d^2, the classes partition the
  /// elements and both character orthogonality relations hold within 1e-12.
  void validate() const;

  /// Elements E, C2, sv(xz), sv(yz); irreps A1, A2, B1, B2.
  static GroupSpec c2v();
  /// Elements E, C3, C3^2, sv, sv', sv''; irreps A1, A2, E.
  static GroupSpec c3v();
};

/// Irrep label for a Molpro-style ORBSYM number (C2v: 1 A1, 2 B1, 3 B2, 4 A2).
std::string c2v_irrep_from_orbsym(int orbsym);

/// Unitary matrices over orbitals, one per group element.
struct OrbitalRep {
  std::map<std::string, Eigen::MatrixXcd> matrices;
  std::vector<std::string> orbital_irreps;

  /// Throws InputError for non-unitary matrices or when a product of two
  /// matrices is not itself in the set (within 1e-10).
  void validate(const GroupSpec& group) const;
};

/// prod over listed modes of (-1)^{n_i}, i.e. z on the XOR of their flip sets.
PauliSum abelian_element(const Encoding& enc, const std::set<std::size_t>& negative_modes);

/// Abelian element for orbitals carrying 1D irreps; both spin-orbitals of an
/// orbital with character -1 are listed.
PauliSum abelian_element(const Encoding& enc, const GroupSpec& group, const std::string& element,
                         const std::vector<std::string>& orbital_irreps,
                         SpinOrdering ordering = SpinOrdering::kInterleaved);

/// Every element of an abelian group from orbital irrep labels.
std::map<std::string, PauliSum> abelian_elements(const Encoding& enc, const GroupSpec& group,
                                                 const std::vector<std::string>& orbital_irreps,
                                                 SpinOrdering ordering = SpinOrdering::kInterleaved);

/// exp(a) by scaling and squaring. Taylor terms stop below `term_tolerance`
/// in one-norm; intermediate products and the result are pruned at `prune`.
PauliSum exponential(const PauliSum& a, double term_tolerance = 1e-14, double prune = 1e-15);

/// kappa = -log(O) with eigenvalues snapped to the unit circle and -1 mapped
/// to kappa eigenvalue i pi. Throws InputError for non-unitary input.
Eigen::MatrixXcd rotation_generator_matrix(const Eigen::MatrixXcd& rep);

/// exp(-encode(kappa_hat)) for kappa = -log(rep). Throws NumericalError if the
/// result is not unitary within 1e-10.
PauliSum element_from_rep(const Eigen::MatrixXcd& rep, const Encoding& enc,
                          const RotationGeneratorOptions& options = {});

/// (d/|G|) sum_classes chi*(class) sum_{g in class} O_g.
Projector group_projector(const GroupSpec& group, const std::map<std::string, PauliSum>& elements,
                          const std::string& irrep);

/**
 * Closed-form C3v projector for an E doublet on even qubits i, j:
 *   (d/6) (chi*(E) + chi*(C3)/2 (1 + 3 z_i z_j) + 3 chi*(sv)/2 (z_i + z_j)).
 * Valid for Bravyi-Kitaev and Jordan-Wigner, where even qubits store a single
 * mode. Throws InputError for odd qubits or other encodings.
 */
Projector c3v_e_block_projector(std::size_t i, std::size_t j, const Encoding& enc,
                                const std::string& irrep);

/// Spin-orbital matrices of the C3v E doublet on modes i, j of an n-mode
/// register, with C3 acting as phi_x -> -1/2 phi_x + sqrt(3)/2 phi_y.
OrbitalRep c3v_e_doublet_rep(std::size_t n_modes, std::size_t i, std::size_t j);

}  // namespace symproj
