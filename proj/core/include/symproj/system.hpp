#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symproj/encoding.hpp"
#include "symproj/fermion.hpp"
#include "symproj/pauli.hpp"
#include "symproj/pointgroup.hpp"
#include "symproj/projectors.hpp"

namespace symproj {

struct NumberSymmetryConfig {
  double target = 0.0;
  std::vector<double> spectrum;
  /// Eigenvalues annihilated by the squared filter, above and below the target.
  std::vector<double> filter_above;
  std::vector<double> filter_below;
};

struct SpinSymmetryConfig {
  double target_s = 0.0;
  std::vector<double> annihilate_s;
  /// S(S+1) values present in the space.
  std::vector<double> spectrum;
};

struct LowQubitConfig {
  double target = 0.0;
  std::vector<std::size_t> support;
};

/**
 * Fixture bundle description: a manifest.json next to one FCIDUMP per grid
 * point. Symmetry sections are optional; "s2*" keys give spin projectors.
 */
struct Manifest {
  std::string directory;
  std::string molecule;
  std::string basis;
  EncodingKind encoding = EncodingKind::kJordanWigner;
  SpinOrdering ordering = SpinOrdering::kInterleaved;
  double reference_geometry = 0.0;
  std::vector<std::size_t> stationary_qubits;
  /// Explicit +-1 values for the removed qubits; derived from the
  /// Hartree-Fock determinant when empty.
  std::vector<std::pair<std::size_t, int>> sector;
  std::optional<std::string> point_group;
  std::optional<NumberSymmetryConfig> number;
  std::map<std::string, SpinSymmetryConfig> spin;
  std::optional<double> sz_target;
  std::optional<std::string> irrep_target;
  std::optional<LowQubitConfig> low_qubit;
  std::vector<std::string> entanglers;

  struct Point {
    double coordinate = 0.0;
    std::string file;
    std::vector<std::string> orbital_irreps;
  };
  std::vector<Point> points;

  std::vector<double> grid() const;
  /// Grid point within 1e-6 of `coordinate`; InputError otherwise.
  const Point& point(double coordinate) const;
  std::string path_of(const Point& p) const;
};

Manifest load_manifest(const std::string& path);

/**
 * One geometry of a fixture bundle, encoded and tapered.
 *
 * Operators on the full register carry the `_full` suffix; everything else
 * lives on the register left after fixing the manifest's stationary qubits to
 * their Hartree-Fock eigenvalues.
 */
class MolecularSystem {
 public:
  MolecularSystem(const Manifest& manifest, double coordinate);
  static MolecularSystem load(const std::string& manifest_path, double coordinate);
  static MolecularSystem load(const std::string& manifest_path);

  const Manifest& manifest() const { return manifest_; }
  double coordinate() const { return coordinate_; }
  const MolecularIntegrals& integrals() const { return ints_; }
  const Encoding& encoding() const { return enc_; }
  const ReductionRecord& reduction() const { return record_; }
  std::uint64_t hf_occupation() const { return hf_occupation_; }
  /// Hartree-Fock determinant on the reduced register.
  std::uint64_t hf_bits() const { return hf_bits_; }
  std::size_t n_qubits() const { return record_.reduced_qubits(); }
  const std::vector<std::string>& orbital_irreps() const { return irreps_; }

  const PauliSum& hamiltonian_full() const { return h_full_; }
  const PauliSum& hamiltonian() const { return h_; }
  const PauliSum& number() const { return n_; }
  const PauliSum& sz() const { return sz_; }
  const PauliSum& s2() const { return s2_; }
  /// N + 2 Sz, twice the alpha-electron count.
  PauliSum low_qubit_operator() const;
  /// Reduced abelian point-group elements; empty without a point group.
  const std::map<std::string, PauliSum>& group_elements() const { return elements_; }
  std::vector<PauliWord> entanglers() const;

  /// Targets default to the manifest's.
  Projector number_projector(std::optional<double> target = std::nullopt) const;
  Projector number_filter(std::optional<double> target = std::nullopt) const;
  /// Lowdin projector of a manifest spin section.
  Projector spin_projector(const std::string& key = "s2") const;
  /// Lowdin projector onto spin `s` annihilating every other spin of the
  /// reduced S^2 spectrum.
  Projector spin_projector_for(double s) const;
  Projector irrep_projector(const std::optional<std::string>& irrep = std::nullopt) const;
  /// Lagrange projector of the low-qubit operator over its dense spectrum.
  Projector low_qubit_projector(std::optional<double> target = std::nullopt) const;

 private:
  Manifest manifest_;
  double coordinate_;
  MolecularIntegrals ints_;
  Encoding enc_;
  ReductionRecord record_;
  std::uint64_t hf_occupation_ = 0;
  std::uint64_t hf_bits_ = 0;
  std::vector<std::string> irreps_;
  PauliSum h_full_, h_, n_, sz_, s2_;
  std::map<std::string, PauliSum> elements_;
};

}  // namespace symproj
