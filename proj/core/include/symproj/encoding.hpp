#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symproj/fermion.hpp"
#include "symproj/pauli.hpp"

namespace symproj {

enum class EncodingKind { kJordanWigner, kParity, kBravyiKitaev };

std::string to_string(EncodingKind kind);
/// Accepts "jw", "parity", "bk" (case-insensitive).
EncodingKind parse_encoding_kind(const std::string& text);

/// Qubit index sets of one mode. All sets exclude the mode itself except
/// `flip_with_self`.
struct IndexSets {
  std::vector<std::size_t> update;          ///< U(k): other qubits storing mode k
  std::vector<std::size_t> flip;            ///< F(k): qubits whose parity with k gives n_k
  std::vector<std::size_t> parity;          ///< P(k): qubits whose parity gives sum_{m<k} n_m
  std::vector<std::size_t> flip_with_self;  ///< F(k) ∪ {k}
};

std::uint64_t to_mask(const std::vector<std::size_t>& qubits);
std::vector<std::size_t> from_mask(std::uint64_t mask);

/**
 * Linear binary fermion-to-qubit map b = A n (mod 2).
 *
 * Row q of A lists the modes whose occupation parity qubit q stores:
 * identity for Jordan-Wigner, lower-triangular ones for parity and the
 * Fenwick tree for Bravyi-Kitaev (any register size).
 */
class Encoding {
 public:
  Encoding(EncodingKind kind, std::size_t n_qubits);

  EncodingKind kind() const { return kind_; }
  std::size_t n_qubits() const { return n_; }

  /// Row q of A as a mode mask.
  std::uint64_t transform_row(std::size_t qubit) const { return rows_.at(qubit); }
  /// Row k of A^{-1} as a qubit mask: n_k is the parity of these qubits.
  std::uint64_t inverse_row(std::size_t mode) const { return inv_rows_.at(mode); }

  IndexSets index_sets(std::size_t mode) const;

  /// Qubit bitstring of an occupation bitstring.
  std::uint64_t encode_occupation(std::uint64_t occupation) const;

  const PauliSum& creation(std::size_t mode) const { return creation_.at(mode); }
  const PauliSum& annihilation(std::size_t mode) const { return annihilation_.at(mode); }

 private:
  EncodingKind kind_;
  std::size_t n_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> inv_rows_;
  std::vector<PauliSum> creation_;
  std::vector<PauliSum> annihilation_;
};

/// Replaces every ladder operator by its Pauli form. Pruned at the arithmetic
/// threshold. Throws DimensionError if mode and qubit counts differ.
PauliSum encode_operator(const FermionOperator& op, const Encoding& enc);

enum class ClosedFormSymbol { kNumber, kSz, kSplus };

/**
 * Index-set closed forms, built without touching ladder operators:
 *   N  = N_q/2 - 1/2 sum_k z_{F(k)∪k}
 *   Sz = 1/4 sum_p (z_{F(b)∪b} - z_{F(a)∪a})
 *   S+ = 1/4 sum_p (x - iy)_a z_{(a,b)} (x + iy)_b              Jordan-Wigner
 *   S+ = 1/4 sum_p (1 - z_{F(b)∪b \ a}) (x - iy)_a               Bravyi-Kitaev, interleaved
 * where a, b are the alpha and beta modes of orbital p. Throws InputError for
 * S+ under other encodings and for odd registers with spin symbols.
 */
PauliSum closed_form(ClosedFormSymbol symbol, const Encoding& enc,
                     SpinOrdering ordering = SpinOrdering::kInterleaved);

/// Qubits that were substituted by a +-1 eigenvalue and the old -> new index map.
struct ReductionRecord {
  std::size_t original_qubits = 0;
  std::vector<std::pair<std::size_t, int>> removed;
  /// new_index[old] or -1 for removed qubits.
  std::vector<int> new_index;

  std::size_t reduced_qubits() const { return original_qubits - removed.size(); }
};

/// Qubits on which every term acts as z or identity.
std::vector<std::size_t> detect_stationary_qubits(const PauliSum& op);

/**
 * Substitutes z_q -> value on each listed qubit and compacts the register.
 * Throws StationarityError naming the first term that acts with X or Y on a
 * listed qubit, InputError for values other than +-1 or repeated qubits.
 */
std::pair<PauliSum, ReductionRecord> reduce_stationary_qubits(
    const PauliSum& op, const std::vector<std::pair<std::size_t, int>>& assignment);

/// Applies an existing record to another operator on the same register.
PauliSum apply_reduction(const PauliSum& op, const ReductionRecord& record);

/// Eigenvalue of z_q on the qubit image of an occupation bitstring, for each
/// listed qubit.
std::vector<std::pair<std::size_t, int>> sector_from_occupation(
    const Encoding& enc, std::uint64_t occupation, const std::vector<std::size_t>& qubits);

/// Lowest eigenvalue of `op` for every +-1 assignment of the listed stationary
/// qubits, ordered by assignment bit pattern (bit i set = qubit i takes -1).
struct SectorEnergy {
  std::vector<std::pair<std::size_t, int>> assignment;
  double ground_energy = 0.0;
};
std::vector<SectorEnergy> sector_ground_energies(const PauliSum& op,
                                                 const std::vector<std::size_t>& qubits);

}  // namespace symproj
