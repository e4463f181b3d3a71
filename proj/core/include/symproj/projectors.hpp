#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symproj/pauli.hpp"

namespace symproj {

enum class Provenance {
  kExact,              ///< idempotent, Hermitian
  kApproximateFilter,  ///< Hermitian, positive semidefinite, not idempotent
  kCyclicSubgroup,     ///< exact on the congruence class of the target
  kGroupSum,           ///< character-weighted sum over group elements
  kIncomplete,         ///< Lowdin product that misses a spin present in the space
};

std::string to_string(Provenance p);

struct Projector {
  PauliSum op;
  Provenance provenance = Provenance::kExact;
  std::string label;
  std::string target;
  /// Number of frequency components expanded (circle integral only).
  std::size_t expansion_terms = 0;

  bool is_exact() const {
    return provenance == Provenance::kExact || provenance == Provenance::kCyclicSubgroup ||
           provenance == Provenance::kGroupSum;
  }
};

/// Distinct eigenvalues plus the one to keep.
struct SpectrumSpec {
  std::vector<double> eigenvalues;
  double target = 0.0;

  /// Sorts, then throws InputError if values repeat (within 1e-12) or the
  /// target is not listed.
  SpectrumSpec(std::vector<double> values, double target_value);
};

/// {0, 1, ..., n_modes}.
std::vector<double> number_spectrum(std::size_t n_modes);
/// S(S+1) for S = 0, 1/2, 1, ..., n_modes/4.
std::vector<double> s2_spectrum(std::size_t n_modes);
/// -n_modes/4, ..., n_modes/4 in steps of 1/2.
std::vector<double> sz_spectrum(std::size_t n_modes);

/// Registers at or below this size get dense validation of caller claims.
inline constexpr std::size_t kValidationQubitCap = 10;

/**
 * prod_{n != j} (O - o_n) / (o_j - o_n).
 *
 * The listed spectrum may be a superset of the true one. On registers of at
 * most kValidationQubitCap qubits an eigenvalue of O missing from the list is
 * an InputError.
 */
Projector lagrange_projector(const PauliSum& op, const SpectrumSpec& spec,
                             const std::string& label = "");

/**
 * (1/2pi) int exp(i phi (O - t)) dphi for O a real sum of commuting words.
 *
 * Each word c_k W_k contributes (1 + W_k)/2 at frequency +c_k and (1 - W_k)/2
 * at -c_k. The frequency-zero part of the product is kept. Frequencies are
 * required to be rational with denominator at most 64 so that the integral
 * over a common period vanishes for all other components.
 */
Projector circle_integral_projector(const PauliSum& op, double target,
                                    const std::string& label = "");

/**
 * (1/M) sum_k chi*(U^k) U^k with U = exp(2 pi i O / (d M)) and
 * chi(U^k) = exp(2 pi i t k / (d M)). Keeps every eigenspace whose
 * eigenvalue is congruent to t modulo d M.
 */
Projector cyclic_subgroup_projector(const PauliSum& op, double target, unsigned order_m,
                                    double scale_d = 1.0, const std::string& label = "");

/// prod_{S_j in annihilate} (S^2 - S_j(S_j+1)) / (S(S+1) - S_j(S_j+1)).
/// Provenance is kExact when the result is idempotent (checked densely on
/// small registers), kIncomplete otherwise.
Projector lowdin_s2_projector(const PauliSum& s2, double target_s,
                              const std::vector<double>& annihilate_s,
                              const std::string& label = "");

/// prod over both lists of (O - o) / (t - o). Each list must hold an even
/// number of values; `below` must lie under the target and `above` over it.
Projector approx_squared_filter(const PauliSum& op, double target,
                                const std::vector<double>& annihilate_below,
                                const std::vector<double>& annihilate_above,
                                const std::string& label = "");

/// Product of pairwise commuting projectors. Throws NumericalError otherwise.
Projector compose_commuting(const std::vector<Projector>& projectors);

/// Lowest eigenvalue of h in range(p). Throws InputError for filters.
double sector_ground_energy(const PauliSum& h, const Projector& p);

/// Dense checks used by validation: ||P^2 - P||, ||P - P^+||, ||[H, P]||
/// (Frobenius norms).
struct ProjectorLaws {
  double idempotency = 0.0;
  double hermiticity = 0.0;
  double commutation = 0.0;
};
ProjectorLaws projector_laws(const PauliSum& p, const PauliSum& h);

/**
 * Basis of {O = sum a_i W_i : [H, O] = 0} over the non-identity words on
 * `support`, with real a. The nullspace comes from an SVD at `tolerance`
 * and is returned in reduced row echelon form.
 */
std::vector<PauliSum> low_qubit_symmetry_search(const PauliSum& h,
                                                const std::vector<std::size_t>& support,
                                                double tolerance = 1e-10);

}  // namespace symproj
