#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symproj/pauli.hpp"
#include "symproj/projectors.hpp"
#include "symproj/simulator.hpp"

namespace symproj {

/// Bloch angles of a qubit mean-field product state:
/// cos(theta/2)|0> + sin(theta/2) e^{i phi}|1> on every qubit.
struct QmfParams {
  std::vector<double> theta;
  std::vector<double> phi;

  static QmfParams zeros(std::size_t n_qubits);
  /// theta = pi on the set bits of `bits`.
  static QmfParams from_bits(std::size_t n_qubits, std::uint64_t bits);
  std::size_t n_qubits() const { return theta.size(); }
};

/// exp(i tau_1 W_1) ... exp(i tau_K W_K) applied to the mean-field state, so
/// the last entangler acts first.
struct QccAnsatz {
  std::vector<PauliWord> entanglers;
  std::vector<double> tau;
};

StateVector qmf_state(const QmfParams& qmf);
/// exp(i tau W)|s> = cos(tau)|s> + i sin(tau) W|s>.
StateVector apply_entangler(const PauliWord& w, double tau, const StateVector& s);
StateVector build_state(const QmfParams& qmf, const std::optional<QccAnsatz>& qcc = std::nullopt);

enum class FunctionalKind {
  kPlain,             ///< <H>
  kAveragePenalty,    ///< <H> + mu sum (<O> - o)^2
  kVariancePenalty,   ///< <H> + mu sum <(O - o)^2>
  kProjectorPenalty,  ///< <H> + mu <1 - P>
  kVapExact,          ///< <H P> / <P>
  kVapFilter,         ///< <H F^2> / <F^2>
};

std::string to_string(FunctionalKind kind);
/// plain, average, variance, projector-penalty, vap, vap-filter.
FunctionalKind parse_functional_kind(const std::string& text);

struct SymmetryTarget {
  std::string label;
  PauliSum op;
  double value = 0.0;
};

struct FunctionalSpec {
  FunctionalKind kind = FunctionalKind::kPlain;
  /// Constraint operators for the penalty kinds; reported for every kind.
  std::vector<SymmetryTarget> symmetries;
  double mu = 1000.0;
  /// Projector (exact kinds) or filter for kProjectorPenalty / VAP kinds.
  std::optional<Projector> projector;
  /// Smallest <P> accepted by the VAP kinds.
  double vap_floor = 1e-8;
};

/// Precomputes the operator sums a functional needs so each evaluation costs
/// at most two expectation values plus the constraint terms.
class Functional {
 public:
  Functional(FunctionalSpec spec, PauliSum h);

  const FunctionalSpec& spec() const { return spec_; }
  const PauliSum& hamiltonian() const { return h_; }

  /// Throws SectorCollapseError when a VAP denominator is below the floor.
  double operator()(const StateVector& s) const;

 private:
  FunctionalSpec spec_;
  PauliSum h_;
  PauliSum effective_;   ///< H_c, H + mu (1 - P) or H P
  PauliSum denominator_; ///< P or F^2
};

struct SymmetryReport {
  std::string label;
  double target = 0.0;
  double expectation = 0.0;
  double variance = 0.0;
};

std::vector<SymmetryReport> symmetry_report(const std::vector<SymmetryTarget>& symmetries,
                                            const StateVector& s);

struct EntanglerGradient {
  PauliWord word;
  double gradient = 0.0;  ///< <i [H, W]> on the mean-field state
};

/// Pool sorted by |dE/dtau| at tau = 0, largest first; ties keep pool order.
std::vector<EntanglerGradient> rank_entanglers(const PauliSum& h, const QmfParams& qmf,
                                               const std::vector<PauliWord>& pool);

/// Words with an odd number of Y factors and weight <= max_weight.
std::vector<PauliWord> odd_y_pool(std::size_t n_qubits, std::size_t max_weight = 4);

/// Layout of the flat parameter vector: theta_0..theta_{n-1}, phi_0..phi_{n-1},
/// tau_1..tau_K.
struct AnsatzTemplate {
  std::size_t n_qubits = 0;
  std::vector<PauliWord> entanglers;

  std::size_t n_parameters() const { return 2 * n_qubits + entanglers.size(); }
  StateVector state(const std::vector<double>& params) const;
  QmfParams qmf(const std::vector<double>& params) const;
  std::vector<double> tau(const std::vector<double>& params) const;
};

struct OptimizerConfig {
  unsigned restarts = 24;
  std::uint64_t seed = 20240601;
  std::size_t max_evaluations = 20000;
  double f_tolerance = 1e-12;
  double x_tolerance = 1e-8;
  double initial_step = 0.3;
  /// A symmetry counts as satisfied when |<O> - o| and Var(O) are below this.
  double constraint_tolerance = 1e-4;
  /// Starting points tried before the random ones.
  std::vector<std::vector<double>> initial_points;
};

struct OptResult {
  double energy = 0.0;              ///< functional value at `parameters`
  double hamiltonian_energy = 0.0;  ///< <H> at `parameters`
  std::vector<double> parameters;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  std::size_t restart_index = 0;
  bool tolerance_met = false;
  bool constraints_met = false;
  bool converged = false;
  std::vector<SymmetryReport> symmetries;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;
  /// Best value after each iteration; non-increasing.
  std::vector<double> history;
};

/// Downhill simplex with standard coefficients (1, 2, 1/2, 1/2). Restarts
/// from the best vertex until a restart no longer improves the value.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const OptimizerConfig& config);

/// Best-of-restarts minimization. The lowest restart that met the simplex
/// tolerance wins; the lowest overall is used only when none did. A restart
/// whose functional throws SectorCollapseError at its starting point is skipped.
OptResult optimize(const Functional& functional, const AnsatzTemplate& ansatz,
                   const OptimizerConfig& config);

struct ScanProblem {
  PauliSum hamiltonian;
  FunctionalSpec spec;
  /// Projector defining the exact reference energy; the global minimum if unset.
  std::optional<PauliSum> reference_projector;
};

struct ScanRow {
  double coordinate = 0.0;
  OptResult result;
  double exact_energy = 0.0;
};

/// Optimizes every grid point, warm-starting from the previous point's
/// parameters in addition to the configured restarts.
std::vector<ScanRow> pes_scan(const std::vector<double>& grid,
                              const std::function<ScanProblem(double)>& problem,
                              const AnsatzTemplate& ansatz, const OptimizerConfig& config);

}  // namespace symproj
