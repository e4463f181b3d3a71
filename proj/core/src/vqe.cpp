#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>

#include "symproj/errors.hpp"
#include "symproj/vqe.hpp"

namespace symproj {

QmfParams QmfParams::zeros(std::size_t n_qubits) {
  return {std::vector<double>(n_qubits, 0.0), std::vector<double>(n_qubits, 0.0)};
}

QmfParams QmfParams::from_bits(std::size_t n_qubits, std::uint64_t bits) {
  QmfParams p = zeros(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q)
    if (bits >> q & 1) p.theta[q] = std::numbers::pi;
  return p;
}

StateVector qmf_state(const QmfParams& qmf) {
  const std::size_t n = qmf.n_qubits();
  if (qmf.phi.size() != n) throw DimensionError("theta and phi lengths differ");
  Eigen::VectorXcd amps(Eigen::Index{1} << n);
  amps(0) = 1.0;
  Eigen::Index filled = 1;
  for (std::size_t q = 0; q < n; ++q) {
    const Complex a0 = std::cos(qmf.theta[q] / 2);
    const Complex a1 = std::polar(std::sin(qmf.theta[q] / 2), qmf.phi[q]);
    for (Eigen::Index b = 0; b < filled; ++b) {
      amps(b + filled) = amps(b) * a1;
      amps(b) *= a0;
    }
    filled *= 2;
  }
  return StateVector(n, std::move(amps));
}

StateVector apply_entangler(const PauliWord& w, double tau, const StateVector& s) {
  const StateVector ws = apply(PauliSum(w), s);
  return StateVector(s.n_qubits(), std::cos(tau) * s.amplitudes() +
                                       Complex(0.0, std::sin(tau)) * ws.amplitudes());
}

StateVector build_state(const QmfParams& qmf, const std::optional<QccAnsatz>& qcc) {
  StateVector s = qmf_state(qmf);
  if (!qcc) return s;
  if (qcc->entanglers.size() != qcc->tau.size())
    throw DimensionError("entangler and amplitude counts differ");
  for (std::size_t k = qcc->entanglers.size(); k-- > 0;) {
    if (qcc->entanglers[k].n_qubits() != qmf.n_qubits())
      throw DimensionError("entangler register differs from the mean-field register");
    s = apply_entangler(qcc->entanglers[k], qcc->tau[k], s);
  }
  return s;
}

std::string to_string(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::kPlain: return "plain";
    case FunctionalKind::kAveragePenalty: return "average";
    case FunctionalKind::kVariancePenalty: return "variance";
    case FunctionalKind::kProjectorPenalty: return "projector-penalty";
    case FunctionalKind::kVapExact: return "vap";
    case FunctionalKind::kVapFilter: return "vap-filter";
  }
  return "?";
}

FunctionalKind parse_functional_kind(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "plain") return FunctionalKind::kPlain;
  if (t == "average" || t == "average-penalty") return FunctionalKind::kAveragePenalty;
  if (t == "variance" || t == "variance-penalty") return FunctionalKind::kVariancePenalty;
  if (t == "projector-penalty") return FunctionalKind::kProjectorPenalty;
  if (t == "vap" || t == "vap-exact") return FunctionalKind::kVapExact;
  if (t == "vap-filter") return FunctionalKind::kVapFilter;
  throw InputError("unknown functional '" + text + "'");
}

Functional::Functional(FunctionalSpec spec, PauliSum h) : spec_(std::move(spec)), h_(std::move(h)) {
  const std::size_t n = h_.n_qubits();
  if (!h_.is_hermitian()) throw InputError("Hamiltonian is not Hermitian");
  for (const auto& s : spec_.symmetries)
    if (s.op.n_qubits() != n) throw DimensionError("symmetry '" + s.label + "' register differs");
  const bool penalty = spec_.kind == FunctionalKind::kAveragePenalty ||
                       spec_.kind == FunctionalKind::kVariancePenalty ||
                       spec_.kind == FunctionalKind::kProjectorPenalty;
  if (penalty && !(spec_.mu > 0.0)) throw InputError("penalty weight must be positive");
  const bool needs_projector = spec_.kind == FunctionalKind::kProjectorPenalty ||
                               spec_.kind == FunctionalKind::kVapExact ||
                               spec_.kind == FunctionalKind::kVapFilter;
  if (needs_projector) {
    if (!spec_.projector) throw InputError(to_string(spec_.kind) + " needs a projector");
    if (spec_.projector->op.n_qubits() != n) throw DimensionError("projector register differs");
  }

  switch (spec_.kind) {
    case FunctionalKind::kPlain:
    case FunctionalKind::kAveragePenalty: effective_ = h_; break;
    case FunctionalKind::kVariancePenalty: {
      effective_ = h_;
      for (const auto& s : spec_.symmetries) {
        const PauliSum shifted = s.op - PauliSum::identity(n, s.value);
        effective_ += spec_.mu * multiply(shifted, shifted);
      }
      effective_.prune();
      break;
    }
    case FunctionalKind::kProjectorPenalty:
      effective_ = h_ + spec_.mu * (PauliSum::identity(n) - spec_.projector->op);
      effective_.prune();
      break;
    case FunctionalKind::kVapExact:
    case FunctionalKind::kVapFilter: {
      const PauliSum& p = spec_.projector->op;
      // H and P commute, so the symmetrized product equals H P.
      effective_ = 0.5 * (multiply(h_, p) + multiply(p, h_));
      effective_.prune();
      denominator_ = p;
      break;
    }
  }
}

double Functional::operator()(const StateVector& s) const {
  switch (spec_.kind) {
    case FunctionalKind::kAveragePenalty: {
      double e = expectation(h_, s);
      for (const auto& sym : spec_.symmetries) {
        const double d = expectation(sym.op, s) - sym.value;
        e += spec_.mu * d * d;
      }
      return e;
    }
    case FunctionalKind::kVapExact:
    case FunctionalKind::kVapFilter: {
      const double den = expectation(denominator_, s);
      if (den < spec_.vap_floor)
        throw SectorCollapseError("projected weight " + std::to_string(den) + " below floor");
      return expectation(effective_, s) / den;
    }
    default: return expectation(effective_, s);
  }
}

std::vector<SymmetryReport> symmetry_report(const std::vector<SymmetryTarget>& symmetries,
                                            const StateVector& s) {
  std::vector<SymmetryReport> out;
  for (const auto& sym : symmetries)
    out.push_back({sym.label, sym.value, expectation(sym.op, s), variance(sym.op, s)});
  return out;
}

std::vector<EntanglerGradient> rank_entanglers(const PauliSum& h, const QmfParams& qmf,
                                               const std::vector<PauliWord>& pool) {
  const StateVector s = qmf_state(qmf);
  std::vector<EntanglerGradient> out;
  for (const auto& w : pool) {
    const PauliSum g = Complex(0.0, 1.0) * commutator(h, PauliSum(w));
    out.push_back({w, g.empty() ? 0.0 : expectation(g, s)});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::abs(a.gradient) > std::abs(b.gradient);
  });
  return out;
}

std::vector<PauliWord> odd_y_pool(std::size_t n_qubits, std::size_t max_weight) {
  if (n_qubits > 12) throw DimensionError("odd-y pool enumeration limited to 12 qubits");
  std::vector<PauliWord> out;
  const std::uint64_t limit = std::uint64_t{1} << n_qubits;
  for (std::uint64_t x = 0; x < limit; ++x)
    for (std::uint64_t z = 0; z < limit; ++z) {
      const auto weight = static_cast<std::size_t>(std::popcount(x | z));
      if (weight == 0 || weight > max_weight) continue;
      if (std::popcount(x & z) % 2 == 1) out.emplace_back(n_qubits, x, z);
    }
  std::sort(out.begin(), out.end(), [](const PauliWord& a, const PauliWord& b) {
    return a.weight() != b.weight() ? a.weight() < b.weight() : a < b;
  });
  return out;
}

QmfParams AnsatzTemplate::qmf(const std::vector<double>& params) const {
  if (params.size() != n_parameters()) throw DimensionError("parameter vector has wrong length");
  QmfParams q;
  q.theta.assign(params.begin(), params.begin() + static_cast<std::ptrdiff_t>(n_qubits));
  q.phi.assign(params.begin() + static_cast<std::ptrdiff_t>(n_qubits),
               params.begin() + static_cast<std::ptrdiff_t>(2 * n_qubits));
  return q;
}

std::vector<double> AnsatzTemplate::tau(const std::vector<double>& params) const {
  if (params.size() != n_parameters()) throw DimensionError("parameter vector has wrong length");
  return {params.begin() + static_cast<std::ptrdiff_t>(2 * n_qubits), params.end()};
}

StateVector AnsatzTemplate::state(const std::vector<double>& params) const {
  if (entanglers.empty()) return build_state(qmf(params));
  return build_state(qmf(params), QccAnsatz{entanglers, tau(params)});
}

}  // namespace symproj
