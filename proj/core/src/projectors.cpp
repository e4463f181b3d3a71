#include "symproj/projectors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "symproj/errors.hpp"
#include "symproj/simulator.hpp"

namespace symproj {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kExact: return "exact";
    case Provenance::kApproximateFilter: return "approximate-filter";
    case Provenance::kCyclicSubgroup: return "cyclic-subgroup";
    case Provenance::kGroupSum: return "group-sum";
    case Provenance::kIncomplete: return "incomplete";
  }
  return "?";
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Real coefficients of a Hermitian operator; throws otherwise.
void require_hermitian(const PauliSum& op, const char* what) {
  if (!op.is_hermitian()) throw InputError(std::string(what) + " must be Hermitian");
}

// (O - o) / (t - o) accumulated into `acc`.
void multiply_factor(PauliSum& acc, const PauliSum& op, double o, double t) {
  const double denom = t - o;
  if (std::abs(denom) < 1e-12)
    throw InputError("zero denominator: target " + fmt(t) + " coincides with " + fmt(o));
  PauliSum factor = op - PauliSum::identity(op.n_qubits(), o);
  factor *= 1.0 / denom;
  acc = multiply(acc, factor);
}

void require_commuting_words(const PauliSum& op) {
  const auto terms = op.sorted_terms();
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (!terms[i].first.commutes_with(terms[j].first))
        throw InputError("words '" + terms[i].first.to_string() + "' and '" +
                         terms[j].first.to_string() + "' do not commute");
}

}  // namespace

SpectrumSpec::SpectrumSpec(std::vector<double> values, double target_value)
    : eigenvalues(std::move(values)), target(target_value) {
  std::sort(eigenvalues.begin(), eigenvalues.end());
  for (std::size_t i = 1; i < eigenvalues.size(); ++i)
    if (eigenvalues[i] - eigenvalues[i - 1] < 1e-12)
      throw InputError("repeated eigenvalue " + fmt(eigenvalues[i]) + " in spectrum");
  const bool listed = std::any_of(eigenvalues.begin(), eigenvalues.end(),
                                  [&](double v) { return std::abs(v - target) < 1e-12; });
  if (!listed) throw InputError("target " + fmt(target) + " is not in the spectrum");
}

std::vector<double> number_spectrum(std::size_t n_modes) {
  std::vector<double> out;
  for (std::size_t k = 0; k <= n_modes; ++k) out.push_back(static_cast<double>(k));
  return out;
}

std::vector<double> s2_spectrum(std::size_t n_modes) {
  std::vector<double> out;
  const double s_max = static_cast<double>(n_modes) / 4.0;
  for (double s = 0.0; s <= s_max + 1e-12; s += 0.5) out.push_back(s * (s + 1.0));
  return out;
}

std::vector<double> sz_spectrum(std::size_t n_modes) {
  std::vector<double> out;
  const double m = static_cast<double>(n_modes) / 4.0;
  for (double s = -m; s <= m + 1e-12; s += 0.5) out.push_back(s);
  return out;
}

Projector lagrange_projector(const PauliSum& op, const SpectrumSpec& spec,
                             const std::string& label) {
  require_hermitian(op, "symmetry operator");
  if (op.n_qubits() <= kValidationQubitCap) {
    const Eigen::VectorXd ev = exact_diagonalize(op).values;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      const bool listed = std::any_of(spec.eigenvalues.begin(), spec.eigenvalues.end(),
                                      [&](double v) { return std::abs(v - ev(i)) < 1e-8; });
      if (!listed)
        throw InputError("eigenvalue " + fmt(ev(i)) + " of " + (label.empty() ? "operator" : label) +
                         " is missing from the spectrum");
    }
  }
  PauliSum acc = PauliSum::identity(op.n_qubits());
  for (double o : spec.eigenvalues)
    if (std::abs(o - spec.target) >= 1e-12) multiply_factor(acc, op, o, spec.target);
  return {acc.prune(), Provenance::kExact, label, fmt(spec.target), 0};
}

Projector circle_integral_projector(const PauliSum& op, double target, const std::string& label) {
  require_hermitian(op, "symmetry operator");
  require_commuting_words(op);
  const std::size_t n = op.n_qubits();

  struct Component {
    double frequency;
    PauliSum op;
  };
  constexpr double kKeyScale = 1e8;
  auto key = [&](double f) { return std::llround(f * kKeyScale); };

  const double offset = op.coefficient(PauliWord(n)).real() - target;
  std::map<long long, Component> cur;
  cur.emplace(key(offset), Component{offset, PauliSum::identity(n)});
  for (const auto& [w, c] : op.sorted_terms()) {
    if (w.is_identity()) continue;
    const double ck = c.real();
    const PauliSum plus = 0.5 * (PauliSum::identity(n) + PauliSum(w));
    const PauliSum minus = 0.5 * (PauliSum::identity(n) - PauliSum(w));
    std::map<long long, Component> next;
    for (const auto& [k, comp] : cur) {
      for (int s : {+1, -1}) {
        const double f = comp.frequency + s * ck;
        PauliSum term = multiply(comp.op, s > 0 ? plus : minus);
        if (term.empty()) continue;
        auto [it, inserted] = next.try_emplace(key(f), Component{f, PauliSum(n)});
        it->second.op += term;
      }
    }
    cur.clear();
    for (auto& [k, comp] : next)
      if (!comp.op.prune().empty()) cur.emplace(k, std::move(comp));
  }

  // Every nonzero frequency must vanish over a common period 2 pi q.
  bool rational = false;
  for (int q = 1; q <= 64 && !rational; ++q) {
    rational = std::all_of(cur.begin(), cur.end(), [&](const auto& kv) {
      const double scaled = kv.second.frequency * q;
      return std::abs(scaled - std::round(scaled)) < 1e-8;
    });
  }
  if (!rational) throw NumericalError("frequencies are not rational within tolerance");

  std::size_t expansion = std::size_t{1} << std::min<std::size_t>(op.size(), 63);
  if (op.coefficient(PauliWord(n)) != 0.0) expansion >>= 1;
  Projector p{PauliSum(n), Provenance::kExact, label, fmt(target), expansion};
  if (auto it = cur.find(0); it != cur.end()) p.op = it->second.op.pruned();
  return p;
}

Projector cyclic_subgroup_projector(const PauliSum& op, double target, unsigned order_m,
                                    double scale_d, const std::string& label) {
  require_hermitian(op, "symmetry operator");
  require_commuting_words(op);
  if (order_m == 0) throw InputError("cyclic subgroup order must be positive");
  if (!(scale_d > 0.0)) throw InputError("cyclic subgroup scale must be positive");
  const std::size_t n = op.n_qubits();
  const double theta = 2.0 * std::numbers::pi / (scale_d * order_m);
  const double c0 = op.coefficient(PauliWord(n)).real();

  PauliSum acc(n);
  for (unsigned k = 0; k < order_m; ++k) {
    const double a = theta * k;
    // U^k = exp(i a O) factorizes over commuting words.
    PauliSum uk = PauliSum::identity(n, std::polar(1.0, a * (c0 - target)));
    for (const auto& [w, c] : op.sorted_terms()) {
      if (w.is_identity()) continue;
      const double phi = a * c.real();
      PauliSum factor = PauliSum::identity(n, std::cos(phi));
      factor.add_term(w, Complex(0.0, std::sin(phi)));
      uk = multiply(uk, factor);
    }
    acc += uk;
  }
  acc *= 1.0 / order_m;
  return {acc.prune(), Provenance::kCyclicSubgroup, label, fmt(target), 0};
}

Projector lowdin_s2_projector(const PauliSum& s2, double target_s,
                              const std::vector<double>& annihilate_s, const std::string& label) {
  require_hermitian(s2, "S^2");
  const double t = target_s * (target_s + 1.0);
  PauliSum acc = PauliSum::identity(s2.n_qubits());
  for (double s : annihilate_s) {
    if (std::abs(s - target_s) < 1e-12) throw InputError("target spin is in the annihilation list");
    multiply_factor(acc, s2, s * (s + 1.0), t);
  }
  acc.prune();
  const bool idempotent = max_coefficient_difference(multiply(acc, acc), acc) < 1e-10;
  return {acc, idempotent ? Provenance::kExact : Provenance::kIncomplete, label,
          "S=" + fmt(target_s), 0};
}

Projector approx_squared_filter(const PauliSum& op, double target,
                                const std::vector<double>& annihilate_below,
                                const std::vector<double>& annihilate_above,
                                const std::string& label) {
  require_hermitian(op, "symmetry operator");
  if (annihilate_below.size() % 2 != 0 || annihilate_above.size() % 2 != 0)
    throw InputError("filter annihilation lists need even cardinality");
  for (double o : annihilate_below)
    if (!(o < target)) throw InputError("value " + fmt(o) + " is not below the target");
  for (double o : annihilate_above)
    if (!(o > target)) throw InputError("value " + fmt(o) + " is not above the target");
  PauliSum acc = PauliSum::identity(op.n_qubits());
  for (double o : annihilate_below) multiply_factor(acc, op, o, target);
  for (double o : annihilate_above) multiply_factor(acc, op, o, target);
  acc.prune();
  if (op.n_qubits() <= kValidationQubitCap) {
    const double lowest = exact_diagonalize(acc).values(0);
    if (lowest < -1e-10)
      throw NumericalError("filter is not positive semidefinite (eigenvalue " + fmt(lowest) + ")");
  }
  return {acc, Provenance::kApproximateFilter, label, fmt(target), 0};
}

Projector compose_commuting(const std::vector<Projector>& projectors) {
  if (projectors.empty()) throw InputError("nothing to compose");
  for (std::size_t i = 0; i < projectors.size(); ++i)
    for (std::size_t j = i + 1; j < projectors.size(); ++j) {
      const PauliSum c = commutator(projectors[i].op, projectors[j].op);
      if (!c.empty() && c.one_norm() > 1e-10)
        throw NumericalError("projectors '" + projectors[i].label + "' and '" +
                             projectors[j].label + "' do not commute");
    }
  Projector out = projectors.front();
  for (std::size_t i = 1; i < projectors.size(); ++i) {
    const Projector& p = projectors[i];
    out.op = multiply(out.op, p.op);
    out.label += "*" + p.label;
    out.target += "," + p.target;
    if (!p.is_exact() || !out.is_exact())
      out.provenance = (p.provenance == Provenance::kApproximateFilter ||
                        out.provenance == Provenance::kApproximateFilter)
                           ? Provenance::kApproximateFilter
                           : Provenance::kIncomplete;
    else if (p.provenance != out.provenance)
      out.provenance = Provenance::kExact;
  }
  out.op.prune();
  out.expansion_terms = 0;
  return out;
}

double sector_ground_energy(const PauliSum& h, const Projector& p) {
  if (!p.is_exact())
    throw InputError("sector energies need an exact projector, got " + to_string(p.provenance));
  return sector_ground_energy(h, p.op);
}

ProjectorLaws projector_laws(const PauliSum& p, const PauliSum& h) {
  const Eigen::MatrixXcd pd = to_dense(p);
  const Eigen::MatrixXcd hd = to_dense(h);
  return {(pd * pd - pd).norm(), (pd - pd.adjoint()).norm(), (hd * pd - pd * hd).norm()};
}
}  // namespace symproj
