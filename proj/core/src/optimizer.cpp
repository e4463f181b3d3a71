#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <thread>

#include "symproj/errors.hpp"
#include "symproj/vqe.hpp"

namespace symproj {

namespace {

struct SimplexOutcome {
  bool converged = false;
  std::size_t iterations = 0;
};

// One downhill-simplex run from a fresh axis-aligned simplex around x0.
SimplexOutcome run_simplex(const std::function<double(const std::vector<double>&)>& f,
                           const std::vector<double>& x0, const OptimizerConfig& cfg,
                           NelderMeadResult& out) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  auto eval = [&](const std::vector<double>& x) {
    ++out.evaluations;
    return f(x);
  };
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += cfg.initial_step;
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto point_along = [&](double t, std::vector<double>& dst, const std::vector<double>& worst) {
    for (std::size_t k = 0; k < n; ++k) dst[k] = centroid[k] + t * (worst[k] - centroid[k]);
  };

  SimplexOutcome res;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
    if (out.history.empty() || vals[best] <= out.history.back()) out.history.push_back(vals[best]);
    else out.history.push_back(out.history.back());

    double f_spread = 0.0, x_spread = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      f_spread = std::max(f_spread, std::abs(vals[i] - vals[best]));
      for (std::size_t k = 0; k < n; ++k)
        x_spread = std::max(x_spread, std::abs(pts[i][k] - pts[best][k]));
    }
    if (f_spread <= cfg.f_tolerance && x_spread <= cfg.x_tolerance) {
      res.converged = true;
      break;
    }
    if (out.evaluations >= cfg.max_evaluations) {
      res.converged = f_spread <= cfg.f_tolerance;
      break;
    }
    ++res.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != worst)
        for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / static_cast<double>(n);

    point_along(-1.0, trial, pts[worst]);
    const double fr = eval(trial);
    if (fr < vals[best]) {
      point_along(-2.0, trial2, pts[worst]);
      const double fe = eval(trial2);
      if (fe < fr) {
        pts[worst] = trial2;
        vals[worst] = fe;
      } else {
        pts[worst] = trial;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = trial;
      vals[worst] = fr;
      continue;
    }
    // Outside contraction if the reflection beat the worst vertex, inside otherwise.
    const bool outside = fr < vals[worst];
    point_along(outside ? -0.5 : 0.5, trial2, pts[worst]);
    const double fc = eval(trial2);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = trial2;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
      vals[i] = eval(pts[i]);
    }
  }
  const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) -
                                             vals.begin());
  out.x = pts[best];
  out.f = vals[best];
  return res;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const OptimizerConfig& config) {
  if (x0.empty()) throw InputError("nothing to optimize");
  NelderMeadResult out;
  out.x = x0;
  out.f = std::numeric_limits<double>::infinity();
  for (int round = 0; round < 4; ++round) {
    const double before = out.f;
    const SimplexOutcome r = run_simplex(f, out.x, config, out);
    out.iterations += r.iterations;
    out.converged = r.converged;
    if (!r.converged || out.evaluations >= config.max_evaluations) break;
    if (std::isfinite(before) && before - out.f <= config.f_tolerance) break;
  }
  return out;
}

OptResult optimize(const Functional& functional, const AnsatzTemplate& ansatz,
                   const OptimizerConfig& config) {
  if (config.restarts == 0 && config.initial_points.empty())
    throw InputError("optimizer needs at least one start");
  const std::size_t dim = ansatz.n_parameters();
  auto objective = [&](const std::vector<double>& x) {
    try {
      return functional(ansatz.state(x));
    } catch (const SectorCollapseError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> theta(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> phi(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> tau(-std::numbers::pi / 2, std::numbers::pi / 2);

  std::vector<std::vector<double>> starts = config.initial_points;
  for (const auto& s : starts)
    if (s.size() != dim) throw DimensionError("initial point has wrong length");
  for (unsigned r = 0; r < config.restarts; ++r) {
    std::vector<double> x(dim);
    for (std::size_t q = 0; q < ansatz.n_qubits; ++q) {
      x[q] = theta(rng);
      x[ansatz.n_qubits + q] = phi(rng);
    }
    for (std::size_t k = 2 * ansatz.n_qubits; k < dim; ++k) x[k] = tau(rng);
    starts.push_back(std::move(x));
  }

  // Restarts that met the simplex tolerance take precedence; the rest are
  // points on a drift path (typically toward sector collapse).
  OptResult best;
  best.energy = std::numeric_limits<double>::infinity();
  bool found = false;
  std::size_t total_evaluations = 0;
  std::vector<std::optional<NelderMeadResult>> runs(starts.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t lo = 0; lo < starts.size(); lo += workers) {
    std::vector<std::future<void>> batch;
    for (std::size_t i = lo; i < std::min(starts.size(), lo + workers); ++i)
      batch.push_back(std::async(std::launch::async, [&, i] {
        if (std::isfinite(objective(starts[i]))) runs[i] = nelder_mead(objective, starts[i], config);
      }));
    for (auto& f : batch) f.get();
  }
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (!runs[i]) continue;
    const NelderMeadResult& r = *runs[i];
    total_evaluations += r.evaluations;
    if (!std::isfinite(r.f)) continue;
    const bool better = !found || (r.converged && !best.tolerance_met) ||
                        (r.converged == best.tolerance_met && r.f < best.energy);
    if (better) {
      found = true;
      best.energy = r.f;
      best.parameters = r.x;
      best.iterations = r.iterations;
      best.restart_index = i;
      best.tolerance_met = r.converged;
    }
  }
  if (!found) throw SectorCollapseError("every start had no weight in the projected sector");
  best.evaluations = total_evaluations;

  // Reported energy is re-evaluated at the returned parameters.
  const StateVector s = ansatz.state(best.parameters);
  best.energy = functional(s);
  best.hamiltonian_energy = expectation(functional.hamiltonian(), s);
  best.symmetries = symmetry_report(functional.spec().symmetries, s);

  const auto kind = functional.spec().kind;
  best.constraints_met = true;
  if (kind == FunctionalKind::kAveragePenalty || kind == FunctionalKind::kVariancePenalty ||
      kind == FunctionalKind::kProjectorPenalty) {
    for (const auto& rep : best.symmetries)
      if (std::abs(rep.expectation - rep.target) > config.constraint_tolerance ||
          rep.variance > config.constraint_tolerance)
        best.constraints_met = false;
    if (kind == FunctionalKind::kProjectorPenalty &&
        1.0 - expectation(functional.spec().projector->op, s) > config.constraint_tolerance)
      best.constraints_met = false;
  }
  best.converged = best.tolerance_met && best.constraints_met;
  return best;
}

std::vector<ScanRow> pes_scan(const std::vector<double>& grid,
                              const std::function<ScanProblem(double)>& problem,
                              const AnsatzTemplate& ansatz, const OptimizerConfig& config) {
  std::vector<ScanRow> rows;
  std::vector<double> previous;
  for (double r : grid) {
    const ScanProblem p = problem(r);
    const Functional functional(p.spec, p.hamiltonian);
    OptimizerConfig cfg = config;
    if (!previous.empty()) cfg.initial_points.insert(cfg.initial_points.begin(), previous);
    ScanRow row;
    row.coordinate = r;
    row.result = optimize(functional, ansatz, cfg);
    row.exact_energy = p.reference_projector
                           ? sector_ground_energy(p.hamiltonian, *p.reference_projector)
                           : exact_diagonalize(p.hamiltonian).values(0);
    previous = row.result.parameters;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace symproj
