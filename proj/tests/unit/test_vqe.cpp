#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "symproj/errors.hpp"
#include "symproj/system.hpp"
#include "symproj/vqe.hpp"

using namespace symproj;

namespace {

Eigen::VectorXcd product_state(const QmfParams& q) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (std::size_t k = q.n_qubits(); k-- > 0;) {
    Eigen::VectorXcd one(2);
    one << std::cos(q.theta[k] / 2), std::sin(q.theta[k] / 2) * std::exp(Complex(0, q.phi[k]));
    oracle::Matrix a = v, b = one;
    v = oracle::kron(a, b);
  }
  return v;
}

QmfParams random_qmf(oracle::Gen& gen, std::size_t n) {
  QmfParams q = QmfParams::zeros(n);
  for (std::size_t k = 0; k < n; ++k) {
    q.theta[k] = gen.real(0, std::numbers::pi);
    q.phi[k] = gen.real(0, 2 * std::numbers::pi);
  }
  return q;
}

double rayleigh(const oracle::Matrix& m, const Eigen::VectorXcd& v) {
  return (v.adjoint() * m * v)(0).real();
}

MolecularSystem h2() { return MolecularSystem::load(std::string(SYMPROJ_FIXTURE_DIR) + "/h2/manifest.json", 1.0); }

}  // namespace

TEST_SUITE("vqe") {

TEST_CASE("functional names") {
  for (FunctionalKind k : {FunctionalKind::kPlain, FunctionalKind::kAveragePenalty,
                           FunctionalKind::kVariancePenalty, FunctionalKind::kProjectorPenalty,
                           FunctionalKind::kVapExact, FunctionalKind::kVapFilter})
    CHECK(parse_functional_kind(to_string(k)) == k);
  CHECK(parse_functional_kind("vap") == FunctionalKind::kVapExact);
  CHECK_THROWS_AS(parse_functional_kind("annealing"), InputError);
}

TEST_CASE("mean-field states are Kronecker products") {
  oracle::Gen gen(71);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gen.integer(1, 6);
    const QmfParams q = random_qmf(gen, n);
    CHECK((qmf_state(q).amplitudes() - product_state(q)).cwiseAbs().maxCoeff() < 1e-13);
  }
  const StateVector hf = qmf_state(QmfParams::from_bits(4, 0b0101));
  CHECK(std::abs(std::abs(hf[5]) - 1.0) < 1e-15);
}

TEST_CASE("entanglers are exponentials of Pauli words") {
  oracle::Gen gen(72);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gen.integer(1, 5);
    const PauliWord w = gen.word(n);
    const double tau = gen.real(-3, 3);
    const Eigen::VectorXcd v = gen.state(n);
    const Eigen::VectorXcd expect = oracle::expm_hermitian_i(oracle::dense(PauliSum(w)), tau) * v;
    CHECK((apply_entangler(w, tau, StateVector(n, v)).amplitudes() - expect).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("the last entangler acts first") {
  oracle::Gen gen(73);
  const std::size_t n = 3;
  const QmfParams q = random_qmf(gen, n);
  QccAnsatz qcc{{PauliWord::parse("X1 Y0", n), PauliWord::parse("Y2 Z0", n)}, {0.4, -0.9}};
  const Eigen::VectorXcd expect =
      oracle::expm_hermitian_i(oracle::dense(PauliSum(qcc.entanglers[0])), 0.4) *
      oracle::expm_hermitian_i(oracle::dense(PauliSum(qcc.entanglers[1])), -0.9) * product_state(q);
  CHECK((build_state(q, qcc).amplitudes() - expect).cwiseAbs().maxCoeff() < 1e-12);

  AnsatzTemplate t{n, qcc.entanglers};
  std::vector<double> params(t.n_parameters());
  for (std::size_t k = 0; k < n; ++k) {
    params[k] = q.theta[k];
    params[n + k] = q.phi[k];
  }
  params[2 * n] = 0.4;
  params[2 * n + 1] = -0.9;
  CHECK((t.state(params).amplitudes() - expect).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(t.tau(params) == std::vector<double>{0.4, -0.9});
}

TEST_CASE("functionals evaluate their defining formulas") {
  oracle::Gen gen(74);
  const std::size_t n = 3;
  const PauliSum h = gen.sum(n, 8, true);
  const PauliSum o = 0.5 * (PauliSum(PauliWord::parse("Z0", n)) + PauliSum(PauliWord::parse("Z1", n)));
  const PauliSum p = 0.5 * (PauliSum::identity(n) + PauliSum(PauliWord::parse("Z1 Z0", n)));
  const oracle::Matrix dh = oracle::dense(h), dox = oracle::dense(o), dp = oracle::dense(p);
  const oracle::Matrix id = oracle::Matrix::Identity(8, 8);
  const double mu = 3.5, target = 1.0;
  Projector proj;
  proj.op = p;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::VectorXcd v = gen.state(n);
    const StateVector s(n, v);
    const double e = rayleigh(dh, v), mean = rayleigh(dox, v);
    const oracle::Matrix shifted = dox - target * id;

    FunctionalSpec spec;
    spec.symmetries = {{"O", o, target}};
    spec.mu = mu;
    CHECK(Functional(spec, h)(s) == doctest::Approx(e).epsilon(1e-12));
    spec.kind = FunctionalKind::kAveragePenalty;
    CHECK(Functional(spec, h)(s) ==
          doctest::Approx(e + mu * (mean - target) * (mean - target)).epsilon(1e-12));
    spec.kind = FunctionalKind::kVariancePenalty;
    CHECK(Functional(spec, h)(s) == doctest::Approx(e + mu * rayleigh(shifted * shifted, v)).epsilon(1e-12));
    spec.kind = FunctionalKind::kProjectorPenalty;
    spec.projector = proj;
    CHECK(Functional(spec, h)(s) == doctest::Approx(e + mu * rayleigh(id - dp, v)).epsilon(1e-12));
    spec.kind = FunctionalKind::kVapExact;
    CHECK(Functional(spec, h)(s) == doctest::Approx(rayleigh(dh * dp, v) / rayleigh(dp, v)).epsilon(1e-12));
    // The supplied filter operator already is F^2.
    spec.kind = FunctionalKind::kVapFilter;
    CHECK(Functional(spec, h)(s) == doctest::Approx(rayleigh(dh * dp, v) / rayleigh(dp, v)).epsilon(1e-12));

    const auto report = symmetry_report(spec.symmetries, s);
    REQUIRE(report.size() == 1);
    CHECK(report[0].expectation == doctest::Approx(mean).epsilon(1e-12));
    CHECK(report[0].variance == doctest::Approx(rayleigh(dox * dox, v) - mean * mean).epsilon(1e-10));
  }
}

TEST_CASE("VAP outside the projector range is a sector collapse") {
  const std::size_t n = 2;
  Projector proj;
  proj.op = 0.5 * (PauliSum::identity(n) - PauliSum(PauliWord::parse("Z0", n)));
  FunctionalSpec spec;
  spec.kind = FunctionalKind::kVapExact;
  spec.projector = proj;
  const Functional f(spec, PauliSum(PauliWord::parse("X1", n)));
  CHECK_THROWS_AS(f(StateVector(n)), SectorCollapseError);
  CHECK_NOTHROW(f(StateVector::basis(n, 1)));
}

TEST_CASE("entangler gradients match finite differences") {
  oracle::Gen gen(75);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gen.integer(2, 4);
    const PauliSum h = gen.sum(n, 6, true);
    const QmfParams q = random_qmf(gen, n);
    std::vector<PauliWord> pool;
    for (int k = 0; k < 4; ++k) pool.push_back(gen.word(n));
    const auto ranked = rank_entanglers(h, q, pool);
    REQUIRE(ranked.size() == pool.size());
    for (std::size_t i = 1; i < ranked.size(); ++i)
      CHECK(std::abs(ranked[i].gradient) <= std::abs(ranked[i - 1].gradient) + 1e-15);
    const oracle::Matrix dh = oracle::dense(h);
    for (const auto& g : ranked) {
      const double step = 1e-5;
      const oracle::Matrix dw = oracle::dense(PauliSum(g.word));
      const Eigen::VectorXcd v = product_state(q);
      const double up = rayleigh(dh, oracle::expm_hermitian_i(dw, step) * v);
      const double down = rayleigh(dh, oracle::expm_hermitian_i(dw, -step) * v);
      CHECK(g.gradient == doctest::Approx((up - down) / (2 * step)).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("odd-Y pool enumerates every qualifying word") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t max_weight = 1; max_weight <= n; ++max_weight) {
      std::size_t expect = 0;
      for (std::uint64_t x = 0; x < (1u << n); ++x)
        for (std::uint64_t z = 0; z < (1u << n); ++z) {
          const PauliWord w(n, x, z);
          if (w.weight() <= max_weight && std::popcount(x & z) % 2 == 1) ++expect;
        }
      const auto pool = odd_y_pool(n, max_weight);
      CHECK(pool.size() == expect);
      for (const PauliWord& w : pool) {
        CHECK(std::popcount(w.x_mask() & w.z_mask()) % 2 == 1);
        CHECK(w.weight() <= max_weight);
      }
    }
}

TEST_CASE("Nelder-Mead minimizes smooth functions") {
  OptimizerConfig config;
  const auto rosen = [](const std::vector<double>& x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  const NelderMeadResult r = nelder_mead(rosen, {-1.2, 1.0}, config);
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-4));
  for (std::size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i] <= r.history[i - 1]);
  CHECK(r.evaluations <= config.max_evaluations);
}

TEST_CASE("projected optimization reaches the H2 sector ground state") {
  const MolecularSystem sys = h2();
  const Projector pn = sys.number_projector();
  const double exact = sector_ground_energy(sys.hamiltonian(), pn);
  CHECK(exact == doctest::Approx(-1.1011503302326187).epsilon(1e-10));

  FunctionalSpec spec;
  spec.kind = FunctionalKind::kVapExact;
  spec.projector = pn;
  spec.symmetries = {{"N", sys.number(), 2.0}};
  OptimizerConfig config;
  config.restarts = 4;
  const OptResult r = optimize(Functional(spec, sys.hamiltonian()), AnsatzTemplate{sys.n_qubits(), {}}, config);
  CHECK(r.energy == doctest::Approx(exact).epsilon(1e-8));
  CHECK(r.tolerance_met);

  spec.kind = FunctionalKind::kVariancePenalty;
  spec.projector.reset();
  spec.mu = 10.0;
  const OptResult v = optimize(Functional(spec, sys.hamiltonian()), AnsatzTemplate{sys.n_qubits(), {}}, config);
  CHECK(v.constraints_met);
  CHECK(v.symmetries.at(0).expectation == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("scans warm-start along the grid") {
  const std::string manifest = std::string(SYMPROJ_FIXTURE_DIR) + "/h2/manifest.json";
  OptimizerConfig config;
  config.restarts = 2;
  const auto rows = pes_scan(
      {0.7, 1.0},
      [&](double r) {
        const MolecularSystem sys = MolecularSystem::load(manifest, r);
        ScanProblem p{sys.hamiltonian(), {}, sys.number_projector().op};
        p.spec.kind = FunctionalKind::kVapExact;
        p.spec.projector = sys.number_projector();
        return p;
      },
      AnsatzTemplate{2, {}}, config);
  REQUIRE(rows.size() == 2);
  for (const ScanRow& row : rows) CHECK(row.result.energy == doctest::Approx(row.exact_energy).epsilon(1e-8));
  CHECK(rows[1].exact_energy == doctest::Approx(-1.1011503302326187).epsilon(1e-10));
}

}  // TEST_SUITE
