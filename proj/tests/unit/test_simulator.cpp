#include <doctest.h>

#include "oracles.hpp"
#include "symproj/errors.hpp"
#include "symproj/simulator.hpp"

using namespace symproj;

TEST_SUITE("simulator") {

TEST_CASE("basis states are little-endian") {
  const StateVector s = StateVector::basis(3, 0b101);
  CHECK(s.dimension() == 8);
  CHECK(s[5] == Complex(1, 0));
  CHECK(StateVector(2)[0] == Complex(1, 0));
  // X on qubit 0 flips the lowest bit.
  const StateVector t = apply(PauliSum(PauliWord::single(3, 0, 'X')), s);
  CHECK(t[4] == Complex(1, 0));
  CHECK_THROWS_AS(StateVector(2, Eigen::VectorXcd::Zero(3)), DimensionError);
}

TEST_CASE("applying a sum equals the dense matrix-vector product") {
  oracle::Gen gen(51);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen.integer(1, 6);
    const PauliSum op = gen.sum(n, gen.integer(1, 10), false);
    const Eigen::VectorXcd v = gen.state(n);
    const StateVector out = apply(op, StateVector(n, v));
    CHECK((out.amplitudes() - oracle::dense(op) * v).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("expectation, variance and matrix elements") {
  oracle::Gen gen(52);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = gen.integer(1, 6);
    const PauliSum h = gen.sum(n, gen.integer(1, 10), true);
    const PauliSum g = gen.sum(n, gen.integer(1, 10), false);
    const Eigen::VectorXcd a = gen.state(n), b = gen.state(n);
    const oracle::Matrix dh = oracle::dense(h);
    const double mean = (a.adjoint() * dh * a)(0).real();
    const double second = (a.adjoint() * dh * dh * a)(0).real();
    const StateVector sa(n, a), sb(n, b);
    CHECK(expectation(h, sa) == doctest::Approx(mean).epsilon(1e-12));
    CHECK(variance(h, sa) == doctest::Approx(second - mean * mean).epsilon(1e-10));
    CHECK(variance(h, sa) >= 0.0);
    const Complex element = (a.adjoint() * oracle::dense(g) * b)(0);
    CHECK(std::abs(matrix_element(sa, g, sb) - element) < 1e-12);
  }
}

TEST_CASE("eigenstates have zero variance") {
  oracle::Gen gen(53);
  const PauliSum h = gen.sum(4, 8, true);
  const Eigensystem es = exact_diagonalize(h);
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    const StateVector v(4, es.vectors.col(i));
    CHECK(variance(h, v) < 1e-10);
    CHECK(expectation(h, v) == doctest::Approx(es.values(i)).epsilon(1e-10));
  }
}

TEST_CASE("exact diagonalization matches the dense spectrum") {
  oracle::Gen gen(54);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gen.integer(1, 6);
    const PauliSum h = gen.sum(n, gen.integer(1, 10), true);
    const Eigensystem es = exact_diagonalize(h);
    const Eigen::VectorXd ref = oracle::spectrum(oracle::dense(h));
    CHECK((es.values - ref).cwiseAbs().maxCoeff() < 1e-10);
    for (Eigen::Index i = 1; i < es.values.size(); ++i) CHECK(es.values(i) >= es.values(i - 1));
    CHECK(oracle::max_abs(to_dense(h) - oracle::dense(h)) < 1e-14);
  }
}

TEST_CASE("sector energy inside a Pauli projector range") {
  // H = Z0 + 2 Z1 + X0 X1, P = (1 + Z0 Z1)/2 keeps even parity.
  const PauliSum h = PauliSum(PauliWord::parse("Z0", 2)) + 2.0 * PauliSum(PauliWord::parse("Z1", 2)) +
                     PauliSum(PauliWord::parse("X1 X0", 2));
  const PauliSum p = 0.5 * (PauliSum::identity(2) + PauliSum(PauliWord::parse("Z1 Z0", 2)));
  // Even block {|00>, |11>}: [[3, 1], [1, -3]].
  CHECK(sector_ground_energy(h, p) == doctest::Approx(-std::sqrt(10.0)).epsilon(1e-12));
  const PauliSum q = 0.5 * (PauliSum::identity(2) + PauliSum(PauliWord::parse("X0", 2)));
  CHECK_THROWS_AS(sector_ground_energy(h, q), NumericalError);
  CHECK_THROWS_AS(sector_ground_energy(h, PauliSum(2)), NumericalError);
}

TEST_CASE("guards on input") {
  PauliSum nh(1);
  nh.add_term(PauliWord::single(1, 0, 'X'), Complex(0, 1));
  CHECK_THROWS_AS(expectation(nh, StateVector(1)), NumericalError);
  CHECK_THROWS_AS(exact_diagonalize(nh), NumericalError);
  CHECK_THROWS_AS(to_dense(PauliSum::identity(kDenseQubitCap + 1)), DimensionError);
  CHECK_THROWS_AS(apply(PauliSum::identity(3), StateVector(2)), DimensionError);
}

}  // TEST_SUITE
