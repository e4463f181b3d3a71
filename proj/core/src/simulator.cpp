#include "symproj/simulator.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "symproj/errors.hpp"

namespace symproj {

namespace {

void check_dims(const PauliSum& op, const StateVector& s) {
  if (op.n_qubits() != s.n_qubits())
    throw DimensionError("operator on " + std::to_string(op.n_qubits()) + " qubits, state on " +
                         std::to_string(s.n_qubits()));
}

Complex phase_of(std::uint64_t x, std::uint64_t z) {
  return to_complex(static_cast<Phase>(std::popcount(x & z) % 4));
}

void check_hermitian(const PauliSum& op) {
  if (!op.is_hermitian()) throw NumericalError("operator is not Hermitian");
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : StateVector(basis(n_qubits, 0)) {}

StateVector::StateVector(std::size_t n_qubits, Eigen::VectorXcd amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits > kDenseQubitCap) throw DimensionError("state register exceeds the dense cap");
  if (static_cast<std::size_t>(amps_.size()) != (std::size_t{1} << n_qubits))
    throw DimensionError("amplitude count does not match 2^n");
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
  if (n_qubits > kDenseQubitCap) throw DimensionError("state register exceeds the dense cap");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  if (index >= static_cast<std::uint64_t>(v.size())) throw DimensionError("basis index too large");
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(n_qubits, std::move(v));
}

StateVector StateVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw NumericalError("cannot normalize the zero vector");
  return StateVector(n_, amps_ / nrm);
}

StateVector apply(const PauliSum& op, const StateVector& s) {
  check_dims(op, s);
  const auto dim = static_cast<std::uint64_t>(s.dimension());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes().size());
  const Complex* in = s.amplitudes().data();
  Complex* res = out.data();
  for (const auto& [w, c] : op.terms()) {
    const std::uint64_t x = w.x_mask(), z = w.z_mask();
    const Complex base = c * phase_of(x, z);
    for (std::uint64_t b = 0; b < dim; ++b) {
      const Complex v = in[b];
      if (v == 0.0) continue;
      res[b ^ x] += (std::popcount(z & b) & 1) ? -base * v : base * v;
    }
  }
  return StateVector(s.n_qubits(), std::move(out));
}

Complex matrix_element(const StateVector& a, const PauliSum& op, const StateVector& b) {
  return a.inner(apply(op, b));
}

double expectation(const PauliSum& op, const StateVector& s) {
  check_hermitian(op);
  const Complex e = matrix_element(s, op, s);
  if (std::abs(e.imag()) > 1e-10) throw NumericalError("expectation has an imaginary residue");
  return e.real();
}

double variance(const PauliSum& op, const StateVector& s) {
  check_hermitian(op);
  const StateVector os = apply(op, s);
  const Complex mean = s.inner(os);
  if (std::abs(mean.imag()) > 1e-10) throw NumericalError("expectation has an imaginary residue");
  const double v = os.amplitudes().squaredNorm() - mean.real() * mean.real();
  if (v < -1e-12) throw NumericalError("negative variance " + std::to_string(v));
  return std::max(v, 0.0);
}

Eigen::MatrixXcd to_dense(const PauliSum& op, std::size_t cap) {
  const std::size_t n = op.n_qubits();
  if (n > cap) throw DimensionError("register of " + std::to_string(n) + " qubits exceeds cap");
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (const auto& [w, c] : op.terms()) {
    const std::uint64_t x = w.x_mask(), z = w.z_mask();
    const Complex base = c * phase_of(x, z);
    for (std::uint64_t b = 0; b < dim; ++b)
      m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) +=
          (std::popcount(z & b) & 1) ? -base : base;
  }
  return m;
}

Eigensystem exact_diagonalize(const PauliSum& op, std::size_t cap) {
  check_hermitian(op);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_dense(op, cap));
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double sector_ground_energy(const PauliSum& h, const PauliSum& p) {
  if (h.n_qubits() != p.n_qubits()) throw DimensionError("projector register mismatch");
  const Eigen::MatrixXcd hd = to_dense(h);
  const Eigen::MatrixXcd pd = to_dense(p);
  if ((hd * pd - pd * hd).norm() > 1e-8) throw NumericalError("projector does not commute with H");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ps(0.5 * (pd + pd.adjoint()));
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ps.eigenvalues().size(); ++i)
    if (std::abs(ps.eigenvalues()(i) - 1.0) < 1e-8) keep.push_back(i);
  if (keep.empty()) throw NumericalError("projector range is empty");
  Eigen::MatrixXcd q(hd.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k)
    q.col(static_cast<Eigen::Index>(k)) = ps.eigenvectors().col(keep[k]);
  const Eigen::MatrixXcd hs = q.adjoint() * hd * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hsolver(0.5 * (hs + hs.adjoint()),
                                                          Eigen::EigenvaluesOnly);
  return hsolver.eigenvalues()(0);
}

}  // namespace symproj
