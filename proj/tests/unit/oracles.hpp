#pragma once

// Dense-matrix oracles and random generators shared by the unit tests. The
// oracles are written from textbook definitions and use no library code
// beyond the value types they read.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symproj/pauli.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline Matrix pauli_matrix(char p) {
  Matrix m(2, 2);
  switch (p) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1;
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Little-endian: qubit 0 is the rightmost Kronecker factor.
inline Matrix word_matrix(const std::string& letters_high_to_low) {
  Matrix m = Matrix::Identity(1, 1);
  for (char c : letters_high_to_low) m = kron(m, pauli_matrix(c));
  return m;
}

inline std::string letters(const symproj::PauliWord& w) {
  std::string s;
  for (std::size_t q = w.n_qubits(); q-- > 0;) {
    const bool x = w.x_mask() >> q & 1, z = w.z_mask() >> q & 1;
    s += x && z ? 'Y' : x ? 'X' : z ? 'Z' : 'I';
  }
  return s;
}

inline Matrix dense(const symproj::PauliSum& op) {
  const Eigen::Index dim = Eigen::Index{1} << op.n_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [w, c] : op.terms()) m += c * word_matrix(letters(w));
  return m;
}

// Jordan-Wigner annihilator on mode k of an n-mode register, basis bit p = n_p.
inline Matrix annihilator(std::size_t k, std::size_t n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    if (!(b >> k & 1)) continue;
    int sign = 1;
    for (std::size_t p = 0; p < k; ++p)
      if (b >> p & 1) sign = -sign;
    m(b ^ (Eigen::Index{1} << k), b) = sign;
  }
  return m;
}

inline Matrix expm_hermitian_i(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXcd phases =
      (es.eigenvalues().cast<Complex>() * Complex(0, t)).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline Eigen::VectorXd spectrum(const Matrix& m) {
  return Eigen::SelfAdjointEigenSolver<Matrix>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

inline double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Hand-rolled generators over a seeded engine.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::size_t integer(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }
  double real(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  symproj::PauliWord word(std::size_t n) {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    return {n, rng() & mask, rng() & mask};
  }
  symproj::PauliSum sum(std::size_t n, std::size_t terms, bool hermitian) {
    symproj::PauliSum s(n);
    for (std::size_t t = 0; t < terms; ++t)
      s.add_term(word(n), hermitian ? Complex(real(), 0) : Complex(real(), real()));
    return s;
  }
  Eigen::VectorXcd state(std::size_t n) {
    Eigen::VectorXcd v(Eigen::Index{1} << n);
    for (auto& a : v) a = Complex(real(), real());
    return v.normalized();
  }
};

}  // namespace oracle
