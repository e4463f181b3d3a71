#include "symproj/fermion.hpp"

#include <bit>
#include <cmath>

#include "symproj/errors.hpp"

namespace symproj {

std::size_t spin_orbital_index(std::size_t orbital, Spin spin, std::size_t n_orbitals,
                               SpinOrdering ordering) {
  const auto s = static_cast<std::size_t>(spin);
  if (ordering == SpinOrdering::kInterleaved) return 2 * orbital + s;
  return orbital + s * n_orbitals;
}

std::string to_string(SpinOrdering ordering) {
  return ordering == SpinOrdering::kInterleaved ? "interleaved" : "blocked";
}

SpinOrdering parse_spin_ordering(const std::string& text) {
  if (text == "interleaved") return SpinOrdering::kInterleaved;
  if (text == "blocked") return SpinOrdering::kBlocked;
  throw InputError("unknown spin ordering '" + text + "'");
}

FermionOperator FermionOperator::identity(std::size_t n_modes, Complex coefficient) {
  FermionOperator op(n_modes);
  op.add_term(coefficient, {});
  return op;
}

void FermionOperator::add_term(Complex coefficient, std::vector<LadderOp> ops) {
  for (const auto& o : ops) {
    if (o.mode >= n_modes_) {
      throw DimensionError("mode " + std::to_string(o.mode) + " out of range for " +
                           std::to_string(n_modes_) + " modes");
    }
  }
  terms_.push_back({coefficient, std::move(ops)});
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  if (other.n_modes_ != n_modes_) throw DimensionError("fermion operator mode count mismatch");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

FermionOperator& FermionOperator::operator*=(Complex scalar) {
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out(n_modes_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    FermionString s{std::conj(t.coefficient), {t.ops.rbegin(), t.ops.rend()}};
    for (auto& o : s.ops) o.dagger = !o.dagger;
    out.terms_.push_back(std::move(s));
  }
  return out;
}

FermionOperator operator+(FermionOperator a, const FermionOperator& b) { return a += b; }
FermionOperator operator*(FermionOperator a, Complex scalar) { return a *= scalar; }

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  if (a.n_modes() != b.n_modes()) throw DimensionError("fermion operator mode count mismatch");
  FermionOperator out(a.n_modes());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      std::vector<LadderOp> ops = ta.ops;
      ops.insert(ops.end(), tb.ops.begin(), tb.ops.end());
      out.add_term(ta.coefficient * tb.coefficient, std::move(ops));
    }
  }
  return out;
}

MolecularIntegrals::MolecularIntegrals(std::size_t n_orbitals)
    : n_orbitals_(n_orbitals),
      h_(n_orbitals * n_orbitals, 0.0),
      g_(n_orbitals * n_orbitals * n_orbitals * n_orbitals, 0.0) {}

void MolecularIntegrals::validate(double tolerance) const {
  const std::size_t n = n_orbitals_;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (std::abs(one_body(p, q) - one_body(q, p)) > tolerance)
        throw InputError("one-body integrals are not symmetric");
  // Physicists' <pq|rs> = (pr|qs); check the chemists' 8-fold images.
  auto chem = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return two_body(i, k, j, l);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double v = chem(i, j, k, l);
          const double images[] = {chem(j, i, k, l), chem(i, j, l, k), chem(k, l, i, j)};
          for (double w : images)
            if (std::abs(v - w) > tolerance)
              throw InputError("two-body integrals lack 8-fold permutational symmetry");
        }
}

FermionOperator build_hamiltonian(const MolecularIntegrals& ints, SpinOrdering ordering) {
  const std::size_t n = ints.n_orbitals();
  FermionOperator op(2 * n);
  if (ints.core_energy != 0.0) op.add_term(ints.core_energy, {});
  const Spin spins[] = {Spin::kAlpha, Spin::kBeta};
  auto idx = [&](std::size_t p, Spin s) { return spin_orbital_index(p, s, n, ordering); };

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const double h = ints.one_body(p, q);
      if (h == 0.0) continue;
      for (Spin s : spins) op.add_term(h, {{idx(p, s), true}, {idx(q, s), false}});
    }

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double g = ints.two_body(p, q, r, s);
          if (g == 0.0) continue;
          for (Spin a : spins)
            for (Spin b : spins) {
              const std::size_t P = idx(p, a), Q = idx(q, b), R = idx(r, a), S = idx(s, b);
              if (P == Q || R == S) continue;
              op.add_term(0.5 * g, {{P, true}, {Q, true}, {S, false}, {R, false}});
            }
        }
  return op;
}

FermionOperator number_operator(std::size_t n_modes) {
  FermionOperator op(n_modes);
  for (std::size_t p = 0; p < n_modes; ++p) op.add_term(1.0, {{p, true}, {p, false}});
  return op;
}

namespace {

std::size_t orbitals_of(std::size_t n_modes) {
  if (n_modes % 2 != 0) throw InputError("spin operators need an even number of modes");
  return n_modes / 2;
}

}  // namespace

FermionOperator sz_operator(std::size_t n_modes, SpinOrdering ordering) {
  const std::size_t n = orbitals_of(n_modes);
  FermionOperator op(n_modes);
  for (std::size_t p = 0; p < n; ++p) {
    const auto a = spin_orbital_index(p, Spin::kAlpha, n, ordering);
    const auto b = spin_orbital_index(p, Spin::kBeta, n, ordering);
    op.add_term(0.5, {{a, true}, {a, false}});
    op.add_term(-0.5, {{b, true}, {b, false}});
  }
  return op;
}

FermionOperator splus_operator(std::size_t n_modes, SpinOrdering ordering) {
  const std::size_t n = orbitals_of(n_modes);
  FermionOperator op(n_modes);
  for (std::size_t p = 0; p < n; ++p)
    op.add_term(1.0, {{spin_orbital_index(p, Spin::kAlpha, n, ordering), true},
                      {spin_orbital_index(p, Spin::kBeta, n, ordering), false}});
  return op;
}

FermionOperator sminus_operator(std::size_t n_modes, SpinOrdering ordering) {
  return splus_operator(n_modes, ordering).adjoint();
}

FermionOperator s2_operator(std::size_t n_modes, SpinOrdering ordering) {
  const FermionOperator sz = sz_operator(n_modes, ordering);
  return sminus_operator(n_modes, ordering) * splus_operator(n_modes, ordering) + sz * sz + sz;
}

FermionOperator orbital_rotation_generator(const Eigen::MatrixXcd& kappa,
                                           const RotationGeneratorOptions& options) {
  if (kappa.rows() != kappa.cols()) throw DimensionError("kappa must be square");
  if ((kappa + kappa.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw InputError("kappa is not anti-Hermitian");
  const auto k = static_cast<std::size_t>(kappa.rows());
  const std::size_t default_modes = options.spin_duplicate ? 2 * k : k;
  const std::size_t n_modes = options.n_modes.value_or(default_modes);
  if (n_modes < default_modes) throw DimensionError("kappa does not fit in the mode register");

  FermionOperator op(n_modes);
  auto emit = [&](auto mode) {
    for (std::size_t i = 0; i < k; ++i) {
      const Complex d = kappa(i, i);
      if (d != 0.0) op.add_term(d, {{mode(i), true}, {mode(i), false}});
      for (std::size_t j = i + 1; j < k; ++j) {
        const double re = kappa(i, j).real();
        const double im = kappa(i, j).imag();
        const auto I = mode(i), J = mode(j);
        if (re != 0.0) {
          op.add_term(-re, {{J, true}, {I, false}});
          op.add_term(re, {{I, true}, {J, false}});
        }
        if (im != 0.0) {
          op.add_term(Complex(0, im), {{I, true}, {J, false}});
          op.add_term(Complex(0, im), {{J, true}, {I, false}});
        }
      }
    }
  };
  if (!options.spin_duplicate) {
    emit([](std::size_t i) { return i; });
  } else {
    const std::size_t n_orb = n_modes / 2;
    for (Spin s : {Spin::kAlpha, Spin::kBeta})
      emit([&](std::size_t i) { return spin_orbital_index(i, s, n_orb, options.ordering); });
  }
  return op;
}

Eigen::MatrixXcd fock_matrix(const FermionOperator& op) {
  const std::size_t n = op.n_modes();
  if (n > 14) throw DimensionError("fock_matrix limited to 14 modes");
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : op.terms()) {
    for (std::size_t col = 0; col < dim; ++col) {
      std::uint64_t state = col;
      double sign = 1.0;
      bool alive = true;
      for (auto it = t.ops.rbegin(); it != t.ops.rend() && alive; ++it) {
        const std::uint64_t bit = std::uint64_t{1} << it->mode;
        const bool occupied = (state & bit) != 0;
        if (occupied == it->dagger) {
          alive = false;
          break;
        }
        // Jordan-Wigner sign: parity of occupied modes below.
        if (std::popcount(state & (bit - 1)) % 2 == 1) sign = -sign;
        state ^= bit;
      }
      if (alive) m(static_cast<Eigen::Index>(state), static_cast<Eigen::Index>(col)) +=
          sign * t.coefficient;
    }
  }
  return m;
}

}  // namespace symproj
