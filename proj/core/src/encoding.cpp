#include "symproj/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "symproj/errors.hpp"

namespace symproj {

std::string to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::kJordanWigner: return "jw";
    case EncodingKind::kParity: return "parity";
    case EncodingKind::kBravyiKitaev: return "bk";
  }
  return "?";
}

EncodingKind parse_encoding_kind(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "jw" || t == "jordan-wigner") return EncodingKind::kJordanWigner;
  if (t == "parity") return EncodingKind::kParity;
  if (t == "bk" || t == "bravyi-kitaev") return EncodingKind::kBravyiKitaev;
  throw InputError("unknown encoding '" + text + "' (expected jw, parity or bk)");
}

std::uint64_t to_mask(const std::vector<std::size_t>& qubits) {
  std::uint64_t m = 0;
  for (auto q : qubits) m |= std::uint64_t{1} << q;
  return m;
}

std::vector<std::size_t> from_mask(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

namespace {

std::uint64_t bits_below(std::size_t k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

// Rows of A^{-1} over GF(2) by Gauss-Jordan elimination on [A | I].
std::vector<std::uint64_t> gf2_inverse(const std::vector<std::uint64_t>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::uint64_t> a = rows;
  std::vector<std::uint64_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = std::uint64_t{1} << i;
  for (std::size_t col = 0; col < n; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = col;
    while (pivot < n && !(a[pivot] & bit)) ++pivot;
    if (pivot == n) throw NumericalError("encoding matrix is singular");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && (a[r] & bit)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  // a is now the identity, so inv holds A^{-1} with rows indexed by mode.
  return inv;
}

}  // namespace

Encoding::Encoding(EncodingKind kind, std::size_t n_qubits) : kind_(kind), n_(n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxQubits)
    throw InputError("encoding register must have 1.." + std::to_string(kMaxQubits) + " qubits");
  rows_.resize(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    const std::uint64_t self = std::uint64_t{1} << j;
    switch (kind_) {
      case EncodingKind::kJordanWigner: rows_[j] = self; break;
      case EncodingKind::kParity: rows_[j] = bits_below(j + 1); break;
      case EncodingKind::kBravyiKitaev: {
        const std::size_t span = (j + 1) & (~j);  // lowest set bit of j + 1
        rows_[j] = bits_below(j + 1) & ~bits_below(j + 1 - span);
        break;
      }
    }
  }
  inv_rows_ = gf2_inverse(rows_);

  // a+_k = X_{U(k)∪k} (1 + Z_{F(k)∪k})/2 Z_{P(k)},  a_k with (1 - Z_{F(k)∪k})/2.
  std::uint64_t parity = 0;
  for (std::size_t k = 0; k < n_; ++k) {
    std::uint64_t column = 0;
    for (std::size_t q = 0; q < n_; ++q)
      if (rows_[q] >> k & 1) column |= std::uint64_t{1} << q;
    const PauliSum flip(PauliWord::x_string(n_, column));
    const PauliSum occ(PauliWord::z_string(n_, inv_rows_[k]));
    const PauliSum sign(PauliWord::z_string(n_, parity));
    const PauliSum half = PauliSum::identity(n_, 0.5);
    creation_.push_back(flip * (half + 0.5 * occ) * sign);
    annihilation_.push_back(flip * (half - 0.5 * occ) * sign);
    parity ^= inv_rows_[k];
  }
}

IndexSets Encoding::index_sets(std::size_t mode) const {
  if (mode >= n_) throw DimensionError("mode out of range");
  IndexSets s;
  for (std::size_t q = 0; q < n_; ++q)
    if (q != mode && (rows_[q] >> mode & 1)) s.update.push_back(q);
  s.flip_with_self = from_mask(inv_rows_[mode]);
  s.flip = from_mask(inv_rows_[mode] & ~(std::uint64_t{1} << mode));
  std::uint64_t parity = 0;
  for (std::size_t m = 0; m < mode; ++m) parity ^= inv_rows_[m];
  s.parity = from_mask(parity);
  return s;
}

std::uint64_t Encoding::encode_occupation(std::uint64_t occupation) const {
  std::uint64_t b = 0;
  for (std::size_t q = 0; q < n_; ++q)
    if (std::popcount(rows_[q] & occupation) % 2) b |= std::uint64_t{1} << q;
  return b;
}

PauliSum encode_operator(const FermionOperator& op, const Encoding& enc) {
  if (op.n_modes() != enc.n_qubits())
    throw DimensionError("operator has " + std::to_string(op.n_modes()) + " modes, encoding " +
                         std::to_string(enc.n_qubits()) + " qubits");
  const std::size_t n = enc.n_qubits();
  PauliSum out(n);
  for (const auto& t : op.terms()) {
    PauliSum term = PauliSum::identity(n, t.coefficient);
    for (const auto& o : t.ops) {
      term = multiply(term, o.dagger ? enc.creation(o.mode) : enc.annihilation(o.mode));
      if (term.empty()) break;
    }
    out += term;
  }
  return out.prune();
}

PauliSum closed_form(ClosedFormSymbol symbol, const Encoding& enc, SpinOrdering ordering) {
  const std::size_t n = enc.n_qubits();
  auto z_flip = [&](std::size_t mode) {
    return PauliSum(PauliWord::z_string(n, enc.inverse_row(mode)));
  };
  if (symbol == ClosedFormSymbol::kNumber) {
    PauliSum out = PauliSum::identity(n, 0.5 * static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) out -= 0.5 * z_flip(k);
    return out.prune();
  }
  if (n % 2 != 0) throw InputError("spin operators need an even number of qubits");
  const std::size_t n_orb = n / 2;
  PauliSum out(n);
  for (std::size_t p = 0; p < n_orb; ++p) {
    const std::size_t a = spin_orbital_index(p, Spin::kAlpha, n_orb, ordering);
    const std::size_t b = spin_orbital_index(p, Spin::kBeta, n_orb, ordering);
    if (symbol == ClosedFormSymbol::kSz) {
      out += 0.25 * (z_flip(b) - z_flip(a));
      continue;
    }
    const PauliSum up_a = PauliSum(PauliWord::single(n, a, 'X')) -
                           Complex(0, 1) * PauliSum(PauliWord::single(n, a, 'Y'));
    if (enc.kind() == EncodingKind::kJordanWigner) {
      const PauliSum down_b = PauliSum(PauliWord::single(n, b, 'X')) +
                             Complex(0, 1) * PauliSum(PauliWord::single(n, b, 'Y'));
      const std::uint64_t between = bits_below(b) & ~bits_below(a + 1);
      out += 0.25 * (up_a * PauliSum(PauliWord::z_string(n, between)) * down_b);
    } else if (enc.kind() == EncodingKind::kBravyiKitaev &&
               ordering == SpinOrdering::kInterleaved) {
      const std::uint64_t mask = enc.inverse_row(b) & ~(std::uint64_t{1} << a);
      out += 0.25 * ((PauliSum::identity(n) - PauliSum(PauliWord::z_string(n, mask))) * up_a);
    } else {
      throw InputError("no closed form for S+ under " + to_string(enc.kind()) + "/" +
                       to_string(ordering));
    }
  }
  return out.prune();
}

}  // namespace symproj
