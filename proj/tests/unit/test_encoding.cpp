#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>

#include "oracles.hpp"
#include "symproj/encoding.hpp"
#include "symproj/errors.hpp"
#include "symproj/fermion.hpp"
#include "symproj/io.hpp"

using namespace symproj;

namespace {

constexpr EncodingKind kKinds[] = {EncodingKind::kJordanWigner, EncodingKind::kParity,
                                   EncodingKind::kBravyiKitaev};

// Row q of the binary transform, written from the definitions.
std::uint64_t reference_row(EncodingKind kind, std::size_t q) {
  switch (kind) {
    case EncodingKind::kJordanWigner: return std::uint64_t{1} << q;
    case EncodingKind::kParity: return (std::uint64_t{2} << q) - 1;
    case EncodingKind::kBravyiKitaev: {
      // Fenwick node q covers modes (q & (q + 1)) .. q.
      const std::uint64_t lo = q & (q + 1);
      return ((std::uint64_t{2} << q) - 1) & ~((std::uint64_t{1} << lo) - 1);
    }
  }
  return 0;
}

std::uint64_t reference_encode(EncodingKind kind, std::size_t n, std::uint64_t occ) {
  std::uint64_t b = 0;
  for (std::size_t q = 0; q < n; ++q)
    if (std::popcount(reference_row(kind, q) & occ) & 1) b |= std::uint64_t{1} << q;
  return b;
}

// Permutation taking occupation basis states to their qubit images.
oracle::Matrix basis_map(EncodingKind kind, std::size_t n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  oracle::Matrix u = oracle::Matrix::Zero(dim, dim);
  for (Eigen::Index occ = 0; occ < dim; ++occ)
    u(static_cast<Eigen::Index>(reference_encode(kind, n, occ)), occ) = 1.0;
  return u;
}

FermionOperator random_fermion(oracle::Gen& gen, std::size_t n) {
  FermionOperator op(n);
  const std::size_t terms = gen.integer(1, 5);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<LadderOp> ops(gen.integer(0, 4));
    for (auto& o : ops) o = {gen.integer(0, n - 1), gen.integer(0, 1) == 1};
    op.add_term(Complex(gen.real(), gen.real()), ops);
  }
  return op;
}

// Block of `m` on basis states where each listed qubit has z = value.
oracle::Matrix fixed_block(const oracle::Matrix& m, std::size_t n,
                           const std::vector<std::pair<std::size_t, int>>& fixed) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index b = 0; b < (Eigen::Index{1} << n); ++b) {
    bool ok = true;
    for (auto [q, v] : fixed) ok = ok && ((b >> q & 1) == (v == 1 ? 0 : 1));
    if (ok) keep.push_back(b);
  }
  const auto k = static_cast<Eigen::Index>(keep.size());
  oracle::Matrix out(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) out(i, j) = m(keep[i], keep[j]);
  return out;
}

}  // namespace

TEST_SUITE("encoding") {

TEST_CASE("names parse case-insensitively") {
  CHECK(parse_encoding_kind("JW") == EncodingKind::kJordanWigner);
  CHECK(parse_encoding_kind("parity") == EncodingKind::kParity);
  CHECK(parse_encoding_kind("Bk") == EncodingKind::kBravyiKitaev);
  for (EncodingKind k : kKinds) CHECK(parse_encoding_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_encoding_kind("ternary"), InputError);
}

TEST_CASE("transform rows and their GF(2) inverse") {
  for (EncodingKind kind : kKinds)
    for (std::size_t n = 1; n <= 16; ++n) {
      const Encoding enc(kind, n);
      for (std::size_t q = 0; q < n; ++q) REQUIRE(enc.transform_row(q) == reference_row(kind, q));
      // A * A^{-1} = 1 over GF(2).
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t k = 0; k < n; ++k) {
          int bit = 0;
          for (std::size_t m = 0; m < n; ++m)
            bit ^= (enc.transform_row(q) >> m & 1) & (enc.inverse_row(m) >> k & 1);
          REQUIRE(bit == (q == k ? 1 : 0));
        }
    }
}

TEST_CASE("occupations encode through the transform") {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 300; ++trial) {
    const EncodingKind kind = kKinds[gen.integer(0, 2)];
    const std::size_t n = gen.integer(1, 20);
    const std::uint64_t occ = gen.rng() & ((std::uint64_t{1} << n) - 1);
    CHECK(Encoding(kind, n).encode_occupation(occ) == reference_encode(kind, n, occ));
  }
}

TEST_CASE("index sets are consistent with the transform") {
  for (EncodingKind kind : kKinds)
    for (std::size_t n = 1; n <= 12; ++n) {
      const Encoding enc(kind, n);
      for (std::size_t k = 0; k < n; ++k) {
        const IndexSets s = enc.index_sets(k);
        // Parity of P(k) qubits is the occupation parity below k.
        std::uint64_t below = 0;
        for (std::size_t q : s.parity) below ^= enc.transform_row(q);
        CHECK(below == ((std::uint64_t{1} << k) - 1));
        // Parity of F(k) ∪ {k} qubits is n_k.
        CHECK(to_mask(s.flip_with_self) == enc.inverse_row(k));
        // U(k) lists the other qubits whose row contains mode k.
        std::uint64_t update = 0;
        for (std::size_t q = 0; q < n; ++q)
          if (q != k && (enc.transform_row(q) >> k & 1)) update |= std::uint64_t{1} << q;
        CHECK(to_mask(s.update) == update);
        CHECK(from_mask(to_mask(s.update)) == s.update);
      }
    }
}

TEST_CASE("encoded ladder operators are similar to the occupation-basis ones") {
  for (EncodingKind kind : kKinds)
    for (std::size_t n = 1; n <= 6; ++n) {
      const Encoding enc(kind, n);
      const oracle::Matrix u = basis_map(kind, n);
      for (std::size_t k = 0; k < n; ++k) {
        const oracle::Matrix a = u * oracle::annihilator(k, n) * u.adjoint();
        CHECK(oracle::max_abs(oracle::dense(enc.annihilation(k)) - a) < 1e-14);
        CHECK(oracle::max_abs(oracle::dense(enc.creation(k)) - a.adjoint()) < 1e-14);
      }
    }
}

TEST_CASE("random fermion operators encode faithfully") {
  oracle::Gen gen(32);
  for (int trial = 0; trial < 150; ++trial) {
    const EncodingKind kind = kKinds[gen.integer(0, 2)];
    const std::size_t n = gen.integer(1, 5);
    const FermionOperator f = random_fermion(gen, n);
    const oracle::Matrix u = basis_map(kind, n);
    const PauliSum q = encode_operator(f, Encoding(kind, n));
    CHECK(oracle::max_abs(oracle::dense(q) - u * fock_matrix(f) * u.adjoint()) < 1e-11);
  }
  CHECK_THROWS_AS(encode_operator(FermionOperator(3), Encoding(EncodingKind::kParity, 4)),
                  DimensionError);
}

TEST_CASE("closed forms equal the encoded ladder expressions") {
  for (EncodingKind kind : kKinds)
    for (SpinOrdering ordering : {SpinOrdering::kInterleaved, SpinOrdering::kBlocked})
      for (std::size_t n = 2; n <= 12; n += 2) {
        const Encoding enc(kind, n);
        CHECK(approx_equal(closed_form(ClosedFormSymbol::kNumber, enc, ordering),
                           encode_operator(number_operator(n), enc), 1e-12));
        CHECK(approx_equal(closed_form(ClosedFormSymbol::kSz, enc, ordering),
                           encode_operator(sz_operator(n, ordering), enc), 1e-12));
      }
  for (std::size_t n = 2; n <= 12; n += 2) {
    for (SpinOrdering ordering : {SpinOrdering::kInterleaved, SpinOrdering::kBlocked}) {
      const Encoding jw(EncodingKind::kJordanWigner, n);
      CHECK(approx_equal(closed_form(ClosedFormSymbol::kSplus, jw, ordering),
                         encode_operator(splus_operator(n, ordering), jw), 1e-12));
    }
    const Encoding bk(EncodingKind::kBravyiKitaev, n);
    CHECK(approx_equal(closed_form(ClosedFormSymbol::kSplus, bk),
                       encode_operator(splus_operator(n), bk), 1e-12));
  }
  CHECK_THROWS_AS(closed_form(ClosedFormSymbol::kSplus, Encoding(EncodingKind::kParity, 4)),
                  InputError);
  CHECK_THROWS_AS(closed_form(ClosedFormSymbol::kSz, Encoding(EncodingKind::kParity, 5)),
                  InputError);
}

TEST_CASE("stationary qubits of the H2 Bravyi-Kitaev Hamiltonian") {
  const MolecularIntegrals ints = parse_fcidump(std::string(SYMPROJ_FIXTURE_DIR) + "/h2/R1.00.fcidump");
  const Encoding enc(EncodingKind::kBravyiKitaev, 4);
  const PauliSum h = encode_operator(build_hamiltonian(ints), enc);
  CHECK(detect_stationary_qubits(h) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("reduction equals the fixed-z block") {
  oracle::Gen gen(33);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = gen.integer(2, 6);
    // Z/I on the fixed qubits so they are stationary.
    const std::size_t q1 = gen.integer(0, n - 1);
    std::size_t q2 = gen.integer(0, n - 1);
    PauliSum op(n);
    for (int t = 0; t < 8; ++t) {
      PauliWord w = gen.word(n);
      const std::uint64_t keep = ~((std::uint64_t{1} << q1) | (std::uint64_t{1} << q2));
      op.add_term(PauliWord(n, w.x_mask() & keep, w.z_mask()), Complex(gen.real(), gen.real()));
    }
    std::vector<std::pair<std::size_t, int>> fixed{{q1, gen.integer(0, 1) ? 1 : -1}};
    if (q2 != q1) fixed.push_back({q2, gen.integer(0, 1) ? 1 : -1});
    const auto [reduced, record] = reduce_stationary_qubits(op, fixed);
    CHECK(record.reduced_qubits() == n - fixed.size());
    CHECK(record.new_index[q1] == -1);
    CHECK(oracle::max_abs(oracle::dense(reduced) - fixed_block(oracle::dense(op), n, fixed)) <
          1e-12);
    CHECK(approx_equal(apply_reduction(op, record), reduced, 1e-14));
    const auto stationary = detect_stationary_qubits(op);
    CHECK(std::find(stationary.begin(), stationary.end(), q1) != stationary.end());
  }
}

TEST_CASE("reduction rejects bad requests") {
  PauliSum op(3);
  op.add_term(PauliWord::parse("X1 Z0", 3), 1.0);
  CHECK_THROWS_AS(reduce_stationary_qubits(op, {{1, 1}}), StationarityError);
  CHECK_THROWS_AS(reduce_stationary_qubits(op, {{0, 2}}), InputError);
  CHECK_THROWS_AS(reduce_stationary_qubits(op, {{0, 1}, {0, -1}}), InputError);
  CHECK_NOTHROW(reduce_stationary_qubits(op, {{0, -1}, {2, 1}}));
}

TEST_CASE("occupation sectors and per-sector energies") {
  for (EncodingKind kind : kKinds) {
    const Encoding enc(kind, 6);
    for (std::uint64_t occ = 0; occ < 64; ++occ) {
      const std::uint64_t b = enc.encode_occupation(occ);
      for (auto [q, v] : sector_from_occupation(enc, occ, {1, 3, 5}))
        CHECK(v == ((b >> q & 1) ? -1 : 1));
    }
  }
  const MolecularIntegrals ints = parse_fcidump(std::string(SYMPROJ_FIXTURE_DIR) + "/h2/R1.00.fcidump");
  const PauliSum h = encode_operator(build_hamiltonian(ints), Encoding(EncodingKind::kBravyiKitaev, 4));
  const oracle::Matrix dh = oracle::dense(h);
  const auto sectors = sector_ground_energies(h, {1, 3});
  REQUIRE(sectors.size() == 4);
  CHECK(sectors[0].assignment == std::vector<std::pair<std::size_t, int>>{{1, 1}, {3, 1}});
  CHECK(sectors[1].assignment == std::vector<std::pair<std::size_t, int>>{{1, -1}, {3, 1}});
  for (const auto& s : sectors)
    CHECK(s.ground_energy == doctest::Approx(oracle::spectrum(fixed_block(dh, 4, s.assignment))(0))
                                 .epsilon(1e-12));
}

}  // TEST_SUITE
