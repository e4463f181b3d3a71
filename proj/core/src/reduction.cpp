#include <algorithm>
#include <bit>
#include <set>

#include "symproj/encoding.hpp"
#include "symproj/errors.hpp"
#include "symproj/simulator.hpp"

namespace symproj {

namespace {

std::uint64_t compact(std::uint64_t mask, const std::vector<int>& new_index) {
  std::uint64_t out = 0;
  while (mask) {
    const auto q = static_cast<std::size_t>(std::countr_zero(mask));
    mask &= mask - 1;
    if (new_index[q] >= 0) out |= std::uint64_t{1} << new_index[q];
  }
  return out;
}

}  // namespace

std::vector<std::size_t> detect_stationary_qubits(const PauliSum& op) {
  std::uint64_t moving = 0;
  for (const auto& [w, c] : op.terms()) moving |= w.x_mask();
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < op.n_qubits(); ++q)
    if (!(moving >> q & 1)) out.push_back(q);
  return out;
}

PauliSum apply_reduction(const PauliSum& op, const ReductionRecord& record) {
  if (op.n_qubits() != record.original_qubits)
    throw DimensionError("operator register does not match reduction record");
  std::uint64_t removed_mask = 0;
  std::uint64_t negative_mask = 0;
  for (auto [q, v] : record.removed) {
    removed_mask |= std::uint64_t{1} << q;
    if (v < 0) negative_mask |= std::uint64_t{1} << q;
  }
  PauliSum out(record.reduced_qubits());
  for (const auto& [w, c] : op.terms()) {
    if (w.x_mask() & removed_mask)
      throw StationarityError("term '" + w.to_string() + "' is not diagonal on a removed qubit");
    const bool flip = std::popcount(w.z_mask() & negative_mask) % 2 == 1;
    out.add_term(PauliWord(out.n_qubits(), compact(w.x_mask(), record.new_index),
                           compact(w.z_mask(), record.new_index)),
                 flip ? -c : c);
  }
  return out.prune();
}

std::pair<PauliSum, ReductionRecord> reduce_stationary_qubits(
    const PauliSum& op, const std::vector<std::pair<std::size_t, int>>& assignment) {
  ReductionRecord rec;
  rec.original_qubits = op.n_qubits();
  std::set<std::size_t> seen;
  for (auto [q, v] : assignment) {
    if (q >= op.n_qubits()) throw DimensionError("qubit " + std::to_string(q) + " out of range");
    if (v != 1 && v != -1) throw InputError("stationary qubit eigenvalue must be +1 or -1");
    if (!seen.insert(q).second) throw InputError("qubit " + std::to_string(q) + " listed twice");
  }
  rec.removed = assignment;
  std::sort(rec.removed.begin(), rec.removed.end());
  rec.new_index.assign(op.n_qubits(), -1);
  int next = 0;
  for (std::size_t q = 0; q < op.n_qubits(); ++q)
    if (!seen.count(q)) rec.new_index[q] = next++;
  return {apply_reduction(op, rec), rec};
}

std::vector<std::pair<std::size_t, int>> sector_from_occupation(
    const Encoding& enc, std::uint64_t occupation, const std::vector<std::size_t>& qubits) {
  const std::uint64_t bits = enc.encode_occupation(occupation);
  std::vector<std::pair<std::size_t, int>> out;
  for (auto q : qubits) out.emplace_back(q, (bits >> q & 1) ? -1 : 1);
  return out;
}

std::vector<SectorEnergy> sector_ground_energies(const PauliSum& op,
                                                 const std::vector<std::size_t>& qubits) {
  if (qubits.size() >= 16) throw InputError("too many stationary qubits to enumerate");
  std::vector<SectorEnergy> out;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << qubits.size()); ++pattern) {
    SectorEnergy e;
    for (std::size_t i = 0; i < qubits.size(); ++i)
      e.assignment.emplace_back(qubits[i], (pattern >> i & 1) ? -1 : 1);
    const PauliSum reduced = reduce_stationary_qubits(op, e.assignment).first;
    e.ground_energy = exact_diagonalize(reduced).values(0);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace symproj
