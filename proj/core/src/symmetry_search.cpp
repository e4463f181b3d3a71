#include <algorithm>
#include <map>

#include <Eigen/Dense>

#include "symproj/errors.hpp"
#include "symproj/projectors.hpp"

namespace symproj {

std::vector<PauliSum> low_qubit_symmetry_search(const PauliSum& h,
                                                const std::vector<std::size_t>& support,
                                                double tolerance) {
  const std::size_t n = h.n_qubits();
  for (auto q : support)
    if (q >= n) throw DimensionError("support qubit out of range");
  // Candidate words: every x/z pattern on the support except the identity.
  std::vector<PauliWord> words;
  const std::size_t s = support.size();
  for (std::uint64_t pattern = 1; pattern < (std::uint64_t{1} << (2 * s)); ++pattern) {
    std::uint64_t x = 0, z = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (pattern >> (2 * i) & 1) x |= std::uint64_t{1} << support[i];
      if (pattern >> (2 * i + 1) & 1) z |= std::uint64_t{1} << support[i];
    }
    words.emplace_back(n, x, z);
  }
  std::sort(words.begin(), words.end(), [](const PauliWord& a, const PauliWord& b) {
    return a.weight() != b.weight() ? a.weight() < b.weight() : a < b;
  });

  std::vector<PauliSum> columns;
  std::map<PauliWord, Eigen::Index> rows;
  for (const auto& w : words) {
    columns.push_back(commutator(h, PauliSum(w)));
    for (const auto& [v, c] : columns.back().terms()) rows.try_emplace(v, 0);
  }
  Eigen::Index r = 0;
  for (auto& [v, idx] : rows) idx = r++;
  const auto k = static_cast<Eigen::Index>(words.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(std::max<Eigen::Index>(2 * r, 1), k);
  for (Eigen::Index j = 0; j < k; ++j)
    for (const auto& [v, c] : columns[static_cast<std::size_t>(j)].terms()) {
      a(rows[v], j) = c.real();
      a(r + rows[v], j) = c.imag();
    }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double scale = std::max(1.0, sv.size() ? sv(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tolerance * scale) ++rank;
  Eigen::MatrixXd basis = svd.matrixV().rightCols(k - rank).transpose();

  // Reduced row echelon form for a canonical basis.
  Eigen::Index lead = 0;
  for (Eigen::Index row = 0; row < basis.rows() && lead < k; ++lead) {
    Eigen::Index pivot;
    if (basis.col(lead).segment(row, basis.rows() - row).cwiseAbs().maxCoeff(&pivot) < 1e-9)
      continue;
    pivot += row;
    basis.row(row).swap(basis.row(pivot));
    basis.row(row) /= basis(row, lead);
    for (Eigen::Index other = 0; other < basis.rows(); ++other)
      if (other != row) basis.row(other) -= basis(other, lead) * basis.row(row);
    ++row;
  }

  std::vector<PauliSum> out;
  for (Eigen::Index i = 0; i < basis.rows(); ++i) {
    PauliSum o(n);
    for (Eigen::Index j = 0; j < k; ++j)
      if (std::abs(basis(i, j)) > 1e-12) o.add_term(words[static_cast<std::size_t>(j)], basis(i, j));
    if (!o.empty()) out.push_back(std::move(o));
  }
  return out;
}

}  // namespace symproj
