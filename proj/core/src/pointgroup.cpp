#include "symproj/pointgroup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "symproj/errors.hpp"
#include "symproj/simulator.hpp"

namespace symproj {

std::size_t GroupSpec::irrep_index(const std::string& label) const {
  auto it = std::find(irreps.begin(), irreps.end(), label);
  if (it == irreps.end()) throw InputError("group " + name + " has no irrep '" + label + "'");
  return static_cast<std::size_t>(it - irreps.begin());
}

std::size_t GroupSpec::class_of(const std::string& element) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::find(classes[c].begin(), classes[c].end(), element) != classes[c].end()) return c;
  throw InputError("group " + name + " has no element '" + element + "'");
}

Complex GroupSpec::character(const std::string& irrep, const std::string& element) const {
  return characters.at(irrep_index(irrep)).at(class_of(element));
}

void GroupSpec::validate() const {
  if (irreps.size() != dimensions.size() || irreps.size() != characters.size())
    throw InputError("group " + name + ": irrep, dimension and character counts differ");
  std::size_t covered = 0;
  for (const auto& cls : classes) covered += cls.size();
  if (covered != elements.size()) throw InputError("group " + name + ": classes do not partition");
  for (const auto& e : elements) class_of(e);
  int sum_d2 = 0;
  for (int d : dimensions) sum_d2 += d * d;
  if (static_cast<std::size_t>(sum_d2) != order())
    throw InputError("group " + name + ": |G| != sum of squared dimensions");
  const double g = static_cast<double>(order());
  for (std::size_t a = 0; a < irreps.size(); ++a) {
    if (characters[a].size() != classes.size())
      throw InputError("group " + name + ": character row has the wrong length");
    if (std::abs(characters[a][class_of(elements.front())] - Complex(dimensions[a])) > 1e-12)
      throw InputError("group " + name + ": identity character differs from dimension");
    for (std::size_t b = 0; b < irreps.size(); ++b) {
      Complex s = 0.0;
      for (std::size_t c = 0; c < classes.size(); ++c)
        s += static_cast<double>(classes[c].size()) * std::conj(characters[a][c]) *
             characters[b][c];
      if (std::abs(s - (a == b ? g : 0.0)) > 1e-12)
        throw InputError("group " + name + ": row orthogonality fails");
    }
  }
  for (std::size_t c1 = 0; c1 < classes.size(); ++c1)
    for (std::size_t c2 = 0; c2 < classes.size(); ++c2) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < irreps.size(); ++a)
        s += std::conj(characters[a][c1]) * characters[a][c2];
      const double expect = c1 == c2 ? g / static_cast<double>(classes[c1].size()) : 0.0;
      if (std::abs(s - expect) > 1e-12)
        throw InputError("group " + name + ": column orthogonality fails");
    }
}

GroupSpec GroupSpec::c2v() {
  GroupSpec g;
  g.name = "C2v";
  g.elements = {"E", "C2", "sv(xz)", "sv(yz)"};
  g.classes = {{"E"}, {"C2"}, {"sv(xz)"}, {"sv(yz)"}};
  g.irreps = {"A1", "A2", "B1", "B2"};
  g.dimensions = {1, 1, 1, 1};
  g.characters = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  return g;
}

GroupSpec GroupSpec::c3v() {
  GroupSpec g;
  g.name = "C3v";
  g.elements = {"E", "C3", "C3^2", "sv", "sv'", "sv''"};
  g.classes = {{"E"}, {"C3", "C3^2"}, {"sv", "sv'", "sv''"}};
  g.irreps = {"A1", "A2", "E"};
  g.dimensions = {1, 1, 2};
  g.characters = {{1, 1, 1}, {1, 1, -1}, {2, -1, 0}};
  return g;
}

std::string c2v_irrep_from_orbsym(int orbsym) {
  switch (orbsym) {
    case 1: return "A1";
    case 2: return "B1";
    case 3: return "B2";
    case 4: return "A2";
  }
  throw InputError("C2v ORBSYM must be 1..4, got " + std::to_string(orbsym));
}

void OrbitalRep::validate(const GroupSpec& group) const {
  for (const auto& e : group.elements)
    if (!matrices.count(e)) throw InputError("representation lacks element '" + e + "'");
  for (const auto& [name, m] : matrices) {
    if (m.rows() != m.cols()) throw DimensionError("representation matrix is not square");
    const auto eye = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    if ((m.adjoint() * m - eye).norm() > 1e-10)
      throw InputError("representation matrix of '" + name + "' is not unitary");
  }
  for (const auto& [a, ma] : matrices)
    for (const auto& [b, mb] : matrices) {
      const Eigen::MatrixXcd prod = ma * mb;
      const bool closed = std::any_of(matrices.begin(), matrices.end(), [&](const auto& kv) {
        return (kv.second - prod).norm() < 1e-10;
      });
      if (!closed) throw InputError("product " + a + "*" + b + " is not in the representation");
    }
}

PauliSum abelian_element(const Encoding& enc, const std::set<std::size_t>& negative_modes) {
  std::uint64_t mask = 0;
  for (auto m : negative_modes) {
    if (m >= enc.n_qubits()) throw DimensionError("mode " + std::to_string(m) + " out of range");
    mask ^= enc.inverse_row(m);
  }
  return PauliSum(PauliWord::z_string(enc.n_qubits(), mask));
}

PauliSum abelian_element(const Encoding& enc, const GroupSpec& group, const std::string& element,
                         const std::vector<std::string>& orbital_irreps, SpinOrdering ordering) {
  const std::size_t n_orb = orbital_irreps.size();
  if (2 * n_orb != enc.n_qubits())
    throw DimensionError("orbital irrep list does not match the register");
  std::set<std::size_t> negative;
  for (std::size_t p = 0; p < n_orb; ++p) {
    const std::size_t a = group.irrep_index(orbital_irreps[p]);
    if (group.dimensions[a] != 1)
      throw InputError("orbital " + std::to_string(p) + " carries a degenerate irrep");
    const Complex chi = group.character(orbital_irreps[p], element);
    if (std::abs(chi + 1.0) < 1e-12) {
      negative.insert(spin_orbital_index(p, Spin::kAlpha, n_orb, ordering));
      negative.insert(spin_orbital_index(p, Spin::kBeta, n_orb, ordering));
    } else if (std::abs(chi - 1.0) > 1e-12) {
      throw InputError("abelian elements need characters of +-1");
    }
  }
  return abelian_element(enc, negative);
}

std::map<std::string, PauliSum> abelian_elements(const Encoding& enc, const GroupSpec& group,
                                                 const std::vector<std::string>& orbital_irreps,
                                                 SpinOrdering ordering) {
  std::map<std::string, PauliSum> out;
  for (const auto& e : group.elements)
    out.emplace(e, abelian_element(enc, group, e, orbital_irreps, ordering));
  return out;
}

PauliSum exponential(const PauliSum& a, double term_tolerance, double prune) {
  const std::size_t n = a.n_qubits();
  const double norm = a.one_norm();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  // Accumulate through add_term: the sum operators prune at the arithmetic
  // threshold, which would drop the small high-order Taylor terms.
  PauliSum scaled(n);
  for (const auto& [w, c] : a.terms()) scaled.add_term(w, c * std::ldexp(1.0, -squarings));

  PauliSum result = PauliSum::identity(n);
  PauliSum term = PauliSum::identity(n);
  for (int k = 1; k <= 200; ++k) {
    const PauliSum product = multiply(term, scaled, prune);
    term = PauliSum(n);
    for (const auto& [w, c] : product.terms()) {
      term.add_term(w, c / static_cast<double>(k));
      result.add_term(w, c / static_cast<double>(k));
    }
    if (term.empty() || term.one_norm() < term_tolerance) break;
    if (k == 200) throw NumericalError("exponential series did not converge");
  }
  for (int s = 0; s < squarings; ++s) result = multiply(result, result, prune);
  return result.prune(prune);
}

Eigen::MatrixXcd rotation_generator_matrix(const Eigen::MatrixXcd& rep) {
  if (rep.rows() != rep.cols()) throw DimensionError("representation matrix is not square");
  const auto eye = Eigen::MatrixXcd::Identity(rep.rows(), rep.cols());
  if ((rep.adjoint() * rep - eye).norm() > 1e-10)
    throw InputError("representation matrix is not unitary");
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(rep);
  const Eigen::MatrixXcd& t = schur.matrixT();
  const Eigen::MatrixXcd& u = schur.matrixU();
  Eigen::VectorXcd log_diag(rep.rows());
  for (Eigen::Index i = 0; i < rep.rows(); ++i) {
    const Complex lambda = t(i, i) / std::abs(t(i, i));
    // The -1 eigenvalue takes kappa = i pi, so log(-1) is -i pi here.
    const double angle = std::abs(lambda + 1.0) < 1e-10 ? -std::numbers::pi : std::arg(lambda);
    log_diag(i) = Complex(0.0, angle);
  }
  // Unitary matrices are normal, so T is diagonal up to round-off.
  Eigen::MatrixXcd kappa = -(u * log_diag.asDiagonal() * u.adjoint());
  return 0.5 * (kappa - kappa.adjoint());
}

PauliSum element_from_rep(const Eigen::MatrixXcd& rep, const Encoding& enc,
                          const RotationGeneratorOptions& options) {
  RotationGeneratorOptions opts = options;
  if (!opts.n_modes) opts.n_modes = enc.n_qubits();
  const Eigen::MatrixXcd kappa = rotation_generator_matrix(rep);
  const PauliSum k = encode_operator(orbital_rotation_generator(kappa, opts), enc);
  PauliSum o = exponential(-1.0 * k);
  const PauliSum gram = multiply(o.adjoint(), o);
  if (max_coefficient_difference(gram, PauliSum::identity(enc.n_qubits())) > 1e-10)
    throw NumericalError("exponentiated element is not unitary");
  return o;
}

Projector group_projector(const GroupSpec& group, const std::map<std::string, PauliSum>& elements,
                          const std::string& irrep) {
  const std::size_t a = group.irrep_index(irrep);
  if (elements.empty()) throw InputError("no group elements supplied");
  const std::size_t n = elements.begin()->second.n_qubits();
  PauliSum acc(n);
  for (std::size_t c = 0; c < group.classes.size(); ++c) {
    PauliSum class_sum(n);
    for (const auto& e : group.classes[c]) {
      auto it = elements.find(e);
      if (it == elements.end()) throw InputError("missing group element '" + e + "'");
      class_sum += it->second;
    }
    acc += std::conj(group.characters[a][c]) * class_sum;
  }
  acc *= static_cast<double>(group.dimensions[a]) / static_cast<double>(group.order());
  return {acc.prune(), Provenance::kGroupSum, group.name + ":" + irrep, irrep, 0};
}

Projector c3v_e_block_projector(std::size_t i, std::size_t j, const Encoding& enc,
                                const std::string& irrep) {
  if (i % 2 != 0 || j % 2 != 0) throw InputError("E-block closed form needs even qubits");
  if (i == j || i >= enc.n_qubits() || j >= enc.n_qubits())
    throw DimensionError("E-block qubits must be distinct and inside the register");
  if (enc.kind() == EncodingKind::kParity)
    throw InputError("E-block closed form is not available for the parity encoding");
  const GroupSpec g = GroupSpec::c3v();
  const std::size_t a = g.irrep_index(irrep);
  const std::size_t n = enc.n_qubits();
  const auto& chi = g.characters[a];
  const PauliSum zi(PauliWord::single(n, i, 'Z'));
  const PauliSum zj(PauliWord::single(n, j, 'Z'));
  const PauliSum one = PauliSum::identity(n);
  PauliSum p = std::conj(chi[0]) * one + (std::conj(chi[1]) / 2.0) * (one + 3.0 * (zi * zj)) +
               (3.0 * std::conj(chi[2]) / 2.0) * (zi + zj);
  p *= static_cast<double>(g.dimensions[a]) / 6.0;
  return {p.prune(), Provenance::kExact, "C3v:" + irrep, irrep, 0};
}

OrbitalRep c3v_e_doublet_rep(std::size_t n_modes, std::size_t i, std::size_t j) {
  if (i >= n_modes || j >= n_modes || i == j)
    throw DimensionError("doublet modes must be distinct and inside the register");
  const double h = std::sqrt(3.0) / 2.0;
  auto embed = [&](double a, double b, double c, double d) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n_modes),
                                                    static_cast<Eigen::Index>(n_modes));
    const auto I = static_cast<Eigen::Index>(i), J = static_cast<Eigen::Index>(j);
    m(I, I) = a;
    m(I, J) = b;
    m(J, I) = c;
    m(J, J) = d;
    return m;
  };
  OrbitalRep rep;
  const Eigen::MatrixXcd c3 = embed(-0.5, -h, h, -0.5);
  const Eigen::MatrixXcd sv = embed(1.0, 0.0, 0.0, -1.0);
  rep.matrices["E"] = embed(1.0, 0.0, 0.0, 1.0);
  rep.matrices["C3"] = c3;
  rep.matrices["C3^2"] = c3 * c3;
  rep.matrices["sv"] = sv;
  rep.matrices["sv'"] = sv * c3;
  rep.matrices["sv''"] = sv * c3 * c3;
  return rep;
}

}  // namespace symproj
