#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symproj/errors.hpp"
#include "symproj/io.hpp"
#include "symproj/simulator.hpp"
#include "symproj/system.hpp"

namespace symproj {

namespace {

using nlohmann::json;

template <typename T>
std::vector<T> list_or_empty(const json& j, const char* key) {
  return j.contains(key) ? j.at(key).get<std::vector<T>>() : std::vector<T>{};
}

Manifest parse_manifest(const json& j, const std::string& directory) {
  Manifest m;
  m.directory = directory;
  m.molecule = j.at("molecule").get<std::string>();
  m.basis = j.value("basis", "");
  m.encoding = parse_encoding_kind(j.at("encoding").get<std::string>());
  m.ordering = parse_spin_ordering(j.value("spin_ordering", "interleaved"));
  m.reference_geometry = j.value("reference_geometry", 0.0);
  m.stationary_qubits = list_or_empty<std::size_t>(j, "stationary_qubits");
  if (j.contains("point_group") && !j.at("point_group").is_null())
    m.point_group = j.at("point_group").get<std::string>();
  m.entanglers = list_or_empty<std::string>(j, "qcc_entanglers");

  const json syms = j.value("symmetries", json::object());
  for (const auto& [key, s] : syms.items()) {
    if (key == "number") {
      m.number = NumberSymmetryConfig{s.at("target").get<double>(),
                                      list_or_empty<double>(s, "spectrum"),
                                      list_or_empty<double>(s, "filter_above"),
                                      list_or_empty<double>(s, "filter_below")};
    } else if (key.starts_with("s2")) {
      m.spin[key] = SpinSymmetryConfig{s.at("target_s").get<double>(),
                                       list_or_empty<double>(s, "annihilate_s"),
                                       list_or_empty<double>(s, "spectrum")};
    } else if (key == "sz") {
      m.sz_target = s.at("target").get<double>();
    } else if (key == "irrep") {
      m.irrep_target = s.at("target").get<std::string>();
    } else if (key == "lq") {
      m.low_qubit = LowQubitConfig{s.at("target").get<double>(),
                                   list_or_empty<std::size_t>(s, "support")};
    } else {
      throw InputError("unknown symmetry section '" + key + "'");
    }
  }
  for (const auto& p : j.at("points"))
    m.points.push_back({p.at("R").get<double>(), p.at("file").get<std::string>(),
                        list_or_empty<std::string>(p, "orbital_irreps")});
  if (m.points.empty()) throw InputError("manifest lists no geometries");
  return m;
}

// Sorted eigenvalues merged within 1e-8 and rounded to 8 decimals.
std::vector<double> distinct_eigenvalues(const PauliSum& op) {
  std::vector<double> out;
  for (double v : exact_diagonalize(op).values)
    if (out.empty() || v - out.back() > 1e-8) out.push_back(std::round(v * 1e8) / 1e8);
  return out;
}

}  // namespace

std::vector<double> Manifest::grid() const {
  std::vector<double> out;
  for (const auto& p : points) out.push_back(p.coordinate);
  return out;
}

const Manifest::Point& Manifest::point(double coordinate) const {
  for (const auto& p : points)
    if (std::abs(p.coordinate - coordinate) <= 1e-6) return p;
  std::ostringstream msg;
  msg << molecule << " has no geometry at R = " << coordinate;
  throw InputError(msg.str());
}

std::string Manifest::path_of(const Point& p) const {
  return (std::filesystem::path(directory) / p.file).string();
}

Manifest load_manifest(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open manifest '" + path + "'");
  try {
    return parse_manifest(json::parse(f),
                          std::filesystem::path(path).parent_path().string());
  } catch (const json::exception& e) {
    throw InputError("manifest '" + path + "': " + e.what());
  }
}

MolecularSystem::MolecularSystem(const Manifest& manifest, double coordinate)
    : manifest_(manifest),
      coordinate_(coordinate),
      ints_(parse_fcidump(manifest.path_of(manifest.point(coordinate)))),
      enc_(manifest.encoding, ints_.n_spin_orbitals()) {
  const std::size_t n_orb = ints_.n_orbitals();
  const std::size_t modes = ints_.n_spin_orbitals();
  if (ints_.n_electrons % 2 != 0 || ints_.ms2 != 0)
    throw InputError("only closed-shell references are supported");
  for (std::size_t p = 0; p < static_cast<std::size_t>(ints_.n_electrons / 2); ++p)
    for (Spin s : {Spin::kAlpha, Spin::kBeta})
      hf_occupation_ |= std::uint64_t{1} << spin_orbital_index(p, s, n_orb, manifest_.ordering);

  irreps_ = manifest_.point(coordinate).orbital_irreps;
  if (irreps_.empty() && manifest_.point_group == "C2v")
    for (int o : ints_.orbital_irreps) irreps_.push_back(c2v_irrep_from_orbsym(o));
  if (!irreps_.empty() && irreps_.size() != n_orb)
    throw DimensionError("orbital irrep list does not match the orbital count");

  h_full_ = encode_operator(build_hamiltonian(ints_, manifest_.ordering), enc_);
  const auto assignment =
      manifest_.sector.empty()
          ? sector_from_occupation(enc_, hf_occupation_, manifest_.stationary_qubits)
          : manifest_.sector;
  auto [h, record] = reduce_stationary_qubits(h_full_, assignment);
  h_ = std::move(h);
  record_ = std::move(record);
  n_ = apply_reduction(encode_operator(number_operator(modes), enc_), record_);
  sz_ = apply_reduction(encode_operator(sz_operator(modes, manifest_.ordering), enc_), record_);
  s2_ = apply_reduction(encode_operator(s2_operator(modes, manifest_.ordering), enc_), record_);

  const std::uint64_t hf_qubits = enc_.encode_occupation(hf_occupation_);
  for (std::size_t q = 0; q < record_.original_qubits; ++q)
    if (record_.new_index[q] >= 0 && (hf_qubits >> q & 1))
      hf_bits_ |= std::uint64_t{1} << record_.new_index[q];

  if (manifest_.point_group) {
    if (irreps_.empty()) throw InputError("point group given without orbital irreps");
    const GroupSpec group = *manifest_.point_group == "C2v" ? GroupSpec::c2v()
                            : throw InputError("unsupported manifest point group '" +
                                               *manifest_.point_group + "'");
    for (const auto& [g, op] : abelian_elements(enc_, group, irreps_, manifest_.ordering))
      elements_[g] = apply_reduction(op, record_);
  }
}

MolecularSystem MolecularSystem::load(const std::string& manifest_path, double coordinate) {
  return MolecularSystem(load_manifest(manifest_path), coordinate);
}

MolecularSystem MolecularSystem::load(const std::string& manifest_path) {
  const Manifest m = load_manifest(manifest_path);
  return MolecularSystem(m, m.reference_geometry);
}

PauliSum MolecularSystem::low_qubit_operator() const {
  return (n_ + 2.0 * sz_).pruned();
}

std::vector<PauliWord> MolecularSystem::entanglers() const {
  std::vector<PauliWord> out;
  for (const auto& w : manifest_.entanglers) out.push_back(PauliWord::parse(w, n_qubits()));
  return out;
}

Projector MolecularSystem::number_projector(std::optional<double> target) const {
  if (!manifest_.number) throw InputError(manifest_.molecule + " has no number symmetry");
  const auto& cfg = *manifest_.number;
  std::vector<double> spectrum = cfg.spectrum;
  if (spectrum.empty()) spectrum = distinct_eigenvalues(n_);
  return lagrange_projector(n_, SpectrumSpec(spectrum, target.value_or(cfg.target)), "N");
}

Projector MolecularSystem::number_filter(std::optional<double> target) const {
  if (!manifest_.number) throw InputError(manifest_.molecule + " has no number symmetry");
  const auto& cfg = *manifest_.number;
  return approx_squared_filter(n_, target.value_or(cfg.target), cfg.filter_below,
                               cfg.filter_above, "F2_N");
}

Projector MolecularSystem::spin_projector(const std::string& key) const {
  const auto it = manifest_.spin.find(key);
  if (it == manifest_.spin.end())
    throw InputError(manifest_.molecule + " has no spin section '" + key + "'");
  return lowdin_s2_projector(s2_, it->second.target_s, it->second.annihilate_s, key);
}

Projector MolecularSystem::spin_projector_for(double s) const {
  std::vector<double> others;
  bool present = false;
  for (double v : distinct_eigenvalues(s2_)) {
    const double sj = std::round(2.0 * (std::sqrt(0.25 + v) - 0.5)) / 2.0;
    if (std::abs(sj - s) < 1e-9) present = true;
    else others.push_back(sj);
  }
  if (!present) throw InputError("spin " + std::to_string(s) + " does not occur on this register");
  return lowdin_s2_projector(s2_, s, others, "S");
}

Projector MolecularSystem::irrep_projector(const std::optional<std::string>& irrep) const {
  if (elements_.empty()) throw InputError(manifest_.molecule + " has no point group");
  const std::string target = irrep ? *irrep : manifest_.irrep_target.value_or("A1");
  Projector p = group_projector(GroupSpec::c2v(), elements_, target);
  p.label = "P_" + target;
  return p;
}

Projector MolecularSystem::low_qubit_projector(std::optional<double> target) const {
  if (!manifest_.low_qubit && !target)
    throw InputError(manifest_.molecule + " has no low-qubit symmetry");
  const PauliSum o = low_qubit_operator();
  const double t = target ? *target : manifest_.low_qubit->target;
  return lagrange_projector(o, SpectrumSpec(distinct_eigenvalues(o), t), "LQ");
}

}  // namespace symproj
