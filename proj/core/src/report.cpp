#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "symproj/errors.hpp"
#include "symproj/io.hpp"

namespace symproj {

const TermCountRow* TermCountReport::find(const std::string& label) const {
  for (const auto& r : rows)
    if (r.label == label) return &r;
  return nullptr;
}

std::string TermCountReport::to_text() const {
  std::ostringstream out;
  for (const auto& [k, v] : metadata) out << "# " << k << ": " << v << "\n";
  out << "# cutoff: " << cutoff << "\n";
  std::size_t width = 8;
  for (const auto& r : rows) width = std::max(width, r.label.size() + 2);
  for (const auto& r : rows) {
    out << r.label << std::string(width - r.label.size(), ' ') << r.count << "\n";
  }
  return out.str();
}

std::string TermCountReport::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"label", r.label}, {"count", r.count}};
    if (r.union_with) row["union_with"] = *r.union_with;
    rows_json.push_back(row);
  }
  return nlohmann::json{{"cutoff", cutoff}, {"metadata", metadata}, {"rows", rows_json}}.dump(2);
}

TermCountReport report_terms(const std::vector<LabeledOperator>& operators,
                             const std::vector<std::pair<std::string, std::string>>& unions,
                             double cutoff) {
  TermCountReport report;
  report.cutoff = cutoff;
  auto lookup = [&](const std::string& label) -> const PauliSum& {
    for (const auto& o : operators)
      if (o.label == label) return o.op;
    throw InputError("no operator labeled '" + label + "'");
  };
  for (const auto& o : operators) {
    if (o.op.n_qubits() != operators.front().op.n_qubits())
      throw DimensionError("operator '" + o.label + "' lives on a different register");
    report.rows.push_back({o.label, term_count(o.op, cutoff), std::nullopt});
  }
  for (const auto& [a, b] : unions)
    report.rows.push_back({a + " u " + b, unique_union_count(lookup(a), lookup(b), cutoff), b});
  return report;
}

TermCountReport fixture_term_report(const MolecularSystem& system, double cutoff) {
  const Manifest& m = system.manifest();
  const PauliSum& h = system.hamiltonian();
  std::vector<LabeledOperator> ops{{"H", h}, {"N", system.number()}};
  if (!m.spin.empty()) ops.push_back({"S2", system.s2()});
  std::vector<std::pair<std::string, std::string>> unions;
  auto add = [&](const std::string& label, const PauliSum& p) {
    ops.push_back({label, p});
    ops.push_back({"H*" + label, multiply(h, p)});
    unions.emplace_back("H*" + label, label);
  };
  if (m.number) {
    add("P_N", system.number_projector().op);
    if (!m.number->filter_above.empty() || !m.number->filter_below.empty())
      add("F2_N", system.number_filter().op);
  }
  if (m.spin.contains("s2")) add("P_S", system.spin_projector("s2").op);
  if (m.irrep_target) {
    const Projector g = system.irrep_projector();
    add(g.label, g.op);
    if (m.spin.contains("s2_triplet"))
      add(g.label + "*P_S2=2",
          compose_commuting({g, system.spin_projector("s2_triplet")}).op);
  }
  if (m.low_qubit) add("P_LQ", system.low_qubit_projector().op);

  TermCountReport report = report_terms(ops, unions, cutoff);
  report.metadata["molecule"] = m.molecule;
  report.metadata["basis"] = m.basis;
  char r[32];
  std::snprintf(r, sizeof r, "%.2f", system.coordinate());
  report.metadata["geometry"] = std::string("R = ") + r;
  report.metadata["encoding"] = to_string(m.encoding);
  report.metadata["spin_ordering"] = to_string(m.ordering);
  std::ostringstream red;
  for (const auto& [q, v] : system.reduction().removed)
    red << (red.tellp() > 0 ? "," : "") << q << ":" << (v > 0 ? "+1" : "-1");
  report.metadata["reduction"] = red.str();
  report.metadata["qubits"] = std::to_string(system.n_qubits());
  return report;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "coordinate,energy,hamiltonian_energy,exact_energy,error,converged,restart,evaluations\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f,%.12f,%.12f,%.12f,%.3e,%d,%zu,%zu\n", r.coordinate,
                  r.result.energy, r.result.hamiltonian_energy, r.exact_energy,
                  r.result.energy - r.exact_energy, r.result.converged ? 1 : 0,
                  r.result.restart_index, r.result.evaluations);
    out << buf;
  }
  return out.str();
}

}  // namespace symproj
