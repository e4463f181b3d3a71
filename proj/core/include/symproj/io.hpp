#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symproj/fermion.hpp"
#include "symproj/pauli.hpp"
#include "symproj/pointgroup.hpp"
#include "symproj/system.hpp"
#include "symproj/vqe.hpp"

namespace symproj {

/**
 * Molpro-style FCIDUMP: a `&FCI ... &END` namelist header followed by
 * `value i j k l` records with 1-based indices in chemists' notation.
 * Two-electron records are expanded over the 8 real permutational images,
 * one-electron records are symmetrized, and repeated records (same unique
 * index set) are summed. Orbital-energy records (i 0 0 0) are ignored.
 * Errors carry the offending line number.
 */
MolecularIntegrals parse_fcidump(const std::string& path);
MolecularIntegrals parse_fcidump_text(const std::string& text, const std::string& source = "<text>");

/// Writes unique records at 17 significant digits; entries with |v| <= tol are skipped.
void write_fcidump(const MolecularIntegrals& ints, const std::string& path, double tol = 0.0);
std::string format_fcidump(const MolecularIntegrals& ints, double tol = 0.0);

/// {"n_qubits": n, "terms": [{"word": "X3 Z1", "re": r, "im": m}, ...]}.
std::string operator_to_json(const PauliSum& op, int indent = 2);
PauliSum operator_from_json(const std::string& text);
PauliSum read_operator(const std::string& path);
void write_operator(const PauliSum& op, const std::string& path);

/**
 * {"name": "...", "elements": [...], "classes": [[...], ...],
 *  "irreps": [{"label": "A1", "dimension": 1, "characters": [1, 1, ...]}]}
 * Characters are numbers or [re, im] pairs, one per class. The built-in
 * presets are available as {"preset": "C2v"} and {"preset": "C3v"}.
 */
GroupSpec group_spec_from_json(const std::string& text);

struct TermCountRow {
  std::string label;
  std::size_t count = 0;
  /// Set for union rows: the second operator of the pair.
  std::optional<std::string> union_with;
};

struct TermCountReport {
  double cutoff = kReportCutoff;
  std::map<std::string, std::string> metadata;
  std::vector<TermCountRow> rows;

  const TermCountRow* find(const std::string& label) const;
  std::string to_text() const;
  std::string to_json() const;
};

struct LabeledOperator {
  std::string label;
  PauliSum op;
};

/// One row per operator plus one row per (a, b) pair in `unions` giving
/// |words(a) ∪ words(b)|. Throws InputError for unknown labels.
TermCountReport report_terms(const std::vector<LabeledOperator>& operators,
                             const std::vector<std::pair<std::string, std::string>>& unions = {},
                             double cutoff = kReportCutoff);

/**
 * Term counts of the fixture's operators and projectors on its reduced
 * register: H, N, S2, then each available projector P followed by H*P and
 * the union row "H*P u P". Projectors come from the manifest sections
 * (number, squared number filter, singlet spin, irrep, irrep times the
 * "s2_triplet" spin section, low-qubit).
 */
TermCountReport fixture_term_report(const MolecularSystem& system, double cutoff = kReportCutoff);

/// coordinate, energy, hamiltonian_energy, exact_energy, error, converged, restart, evaluations.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

}  // namespace symproj
