#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symproj/encoding.hpp"
#include "symproj/errors.hpp"
#include "symproj/io.hpp"
#include "symproj/projectors.hpp"
#include "symproj/simulator.hpp"
#include "symproj/system.hpp"
#include "symproj/vqe.hpp"

namespace symproj::cli {

namespace {

using nlohmann::json;
using Tokens = std::vector<std::pair<std::string, std::string>>;

// "a=1,b=x" -> {(a, 1), (b, x)}.
Tokens parse_tokens(const std::string& text) {
  Tokens out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw InputError("expected key=value, got '" + item + "'");
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return out;
}

double to_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw InputError("not a number: '" + text + "'");
  return v;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(to_number(item));
  return out;
}

// "1:+1,3:-1" (an optional "q=" prefix is accepted).
std::vector<std::pair<std::size_t, int>> parse_reduction(std::string text) {
  if (text.starts_with("q=")) text = text.substr(2);
  std::vector<std::pair<std::size_t, int>> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("expected qubit:+-1, got '" + item + "'");
    const double q = to_number(item.substr(0, colon));
    const double v = to_number(item.substr(colon + 1));
    if (q < 0 || q != std::floor(q)) throw InputError("bad qubit index in '" + item + "'");
    if (v != 1.0 && v != -1.0) throw InputError("eigenvalue must be +1 or -1 in '" + item + "'");
    out.emplace_back(static_cast<std::size_t>(q), static_cast<int>(v));
  }
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << "\n";
}

json operator_json(const PauliSum& op) { return json::parse(operator_to_json(op)); }

json projector_json(const Projector& p) {
  json j = operator_json(p.op);
  j["label"] = p.label;
  j["target"] = p.target;
  j["provenance"] = to_string(p.provenance);
  if (p.expansion_terms) j["expansion_terms"] = p.expansion_terms;
  return j;
}

json reduction_json(const ReductionRecord& r) {
  json removed = json::array();
  for (const auto& [q, v] : r.removed) removed.push_back({q, v});
  return {{"original_qubits", r.original_qubits}, {"removed", removed}, {"new_index", r.new_index}};
}

json symmetries_json(const std::vector<SymmetryReport>& reps) {
  json out = json::array();
  for (const auto& s : reps)
    out.push_back({{"label", s.label},
                   {"target", s.target},
                   {"expectation", s.expectation},
                   {"variance", s.variance}});
  return out;
}

// Options shared by every subcommand that loads a fixture bundle.
struct FixtureOptions {
  std::string manifest;
  std::optional<double> coordinate;
  std::string encoding;
  std::string ordering;
  std::string reduce;

  void add_to(CLI::App* app, bool required) {
    auto* f = app->add_option("--fixture", manifest, "Fixture manifest.json");
    if (required) f->required();
    app->add_option("--R", coordinate, "Geometry (defaults to the reference geometry)");
    app->add_option("--encoding", encoding,
                    "jw|parity|bk; overriding the manifest drops its reduction unless --reduce is given");
    app->add_option("--ordering", ordering, "interleaved|blocked");
    app->add_option("--reduce", reduce, "Stationary qubits as idx:+-1,... or 'none'");
  }

  bool given() const { return !manifest.empty(); }

  MolecularSystem load() const {
    Manifest m = load_manifest(manifest);
    if (!encoding.empty()) {
      m.encoding = parse_encoding_kind(encoding);
      m.stationary_qubits.clear();
    }
    if (!ordering.empty()) {
      m.ordering = parse_spin_ordering(ordering);
      m.stationary_qubits.clear();
    }
    if (reduce == "none") {
      m.stationary_qubits.clear();
    } else if (!reduce.empty()) {
      m.sector = parse_reduction(reduce);
      m.stationary_qubits.clear();
      for (const auto& [q, v] : m.sector) m.stationary_qubits.push_back(q);
    }
    return MolecularSystem(m, coordinate.value_or(m.reference_geometry));
  }
};

// n=<t>, f2n=<t>, s=<S>, s2=<S(S+1)>, irrep=<label>, lq=<t>; several compose.
Projector fixture_projector(const MolecularSystem& sys, const std::string& spec) {
  std::vector<Projector> parts;
  for (const auto& [key, value] : parse_tokens(spec)) {
    if (key == "n") parts.push_back(sys.number_projector(to_number(value)));
    else if (key == "f2n") parts.push_back(sys.number_filter(to_number(value)));
    else if (key == "s") parts.push_back(sys.spin_projector_for(to_number(value)));
    else if (key == "s2")
      parts.push_back(sys.spin_projector_for(std::sqrt(0.25 + to_number(value)) - 0.5));
    else if (key == "irrep") parts.push_back(sys.irrep_projector(value));
    else if (key == "lq") parts.push_back(sys.low_qubit_projector(to_number(value)));
    else throw InputError("unknown projector key '" + key + "'");
  }
  if (parts.empty()) throw InputError("empty projector specification");
  Projector p = parts.size() == 1 ? parts.front() : compose_commuting(parts);
  p.label = spec;
  return p;
}

// n, sz, s2, lq take numeric targets; irrep=<label> constrains <P_irrep> = 1.
std::vector<SymmetryTarget> fixture_constraints(const MolecularSystem& sys,
                                                const std::string& spec) {
  std::vector<SymmetryTarget> out;
  for (const auto& [key, value] : parse_tokens(spec)) {
    const std::string label = key + "=" + value;
    if (key == "n") out.push_back({label, sys.number(), to_number(value)});
    else if (key == "sz") out.push_back({label, sys.sz(), to_number(value)});
    else if (key == "s2") out.push_back({label, sys.s2(), to_number(value)});
    else if (key == "lq") out.push_back({label, sys.low_qubit_operator(), to_number(value)});
    else if (key == "irrep") out.push_back({label, sys.irrep_projector(value).op, 1.0});
    else throw InputError("unknown constraint key '" + key + "'");
  }
  return out;
}

struct VqeOptions {
  std::string functional = "plain";
  std::string projector;
  std::string constraints;
  double mu = 1000.0;
  unsigned restarts = 24;
  std::uint64_t seed = 20240601;
  std::size_t max_evaluations = 20000;
  bool qcc = false;
  std::vector<std::string> entanglers;
  std::string config;

  void add_to(CLI::App* app) {
    app->add_option("--functional", functional,
                    "plain|average|variance|projector-penalty|vap|vap-filter");
    app->add_option("--projector", projector, "Projector tokens, e.g. n=2 or irrep=B1,s=1");
    app->add_option("--constrain", constraints, "Symmetry targets, e.g. n=4,s2=2,irrep=B1");
    app->add_option("--mu", mu, "Penalty weight (Hartree)");
    app->add_option("--restarts", restarts, "Random starts");
    app->add_option("--seed", seed, "Random seed");
    app->add_option("--max-evals", max_evaluations, "Evaluation budget per start");
    app->add_flag("--qcc", qcc, "Use the manifest's entanglers");
    app->add_option("--entangler", entanglers, "Entangler word, e.g. \"X2 X1 Y0\" (repeatable)");
    app->add_option("--config", config, "Job JSON; keys mirror the long flag names");
  }

  // Fills options not given on the command line from the job JSON.
  void merge_config(CLI::App* app, FixtureOptions& fixture) {
    if (config.empty()) return;
    json j;
    try {
      j = json::parse(read_text(config));
    } catch (const json::exception& e) {
      throw InputError("bad job config '" + config + "': " + e.what());
    }
    auto unset = [&](const char* flag) { return app->count(flag) == 0; };
    try {
      if (j.contains("fixture") && unset("--fixture")) fixture.manifest = j["fixture"];
      if (j.contains("R") && unset("--R")) fixture.coordinate = j["R"].get<double>();
      if (j.contains("encoding") && unset("--encoding")) fixture.encoding = j["encoding"];
      if (j.contains("ordering") && unset("--ordering")) fixture.ordering = j["ordering"];
      if (j.contains("reduce") && unset("--reduce")) fixture.reduce = j["reduce"];
      if (j.contains("functional") && unset("--functional")) functional = j["functional"];
      if (j.contains("projector") && unset("--projector")) projector = j["projector"];
      if (j.contains("constrain") && unset("--constrain")) constraints = j["constrain"];
      if (j.contains("mu") && unset("--mu")) mu = j["mu"];
      if (j.contains("restarts") && unset("--restarts")) restarts = j["restarts"];
      if (j.contains("seed") && unset("--seed")) seed = j["seed"];
      if (j.contains("max_evals") && unset("--max-evals")) max_evaluations = j["max_evals"];
      if (j.contains("qcc") && unset("--qcc")) qcc = j["qcc"];
      if (j.contains("entanglers") && unset("--entangler"))
        entanglers = j["entanglers"].get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      throw InputError("bad job config '" + config + "': " + e.what());
    }
  }

  FunctionalSpec spec(const MolecularSystem& sys) const {
    FunctionalSpec s;
    s.kind = parse_functional_kind(functional);
    s.mu = mu;
    if (!constraints.empty()) s.symmetries = fixture_constraints(sys, constraints);
    if (!projector.empty()) s.projector = fixture_projector(sys, projector);
    return s;
  }

  AnsatzTemplate ansatz(const MolecularSystem& sys) const {
    AnsatzTemplate a{sys.n_qubits(), {}};
    if (qcc) a.entanglers = sys.entanglers();
    for (const auto& w : entanglers) a.entanglers.push_back(PauliWord::parse(w, sys.n_qubits()));
    return a;
  }

  OptimizerConfig optimizer() const {
    OptimizerConfig c;
    c.restarts = restarts;
    c.seed = seed;
    c.max_evaluations = max_evaluations;
    return c;
  }
};

// Exact reference for a run: the sector energy of an exact projector, the
// global ground state otherwise.
double reference_energy(const PauliSum& h, const FunctionalSpec& spec) {
  if (spec.projector && spec.projector->is_exact()) return sector_ground_energy(h, *spec.projector);
  return exact_diagonalize(h).values(0);
}

json result_json(const OptResult& r, double exact) {
  return {{"energy", r.energy},
          {"hamiltonian_energy", r.hamiltonian_energy},
          {"exact_energy", exact},
          {"error", r.energy - exact},
          {"converged", r.converged},
          {"tolerance_met", r.tolerance_met},
          {"constraints_met", r.constraints_met},
          {"restart_index", r.restart_index},
          {"iterations", r.iterations},
          {"evaluations", r.evaluations},
          {"parameters", r.parameters},
          {"symmetries", symmetries_json(r.symmetries)}};
}

std::vector<double> parse_grid(const std::string& text) {
  // start:stop:step or a comma list.
  if (text.find(':') == std::string::npos) return parse_list(text);
  std::vector<double> v;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ':');) v.push_back(to_number(item));
  if (v.size() != 3 || !(v[2] > 0.0) || v[1] < v[0]) throw InputError("grid must be start:stop:step");
  std::vector<double> out;
  const auto n = static_cast<long>(std::llround((v[1] - v[0]) / v[2]));
  for (long i = 0; i <= n; ++i) out.push_back(v[0] + static_cast<double>(i) * v[2]);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetry projectors and constrained VQE for qubit Hamiltonians", "symproj"};
  app.require_subcommand(1);
  std::string output;
  std::function<void()> action;

  // encode
  auto* encode = app.add_subcommand("encode", "Encode an FCIDUMP or fixture into operator JSON");
  FixtureOptions enc_fix;
  std::string fcidump, observable = "hamiltonian";
  encode->add_option("--fcidump", fcidump, "FCIDUMP file");
  enc_fix.add_to(encode, false);
  encode->add_option("--observable", observable, "hamiltonian|number|sz|s2");
  encode->add_option("-o,--output", output, "Output file (stdout by default)");
  encode->callback([&] {
    action = [&] {
      if (fcidump.empty() == !enc_fix.given())
        throw InputError("encode needs exactly one of --fcidump and --fixture");
      MolecularIntegrals ints;
      EncodingKind kind = EncodingKind::kJordanWigner;
      SpinOrdering ordering = SpinOrdering::kInterleaved;
      if (!fcidump.empty()) {
        ints = parse_fcidump(fcidump);
      } else {
        const Manifest m = load_manifest(enc_fix.manifest);
        ints = parse_fcidump(m.path_of(m.point(enc_fix.coordinate.value_or(m.reference_geometry))));
        kind = m.encoding;
        ordering = m.ordering;
      }
      if (!enc_fix.encoding.empty()) kind = parse_encoding_kind(enc_fix.encoding);
      if (!enc_fix.ordering.empty()) ordering = parse_spin_ordering(enc_fix.ordering);
      const std::size_t modes = ints.n_spin_orbitals();
      FermionOperator f(modes);
      if (observable == "hamiltonian") f = build_hamiltonian(ints, ordering);
      else if (observable == "number") f = number_operator(modes);
      else if (observable == "sz") f = sz_operator(modes, ordering);
      else if (observable == "s2") f = s2_operator(modes, ordering);
      else throw InputError("unknown observable '" + observable + "'");
      PauliSum op = encode_operator(f, Encoding(kind, modes));
      json j = operator_json(op);
      if (!enc_fix.reduce.empty() && enc_fix.reduce != "none") {
        auto [reduced, record] = reduce_stationary_qubits(op, parse_reduction(enc_fix.reduce));
        j = operator_json(reduced);
        j["reduction"] = reduction_json(record);
      }
      j["encoding"] = to_string(kind);
      j["spin_ordering"] = to_string(ordering);
      emit(j.dump(2), output, out);
    };
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Remove stationary qubits from an operator");
  std::string op_path, reduce_spec;
  bool detect = false;
  reduce->add_option("--operator", op_path, "Operator JSON")->required();
  reduce->add_option("--reduce", reduce_spec, "idx:+-1,... assignment");
  reduce->add_flag("--detect", detect, "List stationary qubits and per-sector ground energies");
  reduce->add_option("-o,--output", output, "Output file (stdout by default)");
  reduce->callback([&] {
    action = [&] {
      const PauliSum op = read_operator(op_path);
      if (detect) {
        const auto qubits = detect_stationary_qubits(op);
        json sectors = json::array();
        if (!qubits.empty() && op.n_qubits() - qubits.size() <= kDenseQubitCap)
          for (const auto& s : sector_ground_energies(op, qubits)) {
            json a = json::array();
            for (const auto& [q, v] : s.assignment) a.push_back({q, v});
            sectors.push_back({{"assignment", a}, {"ground_energy", s.ground_energy}});
          }
        emit(json{{"stationary_qubits", qubits}, {"sectors", sectors}}.dump(2), output, out);
        return;
      }
      if (reduce_spec.empty()) throw InputError("reduce needs --reduce or --detect");
      auto [reduced, record] = reduce_stationary_qubits(op, parse_reduction(reduce_spec));
      json j = operator_json(reduced);
      j["reduction"] = reduction_json(record);
      emit(j.dump(2), output, out);
    };
  });

  // project
  auto* project = app.add_subcommand("project", "Build a projector as operator JSON");
  FixtureOptions proj_fix;
  std::string proj_tokens, method = "lagrange", spectrum, annihilate, above, below, group_path, irrep;
  std::optional<double> target;
  unsigned order_m = 2;
  double scale_d = 1.0;
  std::vector<std::string> elements;
  proj_fix.add_to(project, false);
  project->add_option("--projector", proj_tokens, "Fixture projector tokens, e.g. n=2,s=0");
  project->add_option("--operator", op_path, "Operator JSON for a generic projector");
  project->add_option("--method", method, "lagrange|circle|cyclic|lowdin|filter|group");
  project->add_option("--target", target, "Target eigenvalue (or spin for lowdin)");
  project->add_option("--spectrum", spectrum, "Eigenvalues for lagrange (dense spectrum if omitted)");
  project->add_option("--annihilate", annihilate, "Spins removed by lowdin");
  project->add_option("--above", above, "Filter eigenvalues above the target");
  project->add_option("--below", below, "Filter eigenvalues below the target");
  project->add_option("--order", order_m, "Cyclic subgroup order M");
  project->add_option("--scale", scale_d, "Cyclic subgroup scale d");
  project->add_option("--group", group_path, "Group JSON for --method group");
  project->add_option("--element", elements, "NAME=operator.json for --method group (repeatable)");
  project->add_option("--irrep", irrep, "Irrep for --method group");
  project->add_option("-o,--output", output, "Output file (stdout by default)");
  project->callback([&] {
    action = [&] {
      Projector p;
      if (proj_fix.given()) {
        if (proj_tokens.empty()) throw InputError("project --fixture needs --projector");
        p = fixture_projector(proj_fix.load(), proj_tokens);
      } else if (method == "group") {
        if (group_path.empty() || irrep.empty()) throw InputError("group method needs --group and --irrep");
        const GroupSpec g = group_spec_from_json(read_text(group_path));
        std::map<std::string, PauliSum> ops;
        for (const auto& e : elements) {
          const auto eq = e.find('=');
          if (eq == std::string::npos) throw InputError("expected NAME=path, got '" + e + "'");
          ops[e.substr(0, eq)] = read_operator(e.substr(eq + 1));
        }
        p = group_projector(g, ops, irrep);
      } else {
        if (op_path.empty()) throw InputError("project needs --fixture or --operator");
        if (!target) throw InputError("project needs --target");
        const PauliSum op = read_operator(op_path);
        if (method == "lagrange") {
          std::vector<double> values = parse_list(spectrum);
          if (values.empty())
            for (double v : exact_diagonalize(op).values)
              if (values.empty() || v - values.back() > 1e-8) values.push_back(std::round(v * 1e8) / 1e8);
          p = lagrange_projector(op, SpectrumSpec(values, *target));
        } else if (method == "circle") {
          p = circle_integral_projector(op, *target);
        } else if (method == "cyclic") {
          p = cyclic_subgroup_projector(op, *target, order_m, scale_d);
        } else if (method == "lowdin") {
          p = lowdin_s2_projector(op, *target, parse_list(annihilate));
        } else if (method == "filter") {
          p = approx_squared_filter(op, *target, parse_list(below), parse_list(above));
        } else {
          throw InputError("unknown projector method '" + method + "'");
        }
      }
      emit(projector_json(p).dump(2), output, out);
    };
  });

  // diag
  auto* diag = app.add_subcommand("diag", "Exact diagonalization");
  FixtureOptions diag_fix;
  std::string diag_projector;
  std::size_t count = 0;
  diag_fix.add_to(diag, false);
  diag->add_option("--operator", op_path, "Operator JSON");
  diag->add_option("--projector", diag_projector,
                   "Projector JSON file, or tokens with --fixture; prints the sector ground energy");
  diag->add_option("--count", count, "Print only the lowest eigenvalues");
  diag->add_option("-o,--output", output, "Output file (stdout by default)");
  diag->callback([&] {
    action = [&] {
      if (op_path.empty() == !diag_fix.given())
        throw InputError("diag needs exactly one of --operator and --fixture");
      std::optional<MolecularSystem> sys;
      if (diag_fix.given()) sys.emplace(diag_fix.load());
      const PauliSum h = sys ? sys->hamiltonian() : read_operator(op_path);
      json j;
      if (!diag_projector.empty()) {
        Projector p;
        if (sys) {
          p = fixture_projector(*sys, diag_projector);
        } else {
          p.op = read_operator(diag_projector);
          const ProjectorLaws laws = projector_laws(p.op, h);
          if (laws.idempotency > 1e-8 || laws.hermiticity > 1e-8)
            throw NumericalError("projector file is not a Hermitian idempotent");
          if (laws.commutation > 1e-8) throw NumericalError("projector does not commute with the operator");
        }
        j["sector_ground_energy"] = sector_ground_energy(h, p);
      } else {
        const Eigen::VectorXd values = exact_diagonalize(h).values;
        std::vector<double> v(values.data(), values.data() + values.size());
        if (count && count < v.size()) v.resize(count);
        j["eigenvalues"] = v;
      }
      emit(j.dump(2), output, out);
    };
  });

  // vqe
  auto* vqe = app.add_subcommand("vqe", "Optimize a QMF/QCC ansatz on a fixture geometry");
  FixtureOptions vqe_fix;
  VqeOptions vqe_opts;
  vqe_fix.add_to(vqe, false);
  vqe_opts.add_to(vqe);
  vqe->add_option("-o,--output", output, "Output file (stdout by default)");
  vqe->callback([&] {
    action = [&] {
      vqe_opts.merge_config(vqe, vqe_fix);
      if (!vqe_fix.given()) throw InputError("vqe needs --fixture");
      const MolecularSystem sys = vqe_fix.load();
      const FunctionalSpec spec = vqe_opts.spec(sys);
      const OptResult r =
          optimize(Functional(spec, sys.hamiltonian()), vqe_opts.ansatz(sys), vqe_opts.optimizer());
      json j = result_json(r, reference_energy(sys.hamiltonian(), spec));
      j["molecule"] = sys.manifest().molecule;
      j["R"] = sys.coordinate();
      j["functional"] = to_string(spec.kind);
      j["reduction"] = reduction_json(sys.reduction());
      emit(j.dump(2), output, out);
    };
  });

  // scan
  auto* scan = app.add_subcommand("scan", "Potential energy scan with warm starts (CSV)");
  FixtureOptions scan_fix;
  VqeOptions scan_opts;
  std::string grid;
  scan_fix.add_to(scan, false);
  scan_opts.add_to(scan);
  scan->add_option("--grid", grid, "start:stop:step or a comma list (manifest grid by default)");
  scan->add_option("-o,--output", output, "CSV file (stdout by default)");
  scan->callback([&] {
    action = [&] {
      scan_opts.merge_config(scan, scan_fix);
      if (!scan_fix.given()) throw InputError("scan needs --fixture");
      const Manifest m = load_manifest(scan_fix.manifest);
      const std::vector<double> coords = grid.empty() ? m.grid() : parse_grid(grid);
      const MolecularSystem first = [&] {
        FixtureOptions f = scan_fix;
        f.coordinate = coords.at(0);
        return f.load();
      }();
      auto problem = [&](double r) {
        FixtureOptions f = scan_fix;
        f.coordinate = r;
        const MolecularSystem sys = f.load();
        ScanProblem p{sys.hamiltonian(), scan_opts.spec(sys), std::nullopt};
        if (p.spec.projector && p.spec.projector->is_exact()) p.reference_projector = p.spec.projector->op;
        return p;
      };
      const auto rows = pes_scan(coords, problem, scan_opts.ansatz(first), scan_opts.optimizer());
      emit(scan_to_csv(rows), output, out);
    };
  });

  // report-terms
  auto* report = app.add_subcommand("report-terms", "Pauli word counts of operators and projectors");
  FixtureOptions rep_fix;
  double cutoff = kReportCutoff;
  bool as_json = false;
  std::vector<std::string> labeled, union_pairs;
  rep_fix.add_to(report, false);
  report->add_option("--cutoff", cutoff, "Coefficient magnitude counted as zero");
  report->add_option("--operator", labeled, "LABEL=operator.json (repeatable)");
  report->add_option("--union", union_pairs, "A,B: count words of A and B together (repeatable)");
  report->add_flag("--json", as_json, "JSON instead of text");
  report->add_option("-o,--output", output, "Output file (stdout by default)");
  report->callback([&] {
    action = [&] {
      if (!(cutoff >= 0.0)) throw InputError("cutoff must be non-negative");
      TermCountReport r;
      if (rep_fix.given()) {
        r = fixture_term_report(rep_fix.load(), cutoff);
      } else {
        std::vector<LabeledOperator> ops;
        for (const auto& l : labeled) {
          const auto eq = l.find('=');
          if (eq == std::string::npos) throw InputError("expected LABEL=path, got '" + l + "'");
          ops.push_back({l.substr(0, eq), read_operator(l.substr(eq + 1))});
        }
        std::vector<std::pair<std::string, std::string>> unions;
        for (const auto& u : union_pairs) {
          const auto comma = u.find(',');
          if (comma == std::string::npos) throw InputError("expected A,B, got '" + u + "'");
          unions.emplace_back(u.substr(0, comma), u.substr(comma + 1));
        }
        r = report_terms(ops, unions, cutoff);
      }
      emit(as_json ? r.to_json() : r.to_text(), output, out);
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (e.get_exit_code() != 0) {
      err << app.help();
      return 2;
    }
    return 0;
  }

  try {
    if (action) action();
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace symproj::cli
