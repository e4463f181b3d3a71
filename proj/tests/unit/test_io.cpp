#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "oracles.hpp"
#include "symproj/errors.hpp"
#include "symproj/io.hpp"
#include "symproj/system.hpp"

using namespace symproj;

namespace {

const std::string kSmall = R"(&FCI NORB=2,NELEC=2,MS2=0,
  ORBSYM=1,2,
  ISYM=1,
&END
  0.5  1 1 1 1
  0.1  2 1 1 1
  0.25 2 1 2 1
  0.7  2 2 2 2
  0.2  2 2 1 1
 -1.2  1 1 0 0
  0.05 2 1 0 0
 -0.4  2 2 0 0
 -9.0  1 0 0 0
  0.75 0 0 0 0
)";

std::string expect_message(const std::string& text) {
  try {
    parse_fcidump_text(text, "test.fcidump");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("symproj_io_" + name);
}

MolecularSystem load(const std::string& molecule) {
  return MolecularSystem::load(std::string(SYMPROJ_FIXTURE_DIR) + "/" + molecule + "/manifest.json");
}

std::size_t row(const TermCountReport& r, const std::string& label) {
  const TermCountRow* found = r.find(label);
  REQUIRE_MESSAGE(found != nullptr, label);
  return found->count;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("FCIDUMP records expand over the permutational images") {
  const MolecularIntegrals ints = parse_fcidump_text(kSmall);
  CHECK(ints.n_orbitals() == 2);
  CHECK(ints.n_electrons == 2);
  CHECK(ints.orbital_irreps == std::vector<int>{1, 2});
  CHECK(ints.core_energy == 0.75);
  CHECK(ints.one_body(0, 0) == -1.2);
  CHECK(ints.one_body(0, 1) == 0.05);
  CHECK(ints.one_body(1, 0) == 0.05);
  // (21|11) = <21|11>.
  CHECK(ints.two_body(1, 0, 0, 0) == 0.1);
  CHECK(ints.two_body(0, 0, 1, 0) == 0.1);
  CHECK(ints.two_body(0, 0, 0, 1) == 0.1);
  // (22|11) = <21|21>.
  CHECK(ints.two_body(1, 0, 1, 0) == 0.2);
  CHECK(ints.two_body(0, 1, 0, 1) == 0.2);
  // (21|21) = <22|11>.
  CHECK(ints.two_body(1, 1, 0, 0) == 0.25);
  CHECK(ints.two_body(0, 1, 1, 0) == 0.25);
  CHECK_NOTHROW(ints.validate());
}

TEST_CASE("repeated records are summed") {
  const std::string text = "&FCI NORB=1,NELEC=2 &END\n 0.5 1 1 1 1\n 0.25 1 1 1 1\n -1.0 1 1 0 0\n -0.5 1 1 0 0\n";
  const MolecularIntegrals ints = parse_fcidump_text(text);
  CHECK(ints.two_body(0, 0, 0, 0) == 0.75);
  CHECK(ints.one_body(0, 0) == -1.5);
  // A permuted image of an existing record is a repeat too.
  const MolecularIntegrals perm =
      parse_fcidump_text("&FCI NORB=2 &END\n 0.1 2 1 1 1\n 0.2 1 2 1 1\n");
  CHECK(perm.two_body(1, 0, 0, 0) == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("errors carry the line number") {
  CHECK(expect_message("junk\n") == "test.fcidump:1: expected &FCI header");
  CHECK(expect_message("&FCI NORB=2 &END\n 0.5 1 1 1\n").rfind("test.fcidump:2: malformed record", 0) == 0);
  CHECK(expect_message("&FCI NORB=2 &END\n 0.5 1 1 1 1\n 0.5 3 1 1 1\n").rfind("test.fcidump:3: index 3", 0) == 0);
  CHECK(expect_message("&FCI NORB=2 &END\n 0.5 1 1 1 1 7\n").rfind("test.fcidump:2: trailing data", 0) == 0);
  CHECK(expect_message("&FCI NELEC=2 &END\n").rfind("test.fcidump:1: header lacks", 0) == 0);
  CHECK(expect_message("&FCI NORB=2,ORBSYM=1 &END\n").rfind("test.fcidump:1: ORBSYM", 0) == 0);
  CHECK(expect_message("&FCI NORB=2\n").find("missing &END") != std::string::npos);
  CHECK(expect_message("&FCI NORB=2 &END\n 0.5 1 0 1 0\n").rfind("test.fcidump:2: unsupported", 0) == 0);
  CHECK_THROWS_AS(parse_fcidump("/nonexistent/x.fcidump"), InputError);
}

TEST_CASE("FCIDUMP round trip") {
  const MolecularIntegrals a = parse_fcidump_text(kSmall);
  const MolecularIntegrals b = parse_fcidump_text(format_fcidump(a));
  CHECK(b.core_energy == a.core_energy);
  CHECK(b.orbital_irreps == a.orbital_irreps);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q) {
      CHECK(b.one_body(p, q) == a.one_body(p, q));
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s) CHECK(b.two_body(p, q, r, s) == a.two_body(p, q, r, s));
    }
  const MolecularIntegrals lih = parse_fcidump(std::string(SYMPROJ_FIXTURE_DIR) + "/lih/R1.60.fcidump");
  const auto path = temp_path("roundtrip.fcidump");
  write_fcidump(lih, path.string());
  const MolecularIntegrals back = parse_fcidump(path.string());
  std::filesystem::remove(path);
  const std::size_t n = lih.n_orbitals();
  double worst = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          worst = std::max(worst, std::abs(back.two_body(p, q, r, s) - lih.two_body(p, q, r, s)));
  CHECK(worst == 0.0);
  CHECK(back.core_energy == lih.core_energy);
}

TEST_CASE("operator JSON round trip") {
  oracle::Gen gen(81);
  for (int trial = 0; trial < 100; ++trial) {
    const PauliSum op = gen.sum(gen.integer(1, 30), gen.integer(0, 12), false);
    const PauliSum back = operator_from_json(operator_to_json(op));
    CHECK(back.n_qubits() == op.n_qubits());
    CHECK(max_coefficient_difference(back, op) == 0.0);
  }
  const auto path = temp_path("op.json");
  const PauliSum z = PauliSum(PauliWord::parse("Z2 X0", 3), Complex(0.5, -0.25));
  write_operator(z, path.string());
  CHECK(approx_equal(read_operator(path.string()), z, 0.0));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(operator_from_json("{\"n_qubits\": 2, \"terms\": [{\"word\": \"X4\", \"re\": 1}]}"),
                  InputError);
  CHECK_THROWS_AS(operator_from_json("not json"), InputError);
  CHECK_THROWS_AS(read_operator("/nonexistent/op.json"), InputError);
}

TEST_CASE("group specifications from JSON") {
  const GroupSpec preset = group_spec_from_json(R"({"preset": "C3v"})");
  CHECK(preset.order() == 6);
  const GroupSpec custom = group_spec_from_json(R"({
    "name": "Cs", "elements": ["E", "sh"], "classes": [["E"], ["sh"]],
    "irreps": [{"label": "A'", "dimension": 1, "characters": [1, 1]},
               {"label": "A''", "dimension": 1, "characters": [1, [-1, 0]]}]})");
  CHECK(custom.order() == 2);
  CHECK(custom.character("A''", "sh") == Complex(-1, 0));
  CHECK_THROWS_AS(group_spec_from_json(R"({"preset": "Oh"})"), InputError);
  CHECK_THROWS_AS(group_spec_from_json(R"({
    "name": "bad", "elements": ["E", "s"], "classes": [["E"], ["s"]],
    "irreps": [{"label": "A", "dimension": 1, "characters": [1, 1]},
               {"label": "B", "dimension": 1, "characters": [1, 1]}]})"),
                  InputError);
}

TEST_CASE("term reports count words above the cutoff") {
  PauliSum a(2), b(2);
  a.add_term(PauliWord::parse("Z0", 2), 1.0);
  a.add_term(PauliWord::parse("X1", 2), 1e-10);
  b.add_term(PauliWord::parse("Z0", 2), 2.0);
  b.add_term(PauliWord::parse("Y1", 2), 1.0);
  const TermCountReport r = report_terms({{"A", a}, {"B", b}}, {{"A", "B"}});
  CHECK(row(r, "A") == 1);
  CHECK(row(r, "B") == 2);
  CHECK(row(r, "A u B") == 2);
  CHECK(r.find("A u B")->union_with == "B");
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["rows"].size() == 3);
  CHECK(r.to_text().find("# cutoff: 1e-09") != std::string::npos);
  CHECK_THROWS_AS(report_terms({{"A", a}}, {{"A", "C"}}), InputError);
}

TEST_CASE("fixture term counts reproduce the published table") {
  const TermCountReport h2 = fixture_term_report(load("h2"));
  CHECK(row(h2, "H") == 6);
  CHECK(row(h2, "N") == 3);
  CHECK(row(h2, "P_N") == 2);
  CHECK(row(h2, "H*P_N u P_N") == 6);
  CHECK(h2.metadata.at("qubits") == "2");

  const TermCountReport lih = fixture_term_report(load("lih"));
  CHECK(row(lih, "H") == 100);
  CHECK(row(lih, "N") == 7);
  CHECK(row(lih, "S2") == 40);
  CHECK(row(lih, "P_N") == 16);
  CHECK(row(lih, "H*P_N u P_N") == 100);
  CHECK(row(lih, "F2_N") == 16);
  CHECK(row(lih, "H*F2_N u F2_N") == 100);
  CHECK(row(lih, "P_S") == 40);
  CHECK(row(lih, "H*P_S u P_S") == 136);
  CHECK(row(lih, "H*P_LQ u P_LQ") == 100);

  const TermCountReport h2o = fixture_term_report(load("h2o"));
  CHECK(row(h2o, "H") == 165);
  CHECK(row(h2o, "N") == 9);
  CHECK(row(h2o, "S2") == 71);
  CHECK(row(h2o, "P_N") == 32);
  CHECK(row(h2o, "H*P_N u P_N") == 264);
  CHECK(row(h2o, "F2_N") == 31);
  CHECK(row(h2o, "H*F2_N u F2_N") == 320);
  CHECK(row(h2o, "P_S") == 160);
  CHECK(row(h2o, "H*P_S u P_S") == 864);
  CHECK(row(h2o, "H*P_LQ u P_LQ") == 219);
  CHECK(row(h2o, "P_B1") == 2);
  CHECK(row(h2o, "H*P_B1 u P_B1") == 242);
  CHECK(row(h2o, "H*P_B1*P_S2=2 u P_B1*P_S2=2") == 720);
  CHECK(h2o.metadata.at("reduction") == "3:+1,7:+1");
}

TEST_CASE("scan CSV layout") {
  ScanRow r;
  r.coordinate = 1.5;
  r.result.energy = -1.25;
  r.result.hamiltonian_energy = -1.0;
  r.result.converged = true;
  r.result.restart_index = 3;
  r.result.evaluations = 42;
  r.exact_energy = -1.5;
  const std::string csv = scan_to_csv({r});
  const auto newline = csv.find('\n');
  CHECK(csv.substr(0, newline) ==
        "coordinate,energy,hamiltonian_energy,exact_energy,error,converged,restart,evaluations");
  CHECK(csv.substr(newline + 1) ==
        "1.500000,-1.250000000000,-1.000000000000,-1.500000000000,2.500e-01,1,3,42\n");
}

TEST_CASE("manifest loading") {
  const Manifest m = load_manifest(std::string(SYMPROJ_FIXTURE_DIR) + "/lih/manifest.json");
  CHECK(m.molecule == "LiH");
  CHECK(m.grid().size() == 16);
  CHECK(m.point(3.2).file == "R3.20.fcidump");
  CHECK_THROWS_AS(m.point(3.21), InputError);
  CHECK_THROWS_AS(load_manifest("/nonexistent/manifest.json"), InputError);
  const MolecularSystem sys = MolecularSystem::load(std::string(SYMPROJ_FIXTURE_DIR) + "/lih/manifest.json");
  CHECK(sys.coordinate() == 3.2);
  CHECK(sys.n_qubits() == 4);
  CHECK(sys.entanglers().size() == 1);
}

}  // TEST_SUITE
