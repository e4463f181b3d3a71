#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symproj/errors.hpp"
#include "symproj/io.hpp"

namespace symproj {

using nlohmann::json;

std::string operator_to_json(const PauliSum& op, int indent) {
  json terms = json::array();
  for (const auto& [w, c] : op.sorted_terms())
    terms.push_back({{"word", w.to_string()}, {"re", c.real()}, {"im", c.imag()}});
  return json{{"n_qubits", op.n_qubits()}, {"terms", terms}}.dump(indent);
}

PauliSum operator_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    const auto n = j.at("n_qubits").get<std::size_t>();
    PauliSum op(n);
    for (const auto& t : j.at("terms")) {
      const double re = t.value("re", 0.0);
      const double im = t.value("im", 0.0);
      op.add_term(PauliWord::parse(t.at("word").get<std::string>(), n), Complex(re, im));
    }
    return op;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad operator JSON: ") + e.what());
  }
}

PauliSum read_operator(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open operator file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return operator_from_json(buf.str());
}

void write_operator(const PauliSum& op, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write operator file '" + path + "'");
  f << operator_to_json(op) << "\n";
}

GroupSpec group_spec_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.contains("preset")) {
      const auto name = j.at("preset").get<std::string>();
      if (name == "C2v" || name == "c2v") return GroupSpec::c2v();
      if (name == "C3v" || name == "c3v") return GroupSpec::c3v();
      throw InputError("unknown group preset '" + name + "'");
    }
    GroupSpec g;
    g.name = j.value("name", "custom");
    g.elements = j.at("elements").get<std::vector<std::string>>();
    g.classes = j.at("classes").get<std::vector<std::vector<std::string>>>();
    for (const auto& irrep : j.at("irreps")) {
      g.irreps.push_back(irrep.at("label").get<std::string>());
      g.dimensions.push_back(irrep.at("dimension").get<int>());
      std::vector<Complex> row;
      for (const auto& c : irrep.at("characters")) {
        if (c.is_array()) row.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
        else row.emplace_back(c.get<double>(), 0.0);
      }
      g.characters.push_back(std::move(row));
    }
    g.validate();
    return g;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad group JSON: ") + e.what());
  }
}

}  // namespace symproj
