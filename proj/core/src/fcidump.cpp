#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "symproj/errors.hpp"
#include "symproj/io.hpp"

namespace symproj {

namespace {

using Key4 = std::array<std::size_t, 4>;

Key4 canonical(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  if (i < j) std::swap(i, j);
  if (k < l) std::swap(k, l);
  if (std::make_pair(i, j) < std::make_pair(k, l)) {
    std::swap(i, k);
    std::swap(j, l);
  }
  return {i, j, k, l};
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
  throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

struct Header {
  long norb = -1;
  long nelec = 0;
  long ms2 = 0;
  std::vector<int> orbsym;
};

// Namelist body such as "NORB=4,NELEC=4,MS2=0,ORBSYM=1,1,2,ISYM=1,".
Header parse_header(const std::string& body, const std::string& source, std::size_t line) {
  std::string text = body;
  std::replace(text.begin(), text.end(), ',', ' ');
  std::string spaced;
  for (char c : text) {
    if (c == '=') spaced += " = ";
    else spaced += c;
  }
  std::istringstream in(spaced);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);

  Header h;
  std::string key;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i + 1 < tokens.size() && tokens[i + 1] == "=") {
      key = upper(tokens[i]);
      ++i;
      continue;
    }
    const std::string& v = tokens[i];
    try {
      if (key == "NORB") h.norb = std::stol(v);
      else if (key == "NELEC") h.nelec = std::stol(v);
      else if (key == "MS2") h.ms2 = std::stol(v);
      else if (key == "ORBSYM") h.orbsym.push_back(std::stoi(v));
    } catch (const std::exception&) {
      fail(source, line, "bad value '" + v + "' for " + key);
    }
  }
  if (h.norb <= 0) fail(source, line, "header lacks a positive NORB");
  if (!h.orbsym.empty() && h.orbsym.size() != static_cast<std::size_t>(h.norb))
    fail(source, line, "ORBSYM has " + std::to_string(h.orbsym.size()) + " entries for NORB=" +
                           std::to_string(h.norb));
  return h;
}

}  // namespace

MolecularIntegrals parse_fcidump_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::string header_text;
  bool in_header = false, header_done = false;
  std::size_t header_line = 0;

  std::map<Key4, double> two;
  std::map<std::pair<std::size_t, std::size_t>, double> one;
  double core = 0.0;
  Header h;

  while (std::getline(in, line)) {
    ++lineno;
    if (!header_done) {
      std::string u = upper(line);
      if (!in_header) {
        auto pos = u.find("&FCI");
        if (pos == std::string::npos) {
          if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
          fail(source, lineno, "expected &FCI header");
        }
        in_header = true;
        header_line = lineno;
        u = u.substr(pos + 4);
      }
      auto end = u.find("&END");
      if (end == std::string::npos) end = u.find('/');
      header_text += " " + u.substr(0, end);
      if (end != std::string::npos) {
        header_done = true;
        h = parse_header(header_text, source, header_line);
      }
      continue;
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream rec(line);
    double value;
    long idx[4];
    if (!(rec >> value >> idx[0] >> idx[1] >> idx[2] >> idx[3]))
      fail(source, lineno, "malformed record '" + line + "'");
    std::string extra;
    if (rec >> extra) fail(source, lineno, "trailing data '" + extra + "'");
    for (long v : idx)
      if (v < 0 || v > h.norb) fail(source, lineno, "index " + std::to_string(v) + " out of range");
    const auto i = static_cast<std::size_t>(idx[0]), j = static_cast<std::size_t>(idx[1]),
               k = static_cast<std::size_t>(idx[2]), l = static_cast<std::size_t>(idx[3]);
    if (i && j && k && l) {
      two[canonical(i - 1, j - 1, k - 1, l - 1)] += value;
    } else if (i && j && !k && !l) {
      one[{std::max(i, j) - 1, std::min(i, j) - 1}] += value;
    } else if (!i && !j && !k && !l) {
      core += value;
    } else if (i && !j && !k && !l) {
      continue;
    } else {
      fail(source, lineno, "unsupported index pattern");
    }
  }
  if (!header_done) fail(source, lineno, "missing &END of header");

  MolecularIntegrals ints(static_cast<std::size_t>(h.norb));
  ints.core_energy = core;
  ints.n_electrons = static_cast<int>(h.nelec);
  ints.ms2 = static_cast<int>(h.ms2);
  ints.orbital_irreps = h.orbsym;
  for (const auto& [pq, v] : one) {
    ints.one_body(pq.first, pq.second) = v;
    ints.one_body(pq.second, pq.first) = v;
  }
  for (const auto& [key, v] : two) {
    const auto [i, j, k, l] = key;
    // (ij|kl) in chemists' notation is <ik|jl>.
    const Key4 images[] = {{i, j, k, l}, {j, i, k, l}, {i, j, l, k}, {j, i, l, k},
                           {k, l, i, j}, {l, k, i, j}, {k, l, j, i}, {l, k, j, i}};
    for (const auto& m : images) ints.two_body(m[0], m[2], m[1], m[3]) = v;
  }
  ints.validate();
  return ints;
}

MolecularIntegrals parse_fcidump(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open FCIDUMP '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_fcidump_text(buf.str(), path);
}

std::string format_fcidump(const MolecularIntegrals& ints, double tol) {
  const std::size_t n = ints.n_orbitals();
  std::ostringstream out;
  out << " &FCI NORB=" << n << ",NELEC=" << ints.n_electrons << ",MS2=" << ints.ms2 << ",\n";
  out << "  ORBSYM=";
  for (std::size_t p = 0; p < n; ++p)
    out << (ints.orbital_irreps.empty() ? 1 : ints.orbital_irreps[p]) << ",";
  out << "\n  ISYM=1,\n &END\n";
  char buf[96];
  auto record = [&](double v, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    std::snprintf(buf, sizeof buf, "%24.16e %4zu %4zu %4zu %4zu\n", v, i, j, k, l);
    out << buf;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k <= i; ++k)
        for (std::size_t l = 0; l <= k; ++l) {
          if (canonical(i, j, k, l) != Key4{i, j, k, l}) continue;
          const double v = ints.two_body(i, k, j, l);
          if (std::abs(v) > tol && v != 0.0) record(v, i + 1, j + 1, k + 1, l + 1);
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = ints.one_body(i, j);
      if (std::abs(v) > tol && v != 0.0) record(v, i + 1, j + 1, 0, 0);
    }
  record(ints.core_energy, 0, 0, 0, 0);
  return out.str();
}

void write_fcidump(const MolecularIntegrals& ints, const std::string& path, double tol) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write FCIDUMP '" + path + "'");
  f << format_fcidump(ints, tol);
}

}  // namespace symproj
