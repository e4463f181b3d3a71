#include "symproj/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "symproj/errors.hpp"

namespace symproj {

namespace {

std::uint64_t register_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void require_same_register(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": qubit counts differ (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Complex to_complex(Phase p) {
  switch (p) {
    case Phase::kOne: return {1.0, 0.0};
    case Phase::kI: return {0.0, 1.0};
    case Phase::kMinusOne: return {-1.0, 0.0};
    case Phase::kMinusI: return {0.0, -1.0};
  }
  return {1.0, 0.0};
}

Phase operator*(Phase a, Phase b) {
  return static_cast<Phase>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 3U);
}

PauliWord::PauliWord(std::size_t n_qubits) : PauliWord(n_qubits, 0, 0) {}

PauliWord::PauliWord(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask) {
  if (n_qubits > kMaxQubits) {
    throw DimensionError("PauliWord supports at most 64 qubits");
  }
  const auto outside = ~register_mask(n_qubits);
  if ((x_mask | z_mask) & outside) {
    throw DimensionError("PauliWord mask addresses a qubit outside the register");
  }
}

PauliWord PauliWord::single(std::size_t n_qubits, std::size_t qubit, char pauli) {
  if (qubit >= n_qubits) {
    throw DimensionError("qubit " + std::to_string(qubit) + " outside register of " +
                         std::to_string(n_qubits));
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (std::toupper(static_cast<unsigned char>(pauli))) {
    case 'I': return PauliWord(n_qubits);
    case 'X': return PauliWord(n_qubits, bit, 0);
    case 'Y': return PauliWord(n_qubits, bit, bit);
    case 'Z': return PauliWord(n_qubits, 0, bit);
    default: throw InputError(std::string("unknown Pauli letter '") + pauli + "'");
  }
}

PauliWord PauliWord::parse(std::string_view text, std::size_t n_qubits) {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  std::istringstream in{std::string(text)};
  std::string token;
  bool saw_identity = false;
  bool saw_factor = false;
  while (in >> token) {
    if (token == "I") {
      saw_identity = true;
      continue;
    }
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    if (token.size() < 2 || (letter != 'X' && letter != 'Y' && letter != 'Z')) {
      throw InputError("malformed Pauli factor '" + token + "' in \"" + std::string(text) + "\"");
    }
    std::size_t qubit = 0;
    try {
      std::size_t used = 0;
      qubit = std::stoul(token.substr(1), &used);
      if (used != token.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("malformed qubit index in '" + token + "'");
    }
    if (qubit >= n_qubits) {
      throw DimensionError("factor '" + token + "' outside register of " +
                           std::to_string(n_qubits) + " qubits");
    }
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    if ((x | z) & bit) {
      throw InputError("qubit " + std::to_string(qubit) + " appears twice in \"" +
                       std::string(text) + "\"");
    }
    if (letter != 'Z') x |= bit;
    if (letter != 'X') z |= bit;
    saw_factor = true;
  }
  if (!saw_factor && !saw_identity) {
    throw InputError("empty Pauli word text");
  }
  if (saw_factor && saw_identity) {
    throw InputError("identity marker mixed with factors in \"" + std::string(text) + "\"");
  }
  return PauliWord(n_qubits, x, z);
}

char PauliWord::at(std::size_t qubit) const {
  const bool xb = (x_ >> qubit) & 1U;
  const bool zb = (z_ >> qubit) & 1U;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::size_t PauliWord::weight() const { return static_cast<std::size_t>(std::popcount(x_ | z_)); }

bool PauliWord::commutes_with(const PauliWord& other) const {
  return ((std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_)) & 1) == 0;
}

std::string PauliWord::to_string() const {
  if (is_identity()) return "I";
  std::string out;
  for (std::size_t q = n_qubits_; q-- > 0;) {
    const char c = at(q);
    if (c == 'I') continue;
    if (!out.empty()) out += ' ';
    out += c;
    out += std::to_string(q);
  }
  return out;
}

std::pair<PauliWord, Phase> multiply(const PauliWord& a, const PauliWord& b) {
  require_same_register(a.n_qubits(), b.n_qubits(), "word multiply");
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  // W = i^{|x&z|} X^x Z^z, and Z^z1 X^x2 = (-1)^{|z1&x2|} X^x2 Z^z1.
  const int exponent = std::popcount(a.x_mask() & a.z_mask()) +
                       std::popcount(b.x_mask() & b.z_mask()) +
                       2 * std::popcount(a.z_mask() & b.x_mask()) - std::popcount(x & z);
  const auto phase = static_cast<Phase>(((exponent % 4) + 4) % 4);
  return {PauliWord(a.n_qubits(), x, z), phase};
}

PauliSum::PauliSum(const PauliWord& word, Complex coefficient) : n_qubits_(word.n_qubits()) {
  add_term(word, coefficient);
}

PauliSum PauliSum::identity(std::size_t n_qubits, Complex coefficient) {
  return PauliSum(PauliWord(n_qubits), coefficient);
}

Complex PauliSum::coefficient(const PauliWord& word) const {
  const auto it = terms_.find(word);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void PauliSum::add_term(const PauliWord& word, Complex coefficient) {
  require_same_register(n_qubits_, word.n_qubits(), "add_term");
  terms_[word] += coefficient;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  require_same_register(n_qubits_, other.n_qubits_, "sum add");
  for (const auto& [w, c] : other.terms_) terms_[w] += c;
  return prune();
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  require_same_register(n_qubits_, other.n_qubits_, "sum subtract");
  for (const auto& [w, c] : other.terms_) terms_[w] -= c;
  return prune();
}

PauliSum& PauliSum::operator*=(Complex scalar) {
  for (auto& [w, c] : terms_) c *= scalar;
  return prune();
}

PauliSum& PauliSum::prune(double threshold) {
  std::erase_if(terms_, [threshold](const auto& kv) { return std::abs(kv.second) <= threshold; });
  return *this;
}

PauliSum PauliSum::pruned(double threshold) const {
  PauliSum copy = *this;
  copy.prune(threshold);
  return copy;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_qubits_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, std::conj(c));
  return out;
}

bool PauliSum::is_hermitian(double tolerance) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tolerance](const auto& kv) { return std::abs(kv.second.imag()) <= tolerance; });
}

double PauliSum::one_norm() const {
  double total = 0.0;
  for (const auto& [w, c] : terms_) total += std::abs(c);
  return total;
}

std::vector<std::pair<PauliWord, Complex>> PauliSum::sorted_terms() const {
  std::vector<std::pair<PauliWord, Complex>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.weight() != b.first.weight()) return a.first.weight() < b.first.weight();
    return a.first < b.first;
  });
  return out;
}

std::uint64_t PauliSum::support() const {
  std::uint64_t s = 0;
  for (const auto& [w, c] : terms_) s |= w.support();
  return s;
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator-(PauliSum a) { return a *= -1.0; }
PauliSum operator*(PauliSum a, Complex scalar) { return a *= scalar; }
PauliSum operator*(Complex scalar, PauliSum a) { return a *= scalar; }

PauliSum multiply(const PauliSum& a, const PauliSum& b, double prune) {
  require_same_register(a.n_qubits(), b.n_qubits(), "sum multiply");
  PauliSum out(a.n_qubits());
  PauliSum::TermMap acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      auto [w, phase] = multiply(wa, wb);
      acc[w] += to_complex(phase) * ca * cb;
    }
  }
  for (const auto& [w, c] : acc) {
    if (std::abs(c) > prune) out.add_term(w, c);
  }
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b, double prune) {
  require_same_register(a.n_qubits(), b.n_qubits(), "commutator");
  PauliSum out(a.n_qubits());
  PauliSum::TermMap acc;
  // Only anticommuting word pairs survive: [wa, wb] = 2 wa wb.
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (wa.commutes_with(wb)) continue;
      auto [w, phase] = multiply(wa, wb);
      acc[w] += 2.0 * to_complex(phase) * ca * cb;
    }
  }
  for (const auto& [w, c] : acc) {
    if (std::abs(c) > prune) out.add_term(w, c);
  }
  return out;
}

PauliSum anticommutator(const PauliSum& a, const PauliSum& b, double prune) {
  require_same_register(a.n_qubits(), b.n_qubits(), "anticommutator");
  PauliSum out(a.n_qubits());
  PauliSum::TermMap acc;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (!wa.commutes_with(wb)) continue;
      auto [w, phase] = multiply(wa, wb);
      acc[w] += 2.0 * to_complex(phase) * ca * cb;
    }
  }
  for (const auto& [w, c] : acc) {
    if (std::abs(c) > prune) out.add_term(w, c);
  }
  return out;
}

std::size_t term_count(const PauliSum& a, double cutoff) {
  return static_cast<std::size_t>(std::count_if(
      a.terms().begin(), a.terms().end(),
      [cutoff](const auto& kv) { return std::abs(kv.second) > cutoff; }));
}

std::size_t unique_union_count(const PauliSum& a, const PauliSum& b, double cutoff) {
  require_same_register(a.n_qubits(), b.n_qubits(), "unique_union_count");
  std::size_t count = term_count(a, cutoff);
  for (const auto& [w, c] : b.terms()) {
    if (std::abs(c) <= cutoff) continue;
    if (std::abs(a.coefficient(w)) <= cutoff) ++count;
  }
  return count;
}

double max_coefficient_difference(const PauliSum& a, const PauliSum& b) {
  require_same_register(a.n_qubits(), b.n_qubits(), "coefficient difference");
  double worst = 0.0;
  for (const auto& [w, c] : a.terms()) worst = std::max(worst, std::abs(c - b.coefficient(w)));
  for (const auto& [w, c] : b.terms()) {
    if (!a.terms().contains(w)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

PauliSum power(const PauliSum& a, unsigned k, double prune) {
  PauliSum result = PauliSum::identity(a.n_qubits());
  PauliSum base = a;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base, prune);
    k >>= 1U;
    if (k > 0) base = multiply(base, base, prune);
  }
  return result;
}

std::string to_string(const PauliSum& a) {
  std::ostringstream out;
  out.precision(12);
  for (const auto& [w, c] : a.sorted_terms()) {
    out << "(" << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i) "
        << w.to_string() << "\n";
  }
  return out.str();
}

}  // namespace symproj
