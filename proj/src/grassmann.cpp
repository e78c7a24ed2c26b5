#include "kanrep/grassmann.hpp"

#include <sstream>
#include <stdexcept>

namespace kanrep {

unsigned cross_inversions(Mask a, Mask b) noexcept {
  unsigned count = 0;
  while (b != 0) {
    const auto bit = static_cast<unsigned>(std::countr_zero(b));
    count += popcount(a & bits_above(bit));
    b &= b - 1;
  }
  return count;
}

int wedge_sign(Mask a, Mask b) noexcept {
  if ((a & b) != 0) return 0;
  return (cross_inversions(a, b) & 1U) ? -1 : 1;
}

std::pair<Mask, int> normalize_sequence(std::span<const unsigned> generators) {
  Mask seen = 0;
  unsigned inversions = 0;
  for (const unsigned g : generators) {
    if (g == 0 || g > kMaxGenerators) throw std::out_of_range("generator index out of range");
    const Mask bit = generator_bit(g);
    if (seen & bit) return {0, 0};
    inversions += popcount(seen & bits_above(g - 1));
    seen |= bit;
  }
  return {seen, (inversions & 1U) ? -1 : 1};
}

std::vector<unsigned> generators_of(Mask m) {
  std::vector<unsigned> out;
  while (m != 0) {
    out.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
    m &= m - 1;
  }
  return out;
}

std::string monomial_label(Mask m) {
  if (m == 0) return "1";
  std::ostringstream os;
  os << "e[";
  bool first = true;
  for (const unsigned g : generators_of(m)) {
    if (!first) os << ',';
    os << g;
    first = false;
  }
  os << ']';
  return os.str();
}

Mask parse_monomial_label(const std::string& label) {
  if (label == "1" || label == "e[]") return 0;
  if (label.size() < 3 || label.rfind("e[", 0) != 0 || label.back() != ']') {
    throw std::invalid_argument("malformed monomial '" + label + "'");
  }
  Mask m = 0;
  unsigned last = 0;
  std::istringstream in(label.substr(2, label.size() - 3));
  std::string item;
  while (std::getline(in, item, ',')) {
    const unsigned g = static_cast<unsigned>(std::stoul(item));
    if (g == 0 || g > kMaxGenerators || g <= last) throw std::invalid_argument("malformed monomial '" + label + "'");
    m |= generator_bit(g);
    last = g;
  }
  return m;
}

GrassmannElement::GrassmannElement(unsigned n) : n_(n) {
  if (n < 1 || n > kMaxGenerators) throw std::invalid_argument("generator count out of range");
}

GrassmannElement GrassmannElement::monomial(unsigned n, Mask m, const Scalar& coeff) {
  GrassmannElement e(n);
  if ((m & ~full_mask(n)) != 0) throw std::out_of_range("monomial outside G_n");
  e.add_term(m, coeff);
  return e;
}

GrassmannElement GrassmannElement::word(unsigned n, std::span<const unsigned> generators, const Scalar& coeff) {
  const auto [m, sign] = normalize_sequence(generators);
  if (sign == 0) return GrassmannElement(n);
  return monomial(n, m, coeff * Scalar(sign));
}

Scalar GrassmannElement::coefficient(Mask m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void GrassmannElement::add_term(Mask m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool GrassmannElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned p = popcount(terms_.begin()->first) & 1U;
  for (const auto& [m, c] : terms_) {
    if ((popcount(m) & 1U) != p) return false;
  }
  return true;
}

unsigned GrassmannElement::parity() const {
  if (!is_homogeneous()) throw std::logic_error("element is not homogeneous");
  return terms_.empty() ? 0 : popcount(terms_.begin()->first) & 1U;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("generator count mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

GrassmannElement GrassmannElement::operator*(const Scalar& c) const {
  GrassmannElement out(n_);
  for (const auto& [m, x] : terms_) out.add_term(m, x * c);
  return out;
}

std::string GrassmannElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << '(' << c << ")*" << monomial_label(m);
    first = false;
  }
  return os.str();
}

GrassmannElement wedge(const GrassmannElement& f, const GrassmannElement& g) {
  if (f.n() != g.n()) throw std::invalid_argument("generator count mismatch");
  GrassmannElement out(f.n());
  for (const auto& [a, x] : f.terms()) {
    for (const auto& [b, y] : g.terms()) {
      const int s = wedge_sign(a, b);
      if (s != 0) out.add_term(a | b, x * y * Scalar(s));
    }
  }
  return out;
}

GrassmannElement partial(unsigned k, const GrassmannElement& f) {
  if (k < 1 || k > f.n()) throw std::out_of_range("derivation index out of range");
  GrassmannElement out(f.n());
  const Mask bit = generator_bit(k);
  for (const auto& [m, c] : f.terms()) {
    if (!(m & bit)) continue;
    const unsigned before = popcount(m & bits_below(k - 1));
    out.add_term(m & ~bit, (before & 1U) ? -c : c);
  }
  return out;
}

GrassmannElement poisson_bracket(const GrassmannElement& f, const GrassmannElement& g) {
  if (f.n() != g.n()) throw std::invalid_argument("generator count mismatch");
  GrassmannElement out(f.n());
  for (const auto& [m, c] : f.terms()) {
    const GrassmannElement term = GrassmannElement::monomial(f.n(), m, c);
    const Scalar sign = sign_scalar(popcount(m));
    for (unsigned k = 1; k <= f.n(); ++k) {
      out += wedge(partial(k, term), partial(k, g)) * sign;
    }
  }
  return out;
}

}  // namespace kanrep
