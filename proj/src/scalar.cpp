#include "kanrep/scalar.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kanrep {

namespace {

__extension__ using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

constexpr i128 kMax64 = static_cast<i128>(INT64_MAX);

Coeff make_rational(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Coeff{0, 1};
  const i128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (abs128(num) > kMax64 || den > kMax64) throw std::overflow_error("rational coefficient overflow");
  return Coeff{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

std::int64_t mod_reduce(i128 v, std::uint32_t p) {
  v %= static_cast<i128>(p);
  if (v < 0) v += p;
  return static_cast<std::int64_t>(v);
}

std::int64_t mod_inverse(std::int64_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = mod_reduce(a, p);
  if (new_r == 0) throw std::domain_error("division by zero");
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  return mod_reduce(t, p);
}

Coeff lift_coeff(Coeff c, std::uint32_t p) {
  if (p == 0) return c;
  const std::int64_t den = mod_reduce(c.den, p);
  if (den == 0) throw std::domain_error("fraction denominator vanishes in F_" + std::to_string(p));
  return Coeff{mod_reduce(static_cast<i128>(mod_reduce(c.num, p)) * mod_inverse(den, p), p), 1};
}

Coeff add(Coeff a, Coeff b, std::uint32_t p) {
  if (p != 0) return Coeff{mod_reduce(static_cast<i128>(a.num) + b.num, p), 1};
  if (a.den == 1 && b.den == 1) return make_rational(static_cast<i128>(a.num) + b.num, 1);
  return make_rational(static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den,
                       static_cast<i128>(a.den) * b.den);
}

Coeff neg(Coeff a, std::uint32_t p) {
  if (p != 0) return Coeff{a.num == 0 ? 0 : p - a.num, 1};
  return Coeff{-a.num, a.den};
}

Coeff mul(Coeff a, Coeff b, std::uint32_t p) {
  if (p != 0) return Coeff{mod_reduce(static_cast<i128>(a.num) * b.num, p), 1};
  return make_rational(static_cast<i128>(a.num) * b.num, static_cast<i128>(a.den) * b.den);
}

Coeff inv(Coeff a, std::uint32_t p) {
  if (a.num == 0) throw std::domain_error("division by zero");
  if (p != 0) return Coeff{mod_inverse(a.num, p), 1};
  return make_rational(a.den, a.num);
}

std::string coeff_text(Coeff c, std::uint32_t p) {
  if (p != 0) return std::to_string(c.num) + " mod " + std::to_string(p);
  if (c.den == 1) return std::to_string(c.num);
  return std::to_string(c.num) + "/" + std::to_string(c.den);
}

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim_view(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  return v;
}

Coeff parse_coeff(std::string_view s, std::uint32_t p) {
  s = trim_view(s);
  if (const auto pos = s.find(" mod "); pos != std::string_view::npos) {
    const auto q = parse_int(s.substr(pos + 5));
    if (p == 0 || q != static_cast<std::int64_t>(p)) {
      throw std::invalid_argument("coefficient '" + std::string(s) + "' does not belong to the field");
    }
    return Coeff{mod_reduce(parse_int(s.substr(0, pos)), p), 1};
  }
  Coeff c;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    c = make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  } else {
    c = Coeff{parse_int(s), 1};
  }
  return lift_coeff(c, p);
}

}  // namespace

Scalar::Scalar(std::int64_t value) {
  if (value != 0) coeffs_.push_back(Coeff{value, 1});
}

Scalar Scalar::integer(std::int64_t value, std::uint32_t modulus) {
  return fraction(value, 1, modulus);
}

Scalar Scalar::fraction(std::int64_t num, std::int64_t den, std::uint32_t modulus) {
  Scalar s;
  s.modulus_ = modulus;
  const Coeff c = lift_coeff(make_rational(num, den), modulus);
  if (c.num != 0) s.coeffs_.push_back(c);
  return s;
}

Scalar Scalar::parameter(std::uint32_t modulus) {
  Scalar s;
  s.modulus_ = modulus;
  s.coeffs_.push_back(Coeff{0, 1});
  s.coeffs_.push_back(lift_coeff(Coeff{1, 1}, modulus));
  return s;
}

Scalar Scalar::parse(std::string_view text, std::uint32_t modulus) {
  Scalar result = integer(0, modulus);
  text = trim_view(text);
  if (text.empty()) throw std::invalid_argument("empty scalar");
  std::vector<std::string> terms(1);
  char prev = 0;
  for (const char ch : text) {
    const bool splits_minus = ch == '-' && prev != 0 && std::string_view("+-*/^").find(prev) == std::string_view::npos;
    if (ch == '+' || splits_minus) {
      terms.emplace_back(splits_minus ? "-" : "");
    } else {
      terms.back().push_back(ch);
    }
    if (ch != ' ' && ch != '\t') prev = ch;
  }
  for (std::string& raw : terms) {
    std::string term(trim_view(raw));
    if (term.size() > 1 && term[0] == '-') term = "-" + std::string(trim_view(std::string_view(term).substr(1)));
    if (term.empty() || term == "-") throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    std::size_t power = 0;
    std::string_view coeff_part = term;
    if (const auto al = term.find("al"); al != std::string::npos) {
      auto tail = std::string_view(term).substr(al + 2);
      power = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') throw std::invalid_argument("malformed scalar term '" + term + "'");
        power = static_cast<std::size_t>(parse_int(tail.substr(1)));
      }
      coeff_part = std::string_view(term).substr(0, al);
      coeff_part = trim_view(coeff_part);
      if (!coeff_part.empty() && coeff_part.back() == '*') coeff_part = trim_view(coeff_part.substr(0, coeff_part.size() - 1));
      if (coeff_part.empty()) coeff_part = "1";
      if (coeff_part == "-") coeff_part = "-1";
    }
    Scalar t;
    t.modulus_ = modulus;
    t.coeffs_.assign(power + 1, Coeff{0, 1});
    t.coeffs_[power] = parse_coeff(coeff_part, modulus);
    t.trim();
    result += t;
  }
  return result;
}

bool Scalar::is_one() const noexcept {
  return coeffs_.size() == 1 && coeffs_[0].num == 1 && coeffs_[0].den == 1;
}

Coeff Scalar::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Coeff{0, 1};
}

Scalar Scalar::coefficient_scalar(std::size_t power) const {
  Scalar s;
  s.modulus_ = modulus_;
  if (power < coeffs_.size() && coeffs_[power].num != 0) s.coeffs_.push_back(coeffs_[power]);
  return s;
}

Scalar Scalar::lifted(const Scalar& s, std::uint32_t modulus) {
  if (s.modulus_ == modulus) return s;
  if (s.modulus_ != 0) throw std::invalid_argument("scalar belongs to a different prime field");
  Scalar r = s;
  for (auto& c : r.coeffs_) c = lift_coeff(c, modulus);
  r.modulus_ = modulus;
  r.trim();
  return r;
}

void Scalar::trim() {
  while (!coeffs_.empty() && coeffs_.back().num == 0) coeffs_.pop_back();
}

void Scalar::adopt_modulus(const Scalar& other) {
  if (modulus_ == other.modulus_ || other.modulus_ == 0) return;
  if (modulus_ != 0) {
    throw std::invalid_argument("mixing scalars of F_" + std::to_string(modulus_) + " and F_" +
                                std::to_string(other.modulus_));
  }
  for (auto& c : coeffs_) c = lift_coeff(c, other.modulus_);
  modulus_ = other.modulus_;
  trim();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = neg(c, modulus_);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  adopt_modulus(rhs);
  if (rhs.modulus_ != modulus_) return *this += lifted(rhs, modulus_);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff{0, 1});
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = add(coeffs_[i], rhs.coeffs_[i], modulus_);
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  adopt_modulus(rhs);
  if (rhs.modulus_ != modulus_) return *this *= lifted(rhs, modulus_);
  if (coeffs_.empty()) return *this;
  if (rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  if (coeffs_.size() == 1 && rhs.coeffs_.size() == 1) {
    coeffs_[0] = mul(coeffs_[0], rhs.coeffs_[0], modulus_);
    trim();
    return *this;
  }
  boost::container::small_vector<Coeff, 1> out(coeffs_.size() + rhs.coeffs_.size() - 1, Coeff{0, 1});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].num == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = add(out[i + j], mul(coeffs_[i], rhs.coeffs_[j], modulus_), modulus_);
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Scalar Scalar::inverse() const {
  if (coeffs_.empty()) throw std::domain_error("division by zero");
  if (coeffs_.size() > 1) throw std::domain_error("cannot invert a non-constant polynomial in al");
  Scalar r;
  r.modulus_ = modulus_;
  r.coeffs_.push_back(inv(coeffs_[0], modulus_));
  return r;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  adopt_modulus(rhs);
  if (rhs.modulus_ != modulus_) return *this /= lifted(rhs, modulus_);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.coeffs_ == b.coeffs_;
  if (a.modulus_ != 0 && b.modulus_ != 0) return false;
  if (a.modulus_ == 0) return Scalar::lifted(a, b.modulus_) == b;
  return a == Scalar::lifted(b, a.modulus_);
}

Scalar Scalar::evaluate(const Scalar& value) const {
  Scalar result = integer(0, modulus_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    result *= value;
    Scalar c;
    c.modulus_ = modulus_;
    if (coeffs_[i].num != 0) c.coeffs_.push_back(coeffs_[i]);
    result += c;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (coeffs_.empty()) return coeff_text(Coeff{0, 1}, modulus_);
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].num == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeff_text(coeffs_[i], modulus_);
    if (i == 1) out += "*al";
    if (i > 1) out += "*al^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldContext::FieldContext(FieldKind kind, std::uint32_t p, bool symbolic)
    : kind_(kind), modulus_(kind == FieldKind::prime ? p : 0), symbolic_(symbolic) {
  if (kind == FieldKind::prime) {
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p >= (1U << 31)) throw std::invalid_argument("prime modulus must be below 2^31");
  }
}

FieldContext FieldContext::parse(std::string_view text) {
  text = trim_view(text);
  bool symbolic = false;
  if (text.size() >= 4 && text.substr(text.size() - 4) == "[al]") {
    symbolic = true;
    text = text.substr(0, text.size() - 4);
  }
  if (text == "q" || text == "Q" || text == "rational" || text == "rationals") return rational(symbolic);
  if (!text.empty() && (text.front() == 'p' || text.front() == 'F' || text.front() == 'f')) {
    text.remove_prefix(1);
    if (!text.empty() && text.front() == '_') text.remove_prefix(1);
  }
  const auto p = parse_int(text);
  if (p <= 0 || p > UINT32_MAX) throw std::invalid_argument("bad field '" + std::string(text) + "'");
  return prime(static_cast<std::uint32_t>(p), symbolic);
}

Scalar FieldContext::alpha() const {
  if (!symbolic_) throw std::logic_error("field context has no formal parameter");
  return Scalar::parameter(modulus_);
}

Scalar FieldContext::parse_scalar(std::string_view text) const {
  Scalar s = Scalar::parse(text, modulus_);
  if (!symbolic_ && !s.is_constant()) throw std::invalid_argument("symbolic scalar in a non-symbolic field");
  return s;
}

Scalar FieldContext::coerce(const Scalar& s) const {
  return Scalar::lifted(s, modulus_);
}

std::string FieldContext::name() const {
  std::string base = kind_ == FieldKind::rational ? "Q" : "F_" + std::to_string(modulus_);
  return symbolic_ ? base + "[al]" : base;
}

}  // namespace kanrep
