#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace kanrep {

/// One coefficient of a scalar polynomial.  Over the rationals this is a
/// reduced fraction with positive denominator; over F_p `num` is the residue
/// in [0, p) and `den` is always 1.
struct Coeff {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Coeff&, const Coeff&) = default;
};

/// Exact scalar: a polynomial in the formal parameter `al` with coefficients
/// in Q (modulus 0) or F_p (modulus p).  Constants are degree-0 polynomials,
/// zero is the empty polynomial.
///
/// Integers and fractions built with modulus 0 are lifted into F_p when they
/// meet a prime-field operand, so literals such as `Scalar(2)` mix freely.
/// Two different primes never mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value);  // NOLINT(google-explicit-constructor)

  static Scalar integer(std::int64_t value, std::uint32_t modulus);
  static Scalar fraction(std::int64_t num, std::int64_t den, std::uint32_t modulus);
  /// The formal parameter al.
  static Scalar parameter(std::uint32_t modulus);
  /// Parses the canonical text form ("a/b", "k mod p", "c0 + c1*al + ...").
  static Scalar parse(std::string_view text, std::uint32_t modulus);

  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept;
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// Degree in al; -1 for zero.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff coefficient(std::size_t power) const;
  /// Coefficient of al^power as a constant scalar.
  Scalar coefficient_scalar(std::size_t power) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Division by a nonzero constant; throws std::domain_error otherwise.
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Substitutes a value for al.
  Scalar evaluate(const Scalar& value) const;

  /// The image of a modulus-0 scalar in F_modulus (identity when moduli agree).
  static Scalar lifted(const Scalar& s, std::uint32_t modulus);

  std::string to_string() const;

 private:
  void trim();
  void adopt_modulus(const Scalar& other);

  std::uint32_t modulus_ = 0;
  boost::container::small_vector<Coeff, 1> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// (-1)^k as a scalar.
inline Scalar sign_scalar(unsigned k) { return (k & 1U) ? Scalar(-1) : Scalar(1); }

enum class FieldKind { rational, prime };

/// Coefficient field of a computation: Q or F_p (p odd prime), optionally
/// extended by the formal parameter al as a polynomial ring.
class FieldContext {
 public:
  /// Rationals without the formal parameter.
  FieldContext() = default;
  /// Throws std::invalid_argument when p = 2 or p is not prime.
  FieldContext(FieldKind kind, std::uint32_t p, bool symbolic);

  static FieldContext rational(bool symbolic = false) { return {FieldKind::rational, 0, symbolic}; }
  static FieldContext prime(std::uint32_t p, bool symbolic = false) { return {FieldKind::prime, p, symbolic}; }
  /// "q", "Q", "rational", "5", "p5", "F5", optionally suffixed with "[al]".
  static FieldContext parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return modulus_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool symbolic() const noexcept { return symbolic_; }

  Scalar zero() const { return Scalar::integer(0, modulus_); }
  Scalar one() const { return Scalar::integer(1, modulus_); }
  Scalar from_int(std::int64_t v) const { return Scalar::integer(v, modulus_); }
  Scalar from_fraction(std::int64_t num, std::int64_t den) const {
    return Scalar::fraction(num, den, modulus_);
  }
  /// The formal parameter; throws std::logic_error for non-symbolic contexts.
  Scalar alpha() const;
  Scalar parse_scalar(std::string_view text) const;
  /// Brings a scalar into this field (lifting integers/fractions into F_p).
  Scalar coerce(const Scalar& s) const;

  std::string name() const;

  friend bool operator==(const FieldContext&, const FieldContext&) = default;

 private:
  FieldKind kind_ = FieldKind::rational;
  std::uint32_t modulus_ = 0;
  bool symbolic_ = false;
};

bool is_prime(std::uint64_t p) noexcept;

}  // namespace kanrep
