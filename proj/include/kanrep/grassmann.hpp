#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kanrep/scalar.hpp"

namespace kanrep {

/// Subset of {1..n} as a bitmask: generator i is bit i-1.
using Mask = std::uint32_t;

constexpr unsigned kMaxGenerators = 16;

inline unsigned popcount(Mask m) noexcept { return static_cast<unsigned>(std::popcount(m)); }
inline Mask generator_bit(unsigned i) noexcept { return Mask{1} << (i - 1); }
inline Mask full_mask(unsigned n) noexcept { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
/// Bits strictly above generator bit position `bit`.
inline Mask bits_above(unsigned bit) noexcept { return bit >= 31 ? Mask{0} : ~((Mask{2} << bit) - 1); }
/// Bits strictly below generator bit position `bit`.
inline Mask bits_below(unsigned bit) noexcept { return (Mask{1} << bit) - 1; }

/// #{(a, b) : a in A, b in B, a > b}; the inversion count of the
/// concatenation (A ascending, B ascending).
unsigned cross_inversions(Mask a, Mask b) noexcept;

/// Sign of e_A e_B = sign * e_{A u B} (0 when A and B meet).
int wedge_sign(Mask a, Mask b) noexcept;

/// Normalizes an ordered list of distinct generators: returns the ascending
/// mask and the sign of the sorting permutation.  A repeated generator
/// yields sign 0.
std::pair<Mask, int> normalize_sequence(std::span<const unsigned> generators);

/// Generators of a mask in ascending order.
std::vector<unsigned> generators_of(Mask m);

/// "e[1,3,4]", "1" for the empty set.
std::string monomial_label(Mask m);
Mask parse_monomial_label(const std::string& label);

/// Signed Grassmann basis word e_I of G_n.
struct Monomial {
  Mask index_set = 0;
  unsigned n = 2;

  unsigned parity() const noexcept { return popcount(index_set) & 1U; }
  unsigned degree() const noexcept { return popcount(index_set); }
  std::string label() const { return monomial_label(index_set); }
};

/// Element of the Grassmann superalgebra G_n on n odd generators.
class GrassmannElement {
 public:
  explicit GrassmannElement(unsigned n);
  static GrassmannElement monomial(unsigned n, Mask m, const Scalar& coeff = Scalar(1));
  /// e_{i_1} e_{i_2} ... for the listed generators in the given order.
  static GrassmannElement word(unsigned n, std::span<const unsigned> generators, const Scalar& coeff = Scalar(1));

  unsigned n() const noexcept { return n_; }
  const std::map<Mask, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(Mask m) const;
  void add_term(Mask m, const Scalar& coeff);

  /// Parity when every term shares it; throws std::logic_error otherwise.
  unsigned parity() const;
  bool is_homogeneous() const;

  GrassmannElement& operator+=(const GrassmannElement& rhs);
  GrassmannElement operator*(const Scalar& c) const;
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

  std::string to_string() const;

 private:
  unsigned n_;
  std::map<Mask, Scalar> terms_;
};

/// Exterior product, bilinear extension of e_I e_J = wedge_sign(I, J) e_{I u J}.
GrassmannElement wedge(const GrassmannElement& f, const GrassmannElement& g);

/// Odd superderivation d/de_k (1 <= k <= n).
GrassmannElement partial(unsigned k, const GrassmannElement& f);

/// Grassmann Poisson superbracket {f, g} = (-1)^{|f|} sum_k (df/de_k)(dg/de_k),
/// extended bilinearly over the homogeneous components of f.
GrassmannElement poisson_bracket(const GrassmannElement& f, const GrassmannElement& g);

}  // namespace kanrep
