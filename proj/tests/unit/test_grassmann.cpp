#include <doctest.h>

#include <vector>

#include "kanrep/grassmann.hpp"
#include "kanrep/kantor.hpp"
#include "support.hpp"

using namespace kanrep;
using namespace kanrep::testing;

namespace {

GrassmannElement to_element(unsigned n, const NaiveElement& f) {
  GrassmannElement out(n);
  for (const auto& [w, c] : f) out.add_term(mask_of(w), c);
  return out;
}

}  // namespace

TEST_CASE("wedge signs match bubble sort on every pair of monomials") {
  for (unsigned n = 1; n <= 5; ++n) {
    for (Mask a = 0; a <= full_mask(n); ++a) {
      for (Mask b = 0; b <= full_mask(n); ++b) {
        Word w = word_of(a);
        const Word wb = word_of(b);
        w.insert(w.end(), wb.begin(), wb.end());
        const int swaps = bubble_sort(w);
        const int expected = swaps < 0 ? 0 : (swaps % 2 ? -1 : 1);
        CHECK(wedge_sign(a, b) == expected);
      }
    }
  }
}

TEST_CASE("ordered generator words normalize with the permutation sign") {
  const std::vector<unsigned> w21{2, 1};
  CHECK(normalize_sequence(w21) == std::pair<Mask, int>{0b11, -1});
  const std::vector<unsigned> w312{3, 1, 2};
  CHECK(normalize_sequence(w312) == std::pair<Mask, int>{0b111, 1});
  const std::vector<unsigned> w11{1, 1};
  CHECK(normalize_sequence(w11).second == 0);
  CHECK(GrassmannElement::word(2, w21) == GrassmannElement::monomial(2, 0b11, Scalar(-1)));
}

TEST_CASE("labels parse back to masks") {
  CHECK(monomial_label(0) == "1");
  CHECK(monomial_label(0b1101) == "e[1,3,4]");
  for (Mask m = 0; m < 64; ++m) CHECK(parse_monomial_label(monomial_label(m)) == m);
  CHECK_THROWS_AS(parse_monomial_label("e[2,1]"), std::invalid_argument);
}

TEST_CASE("derivatives and brackets on documented examples") {
  const GrassmannElement e1 = GrassmannElement::monomial(3, 0b001);
  const GrassmannElement e12 = GrassmannElement::monomial(3, 0b011);
  const GrassmannElement e23 = GrassmannElement::monomial(3, 0b110);
  CHECK(partial(2, e12) == GrassmannElement::monomial(3, 0b001, Scalar(-1)));
  CHECK(partial(1, e12) == GrassmannElement::monomial(3, 0b010));
  CHECK(poisson_bracket(e1, e1) == GrassmannElement::monomial(3, 0, Scalar(-1)));
  CHECK(poisson_bracket(e12, e23) == GrassmannElement::monomial(3, 0b101, Scalar(-1)));
  CHECK(poisson_bracket(GrassmannElement::monomial(3, 0), e12).is_zero());
}

TEST_CASE("wedge, derivatives and bracket agree with a list-based model") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (Mask a = 0; a <= full_mask(n); ++a) {
      const NaiveElement fa{{word_of(a), Scalar(1)}};
      for (unsigned k = 1; k <= n; ++k) {
        CHECK(partial(k, GrassmannElement::monomial(n, a)) == to_element(n, naive_partial(k, fa)));
      }
      for (Mask b = 0; b <= full_mask(n); ++b) {
        const NaiveElement fb{{word_of(b), Scalar(1)}};
        const auto ga = GrassmannElement::monomial(n, a);
        const auto gb = GrassmannElement::monomial(n, b);
        CHECK(wedge(ga, gb) == to_element(n, naive_wedge(fa, fb)));
        CHECK(poisson_bracket(ga, gb) == to_element(n, naive_bracket(word_of(a), word_of(b), n)));
      }
    }
  }
}

TEST_CASE("bracket is graded skew-symmetric and lowers degree by two") {
  const unsigned n = 4;
  for (Mask a = 0; a <= full_mask(n); ++a) {
    for (Mask b = 0; b <= full_mask(n); ++b) {
      const auto ga = GrassmannElement::monomial(n, a);
      const auto gb = GrassmannElement::monomial(n, b);
      const GrassmannElement ab = poisson_bracket(ga, gb);
      const GrassmannElement ba = poisson_bracket(gb, ga);
      const bool odd = (popcount(a) * popcount(b)) & 1U;
      CHECK(ab + ba * Scalar(odd ? -1 : 1) == GrassmannElement(n));
      for (const auto& [m, c] : ab.terms()) CHECK(popcount(m) + 2 == popcount(a) + popcount(b));
    }
  }
}

TEST_CASE("Grassmann dot-bracket algebra mirrors the element functions") {
  const unsigned n = 3;
  const DotBracketAlgebra g = grassmann_poisson(n, FieldContext::rational());
  CHECK(g.dim() == 8);
  CHECK(g.is_poisson());
  for (Mask a = 0; a <= full_mask(n); ++a) {
    for (Mask b = 0; b <= full_mask(n); ++b) {
      CHECK(g.bracket(a, b) == naive_to_vector(naive_bracket(word_of(a), word_of(b), n)));
      Word w = word_of(a);
      const Word wb = word_of(b);
      w.insert(w.end(), wb.begin(), wb.end());
      NaiveElement prod;
      naive_add(prod, w, Scalar(1));
      CHECK(g.dot().product(a, b) == naive_to_vector(prod));
    }
  }
}
