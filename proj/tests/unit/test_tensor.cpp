#include <doctest.h>

#include "kanrep/analysis.hpp"
#include "kanrep/bimodule.hpp"
#include "kanrep/kantor.hpp"
#include "kanrep/superalgebra.hpp"
#include "kanrep/tensor.hpp"

using namespace kanrep;

namespace {

const FieldContext q = FieldContext::rational();

std::vector<Scalar> sampled_alphas() { return {q.from_int(0), q.from_int(1), q.from_int(-1), q.from_int(2)}; }

LinearMap identity_map(std::size_t dim) {
  LinearMap e;
  for (std::size_t i = 0; i < dim; ++i) e.push_back(unit_vector(i));
  return e;
}

}  // namespace

TEST_CASE("graded generalized derivation on Grassmann algebras") {
  for (unsigned n = 2; n <= 4; ++n) {
    const DotBracketAlgebra g = grassmann_poisson(n, q);
    const LinearMap e = graded_generalized_derivation(n, q);
    for (Mask m = 0; m <= full_mask(n); ++m) {
      CHECK(e[m] == (popcount(m) == 1 ? SparseVector{} : unit_vector(m, Scalar(static_cast<int>(popcount(m)) - 1))));
    }
    CHECK(check_generalized_derivation(g, e).passed());
  }
  const DotBracketAlgebra g2 = grassmann_poisson(2, q);
  CHECK_FALSE(check_generalized_derivation(g2, identity_map(4)).passed());
  CHECK(check_generalized_derivation(g2, LinearMap(4)).passed());
}

TEST_CASE("tensor bracket on documented examples") {
  const FieldContext qa = FieldContext::rational(true);
  const TruncatedPolyAlgebra a{4, qa.alpha()};
  const DotBracketAlgebra t = jordan_bracket_tensor(grassmann_poisson(2, qa), graded_generalized_derivation(2, qa), a);
  const std::size_t e1 = 1, one = 0, one_t = 4;
  CHECK(t.bracket(e1, e1) == unit_vector(one, Scalar(-1)));
  CHECK(t.bracket(one, one_t) == unit_vector(one_t, qa.alpha()));
  CHECK(t.derivation(one_t) == unit_vector(one_t, -qa.alpha()));
  CHECK(t.derivation(one).empty());
  CHECK(check_kantor_conditions(t).passed());
}

TEST_CASE("alpha zero reduces the tensor bracket to the Grassmann bracket") {
  const DotBracketAlgebra g = grassmann_poisson(2, q);
  const DotBracketAlgebra t = jordan_bracket_tensor(g, graded_generalized_derivation(2, q), {3, Scalar(0)});
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = 0; k + l < 3; ++l) {
      for (std::size_t p = 0; p < 4; ++p) {
        for (std::size_t r = 0; r < 4; ++r) {
          SparseVector expected;
          for (const auto& [m, c] : g.bracket(p, r)) expected.emplace_back(m + 4 * (k + l), c);
          CHECK(t.bracket(p + 4 * k, r + 4 * l) == expected);
        }
      }
    }
  }
}

TEST_CASE("tensor bracket rejects non-Poisson inputs and bad derivations") {
  const DotBracketAlgebra g = grassmann_poisson(2, q);
  const DotBracketAlgebra t = jordan_bracket_tensor(g, graded_generalized_derivation(2, q), {2, Scalar(1)});
  CHECK_THROWS_AS(jordan_bracket_tensor(t, graded_generalized_derivation(2, q), {2, Scalar(1)}), std::invalid_argument);
  CHECK_THROWS_AS(jordan_bracket_tensor(g, identity_map(4), {2, Scalar(1)}), std::invalid_argument);
}

TEST_CASE("J(G_n[t]) is Jordan and contains Kan(n)") {
  for (const Scalar& alpha : sampled_alphas()) {
    const StructureTable j = build_J_GnT_alpha(2, alpha, 3, q);
    CHECK(j.dim() == 24);
    CHECK(check_supercommutative(j).passed());
    CHECK(check_jordan_superidentity(j).passed());
    const StructureTable k = build_kan(2, q);
    std::vector<std::size_t> basis{0, 1, 2, 3, 12, 13, 14, 15};
    const StructureTable sub = restrict_table(j, basis);
    for (std::size_t a = 0; a < 8; ++a) {
      for (std::size_t b = 0; b < 8; ++b) CHECK(sub.product(a, b) == k.product(a, b));
    }
  }
  CHECK(build_J_GnT_alpha(2, Scalar(1), 4, q).dim() == 32);
  CHECK_THROWS_AS(build_J_GnT_alpha(2, Scalar(1), 1, q), std::invalid_argument);
}

TEST_CASE("truncation at N agrees with N + 1 below degree N") {
  const unsigned n = 2, N = 3;
  const std::size_t d = std::size_t{1} << n;
  const StructureTable small = build_J_GnT_alpha(n, Scalar(2), N, q);
  const StructureTable large = build_J_GnT_alpha(n, Scalar(2), N + 1, q);
  auto lift = [&](std::size_t x) {
    const std::size_t half = d * N;
    return x < half ? x : x - half + d * (N + 1);
  };
  auto degree = [&](std::size_t x) { return (x % (d * N)) / d; };
  for (std::size_t x = 0; x < small.dim(); ++x) {
    for (std::size_t y = 0; y < small.dim(); ++y) {
      if (degree(x) + degree(y) >= N) continue;
      SparseVector expected;
      for (const auto& [k, c] : small.product(x, y)) expected.emplace_back(lift(k), c);
      canonicalize(expected);
      CHECK(large.product(lift(x), lift(y)) == expected);
    }
  }
}

TEST_CASE("embedding reproduces V(alpha) and J_alpha carries V(-alpha)") {
  for (unsigned n = 2; n <= 3; ++n) {
    for (const Scalar& alpha : sampled_alphas()) {
      const EmbeddingResult e = embed_V_alpha(n, alpha, q);
      CHECK(e.comparison.passed());
      CHECK(e.word_images_agree);
      CHECK(e.bar_images_agree);
      CHECK(e.tensor_alpha == -alpha);
      const ClassificationResult c = classify(e.w_action);
      CHECK(c.alpha == alpha);
      CHECK(c.v_parity == (n & 1U));
      const auto special = special_elements(e.w_action);
      REQUIRE(special.size() == 1);
      CHECK(special[0] == unit_vector(full_mask(n)));
    }
  }
}
