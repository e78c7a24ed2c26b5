#include <doctest.h>

#include <memory>

#include "kanrep/bimodule.hpp"
#include "kanrep/grassmann.hpp"
#include "kanrep/kantor.hpp"
#include "kanrep/superalgebra.hpp"

using namespace kanrep;

namespace {

std::shared_ptr<const StructureTable> kan_ptr(unsigned n, const FieldContext& f = FieldContext::rational()) {
  return std::make_shared<const StructureTable>(build_kan(n, f));
}

BimoduleAction valpha(unsigned n, const Scalar& alpha, unsigned parity,
                      const FieldContext& f = FieldContext::rational()) {
  return build_V_alpha({n, alpha, parity, f});
}

/// Replaces the sign (-1)^s of bar v(I) e_J (J inside I) by +1.
BimoduleAction drop_odd_bar_sign(BimoduleAction m, unsigned n) {
  const std::size_t half = std::size_t{1} << n;
  for (Mask i = 0; i < half; ++i) {
    for (Mask j = 0; j < half; ++j) {
      if ((j & ~i) != 0 || popcount(j) % 2 == 0) continue;
      m.right[j].rows[half + i] = scaled(m.right[j].rows[half + i], Scalar(-1));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("split null extension of the regular bimodule") {
  const BimoduleAction reg = regular_bimodule(kan_ptr(2));
  const StructureTable e = split_null_extension(reg);
  CHECK(e.dim() == 16);
  for (std::size_t i = 8; i < 16; ++i) {
    for (std::size_t j = 8; j < 16; ++j) CHECK(e.product(i, j).empty());
  }
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) CHECK(e.product(i, j) == reg.algebra->product(i, j));
  }
  CHECK(check_jordan_superidentity(e).passed());
}

TEST_CASE("regular bimodules are unital Jordan bimodules") {
  for (unsigned n = 2; n <= 3; ++n) {
    const BimoduleAction reg = regular_bimodule(kan_ptr(n));
    CHECK(reg.dim() == (std::size_t{2} << n));
    CHECK(reg.R(0) == SparseMatrix::identity(reg.dim()));
    CHECK(check_jordan_bimodule(reg).passed());
  }
}

TEST_CASE("V(alpha) actions on documented examples") {
  const FieldContext qa = FieldContext::rational(true);
  const BimoduleAction v = valpha(2, qa.alpha(), 0, qa);
  const std::size_t b1 = kan_bar_index(2, 0);
  CHECK(v.act(unit_vector(0), b1) == unit_vector(4));
  CHECK(v.act(unit_vector(4 + 0b01), kan_bar_index(2, 0b01)).empty());
  CHECK(v.act(unit_vector(4 + 0b11), kan_bar_index(2, 0b11)) == unit_vector(0, qa.alpha()));
  CHECK(v.act(unit_vector(4), b1) == unit_vector(0, qa.alpha()));
  for (std::size_t i = 0; i < v.dim(); ++i) CHECK(v.act(unit_vector(i), 0) == unit_vector(i));
}

TEST_CASE("V(alpha) is a Jordan bimodule, also with symbolic alpha") {
  const FieldContext q = FieldContext::rational();
  for (unsigned parity = 0; parity <= 1; ++parity) {
    for (const Scalar& a : {q.from_int(0), q.from_int(1), q.from_int(-1), q.from_fraction(1, 2)}) {
      CHECK(check_jordan_bimodule(valpha(2, a, parity)).passed());
    }
  }
  const FieldContext qa = FieldContext::rational(true);
  CHECK(check_jordan_bimodule(valpha(2, qa.alpha(), 0, qa)).passed());
  CHECK(check_jordan_bimodule(valpha(3, qa.alpha(), 1, qa)).passed());
  const FieldContext f3 = FieldContext::prime(3);
  CHECK(check_jordan_bimodule(valpha(2, f3.from_int(2), 0, f3)).passed());
}

TEST_CASE("dropping the odd sign on bar v(I) e_J breaks the Jordan identity") {
  const FieldContext qa = FieldContext::rational(true);
  for (unsigned n = 2; n <= 3; ++n) {
    const BimoduleAction bad = drop_odd_bar_sign(valpha(n, qa.alpha(), n & 1U, qa), n);
    CHECK_FALSE(check_jordan_bimodule(bad).passed());
  }
}

TEST_CASE("opposite is an involution that flips parities and keeps the Jordan property") {
  const BimoduleAction v = valpha(2, Scalar(2), 0);
  const BimoduleAction op = opposite(v);
  for (std::size_t i = 0; i < v.dim(); ++i) CHECK(op.vparity[i] == (v.vparity[i] ^ 1U));
  const BimoduleAction back = opposite(op);
  CHECK(back.vparity == v.vparity);
  CHECK(back.right == v.right);
  CHECK(check_jordan_bimodule(op).passed());
}

TEST_CASE("Peirce decomposition of unital and mixed bimodules") {
  auto k = kan_ptr(2);
  const PeirceDecomposition pv = peirce_decompose(valpha(2, Scalar(1), 0));
  CHECK(pv.one.basis.size() == 8);
  CHECK(pv.zero.basis.empty());
  CHECK(pv.half.basis.empty());
  const BimoduleAction reg = regular_bimodule(k);
  CHECK(peirce_decompose(reg).one.basis.size() == 8);
  const PeirceDecomposition mixed = peirce_decompose(direct_sum(reg, trivial_module(k, {0, 1, 1})));
  CHECK(mixed.one.basis.size() == 8);
  CHECK(mixed.zero.basis.size() == 3);
  CHECK(mixed.half.basis.empty());
  CHECK(check_jordan_bimodule(mixed.one.action).passed());
}

TEST_CASE("permuting the basis preserves the Jordan property") {
  const BimoduleAction v = valpha(2, Scalar(-1), 1);
  std::vector<std::size_t> order(v.dim());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  CHECK(check_jordan_bimodule(permute_basis(v, order)).passed());
}

TEST_CASE("V(alpha) rejects out-of-range parameters") {
  CHECK_THROWS_AS(valpha(1, Scalar(1), 0), std::invalid_argument);
  CHECK_THROWS_AS(valpha(2, Scalar(1), 2), std::invalid_argument);
  const FieldContext qa = FieldContext::rational(true);
  CHECK_THROWS_AS(valpha(2, qa.alpha(), 0), std::invalid_argument);
}
