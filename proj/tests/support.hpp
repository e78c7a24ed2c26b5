#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "kanrep/kantor.hpp"
#include "kanrep/linear.hpp"
#include "kanrep/table.hpp"

namespace kanrep::testing {

/// Grassmann monomials as generator lists, signs by explicit bubble sort.
using Word = std::vector<unsigned>;
using NaiveElement = std::map<Word, Scalar>;

/// Sorts a word in place and returns the number of swaps, or -1 when a
/// generator repeats.
inline int bubble_sort(Word& w) {
  int swaps = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        ++swaps;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) return -1;
  }
  return swaps;
}

inline void naive_add(NaiveElement& acc, Word w, const Scalar& c) {
  const int swaps = bubble_sort(w);
  if (swaps < 0) return;
  Scalar& slot = acc[w];
  slot += (swaps % 2 ? -c : c);
  if (slot.is_zero()) acc.erase(w);
}

inline NaiveElement naive_wedge(const NaiveElement& f, const NaiveElement& g) {
  NaiveElement out;
  for (const auto& [a, x] : f) {
    for (const auto& [b, y] : g) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      naive_add(out, w, x * y);
    }
  }
  return out;
}

/// Left derivative d/de_k: move e_k to the front, then drop it.
inline NaiveElement naive_partial(unsigned k, const NaiveElement& f) {
  NaiveElement out;
  for (const auto& [w, c] : f) {
    const auto it = std::find(w.begin(), w.end(), k);
    if (it == w.end()) continue;
    const auto pos = static_cast<std::size_t>(it - w.begin());
    Word rest = w;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
    naive_add(out, rest, pos % 2 ? -c : c);
  }
  return out;
}

/// {f, g} = (-1)^{|f|} sum_k (df/de_k)(dg/de_k) for a monomial f.
inline NaiveElement naive_bracket(const Word& f, const Word& g, unsigned n) {
  NaiveElement fe{{f, Scalar(1)}}, ge{{g, Scalar(1)}}, out;
  for (unsigned k = 1; k <= n; ++k) {
    for (const auto& [w, c] : naive_wedge(naive_partial(k, fe), naive_partial(k, ge))) {
      naive_add(out, w, f.size() % 2 ? -c : c);
    }
  }
  return out;
}

inline Word word_of(std::uint32_t mask) {
  Word w;
  for (unsigned i = 0; i < 32; ++i) {
    if (mask >> i & 1U) w.push_back(i + 1);
  }
  return w;
}

inline std::uint32_t mask_of(const Word& w) {
  std::uint32_t m = 0;
  for (unsigned g : w) m |= 1U << (g - 1);
  return m;
}

inline SparseVector naive_to_vector(const NaiveElement& f) {
  SparseVector v;
  for (const auto& [w, c] : f) v.emplace_back(mask_of(w), c);
  canonicalize(v);
  return v;
}

/// Random homogeneous element of the given parity with small integer
/// coefficients.
inline SparseVector random_homogeneous(const StructureTable& t, unsigned parity, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  SparseVector v;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (t.parity(i) != parity) continue;
    const int c = coeff(rng);
    if (c != 0) v.emplace_back(i, t.field().from_int(c));
  }
  return v;
}

/// Both sides of the graded Jordan identity on arbitrary homogeneous
/// elements, evaluated with plain products.
inline SparseVector jordan_residual(const StructureTable& t, const SparseVector& x, unsigned px,
                                    const SparseVector& y, unsigned py, const SparseVector& z, unsigned pz,
                                    const SparseVector& w, unsigned pw) {
  auto m = [&](const SparseVector& a, const SparseVector& b) { return t.multiply(a, b); };
  auto sign = [](unsigned k) { return (k & 1U) ? Scalar(-1) : Scalar(1); };
  SparseVector lhs = m(m(m(x, y), z), w);
  add_scaled(lhs, m(m(m(x, w), z), y), sign(py * pz + py * pw + pz * pw));
  add_scaled(lhs, m(m(m(y, w), z), x), sign(px * py + px * pz + px * pw + pz * pw));
  SparseVector rhs = m(m(x, y), m(z, w));
  add_scaled(rhs, m(m(x, z), m(y, w)), sign(py * pz));
  add_scaled(rhs, m(m(x, w), m(y, z)), sign(pw * (py + pz)));
  return lhs - rhs;
}

struct BracketMutation {
  std::size_t i = 0;
  std::size_t j = 0;
  SparseVector before;
  SparseVector after;
};

/// Changes {e_i, e_j} (and its mirror) by a random parity-compatible term;
/// entries forced to vanish by super-skew-symmetry are never picked.
inline BracketMutation mutate_bracket(DotBracketAlgebra& algebra, std::mt19937& rng) {
  const std::size_t dim = algebra.dim();
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  std::uniform_int_distribution<int> coeff(1, 2);
  const StructureTable& dot = algebra.dot();
  BracketMutation m;
  do {
    m.i = pick(rng);
    m.j = pick(rng);
  } while (m.i == m.j && dot.parity(m.i) == 0);
  const unsigned parity = dot.parity(m.i) ^ dot.parity(m.j);
  std::size_t k = pick(rng);
  while (dot.parity(k) != parity) k = pick(rng);
  m.before = algebra.bracket(m.i, m.j);
  m.after = m.before;
  add_scaled(m.after, unit_vector(k), dot.field().from_int((rng() & 1U) ? coeff(rng) : -coeff(rng)));
  algebra.set_bracket_pair(m.i, m.j, m.after);
  return m;
}

}  // namespace kanrep::testing
