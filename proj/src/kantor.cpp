#include "kanrep/kantor.hpp"

#include <stdexcept>

#include "kanrep/grassmann.hpp"
#include "kanrep/parallel.hpp"

namespace kanrep {

DotBracketAlgebra::DotBracketAlgebra(StructureTable dot) : dot_(std::move(dot)) {
  bracket_.resize(dim() * dim());
}

void DotBracketAlgebra::set_bracket(std::size_t i, std::size_t j, SparseVector value) {
  if (i >= dim() || j >= dim()) throw std::out_of_range("bracket index out of range");
  canonicalize(value);
  for (auto& [k, c] : value) {
    if (k >= dim()) throw std::out_of_range("bracket term index out of range");
    c = field().coerce(c);
  }
  bracket_[i * dim() + j] = std::move(value);
}

void DotBracketAlgebra::set_bracket_pair(std::size_t i, std::size_t j, const SparseVector& value) {
  set_bracket(i, j, value);
  if (i != j) set_bracket(j, i, scaled(value, -sign_scalar(dot_.parity(i) & dot_.parity(j))));
}

SparseVector DotBracketAlgebra::bracket_of(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) add_scaled(out, bracket(i, j), a * b);
  }
  return out;
}

SparseVector DotBracketAlgebra::derivation(std::size_t i) const {
  const auto u = dot_.unit();
  if (!u) throw std::invalid_argument("dot-bracket algebra has no unit");
  return bracket(i, *u);
}

bool DotBracketAlgebra::is_poisson() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!derivation(i).empty()) return false;
  }
  return true;
}

void DotBracketAlgebra::validate() const {
  if (!dot_.unit()) throw std::invalid_argument("dot-bracket algebra has no unit");
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      const unsigned p = dot_.parity(i) ^ dot_.parity(j);
      for (const auto& [k, c] : bracket(i, j)) {
        if (dot_.parity(k) != p) {
          throw std::invalid_argument("bracket {" + dot_.label(i) + "," + dot_.label(j) + "} breaks parity");
        }
      }
      SparseVector r = bracket(i, j);
      add_scaled(r, bracket(j, i), sign_scalar(dot_.parity(i) & dot_.parity(j)));
      if (!r.empty()) {
        throw std::invalid_argument("bracket {" + dot_.label(i) + "," + dot_.label(j) + "} is not super-skew-symmetric");
      }
    }
  }
}

StructureTable grassmann_table(unsigned n, const FieldContext& field) {
  if (n < 1 || n > kMaxGenerators) throw std::invalid_argument("generator count out of range");
  const std::size_t d = std::size_t{1} << n;
  std::vector<unsigned> parities(d);
  std::vector<std::string> labels(d);
  for (Mask m = 0; m < d; ++m) {
    parities[m] = popcount(m) & 1U;
    labels[m] = monomial_label(m);
  }
  StructureTable table(field, parities, labels);
  for (Mask a = 0; a < d; ++a) {
    for (Mask b = 0; b < d; ++b) {
      const int s = wedge_sign(a, b);
      if (s != 0) table.set_product(a, b, unit_vector(a | b, Scalar(s)));
    }
  }
  table.set_unit(0);
  return table;
}

DotBracketAlgebra grassmann_poisson(unsigned n, const FieldContext& field) {
  DotBracketAlgebra algebra(grassmann_table(n, field));
  const std::size_t d = algebra.dim();
  for (Mask a = 0; a < d; ++a) {
    const auto f = GrassmannElement::monomial(n, a);
    for (Mask b = 0; b < d; ++b) {
      const auto g = GrassmannElement::monomial(n, b);
      SparseVector value;
      const GrassmannElement bracket = poisson_bracket(f, g);
      for (const auto& [m, c] : bracket.terms()) value.emplace_back(m, c);
      algebra.set_bracket(a, b, std::move(value));
    }
  }
  return algebra;
}

std::string bar_label(const std::string& label) {
  if (label == "1") return "be[]";
  return "b" + label;
}

StructureTable kantor_double(const DotBracketAlgebra& algebra) {
  const StructureTable& a = algebra.dot();
  if (!a.unit()) throw std::invalid_argument("Kantor double needs a unital algebra");
  const std::size_t d = a.dim();
  std::vector<unsigned> parities(2 * d);
  std::vector<std::string> labels(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    parities[i] = a.parity(i);
    parities[d + i] = a.parity(i) ^ 1U;
    labels[i] = a.label(i);
    labels[d + i] = bar_label(a.label(i));
  }
  auto shifted = [d](const SparseVector& v, const Scalar& c) {
    SparseVector out;
    out.reserve(v.size());
    for (const auto& [k, x] : v) out.emplace_back(d + k, x * c);
    return out;
  };
  StructureTable j(a.field(), parities, labels);
  for (std::size_t f = 0; f < d; ++f) {
    for (std::size_t g = 0; g < d; ++g) {
      const Scalar sg = sign_scalar(a.parity(g));
      j.set_product(f, g, a.product(f, g));
      j.set_product(f, d + g, shifted(a.product(f, g), Scalar(1)));
      j.set_product(d + f, g, shifted(a.product(f, g), sg));
      j.set_product(d + f, d + g, scaled(algebra.bracket(f, g), sg));
    }
  }
  j.set_unit(a.unit());
  return j;
}

namespace {

std::vector<std::pair<std::string, Scalar>> labelled(const SparseVector& v, const StructureTable& t) {
  std::vector<std::pair<std::string, Scalar>> out;
  for (const auto& [i, c] : v) out.emplace_back(t.label(i), c);
  return out;
}

}  // namespace

CheckReport check_kantor_conditions(const DotBracketAlgebra& algebra, const CheckOptions& options) {
  algebra.validate();
  const StructureTable& a = algebra.dot();
  const std::size_t d = a.dim();
  const auto& par = a.parities();
  std::vector<SparseVector> der(d);
  for (std::size_t i = 0; i < d; ++i) der[i] = algebra.derivation(i);

  CheckReport report = run_partitioned("kantor conditions", d, options,
                                       [&](ViolationSink& sink, std::size_t begin, std::size_t end) {
    for (std::size_t f = begin; f < end; ++f) {
      const SparseVector ef = unit_vector(f);
      for (std::size_t g = 0; g < d; ++g) {
        const SparseVector eg = unit_vector(g);
        for (std::size_t h = 0; h < d; ++h) {
          const SparseVector eh = unit_vector(h);
          sink.count_case();
          const unsigned pf = par[f], pg = par[g], ph = par[h];
          // Generalized Leibniz rule.
          SparseVector leibniz = algebra.bracket_of(ef, a.product(g, h));
          add_scaled(leibniz, a.multiply(algebra.bracket(f, g), eh), Scalar(-1));
          add_scaled(leibniz, a.multiply(eg, algebra.bracket(f, h)), -sign_scalar(pf & pg));
          add_scaled(leibniz, a.multiply(der[f], a.product(g, h)), Scalar(1));
          if (!leibniz.empty()) {
            sink.record([&] {
              return Violation{"leibniz", {f, g, h}, {a.label(f), a.label(g), a.label(h)}, labelled(leibniz, a)};
            });
          }
          // Generalized Jacobi identity.
          SparseVector jacobi = algebra.bracket_of(ef, algebra.bracket(g, h));
          add_scaled(jacobi, algebra.bracket_of(algebra.bracket(f, g), eh), Scalar(-1));
          add_scaled(jacobi, algebra.bracket_of(eg, algebra.bracket(f, h)), -sign_scalar(pf & pg));
          add_scaled(jacobi, a.multiply(der[f], algebra.bracket(g, h)), Scalar(-1));
          add_scaled(jacobi, a.multiply(der[g], algebra.bracket(h, f)), -sign_scalar(pf & (pg ^ ph)));
          add_scaled(jacobi, a.multiply(der[h], algebra.bracket(f, g)), -sign_scalar(ph & (pf ^ pg)));
          if (!jacobi.empty()) {
            sink.record([&] {
              return Violation{"jacobi", {f, g, h}, {a.label(f), a.label(g), a.label(h)}, labelled(jacobi, a)};
            });
          }
        }
      }
    }
  });

  if (a.field().characteristic() != 3 && !options.force_cubic_condition) return report;

  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < d; ++i) {
    if (par[i] == 1) odd.push_back(i);
  }
  CheckReport cubic = run_partitioned("kantor conditions", odd.size(), options,
                                      [&](ViolationSink& sink, std::size_t begin, std::size_t end) {
    auto test = [&](const SparseVector& x, std::vector<std::size_t> inputs, std::vector<std::string> names) {
      sink.count_case();
      const SparseVector xx = algebra.bracket_of(x, x);
      SparseVector r = algebra.bracket_of(xx, x);
      SparseVector dx;
      for (const auto& [i, c] : x) add_scaled(dx, der[i], c);
      add_scaled(r, a.multiply(xx, dx), Scalar(1));
      if (!r.empty()) {
        sink.record([&] { return Violation{"cubic", std::move(inputs), std::move(names), labelled(r, a)}; });
      }
    };
    for (std::size_t p = begin; p < end; ++p) {
      const std::size_t u = odd[p];
      test(unit_vector(u), {u}, {a.label(u)});
      for (std::size_t q = p + 1; q < odd.size(); ++q) {
        const std::size_t v = odd[q];
        test(unit_vector(u) + unit_vector(v), {u, v}, {a.label(u) + "+" + a.label(v)});
        test(unit_vector(u) - unit_vector(v), {u, v}, {a.label(u) + "-" + a.label(v)});
        for (std::size_t r = q + 1; r < odd.size(); ++r) {
          const std::size_t w = odd[r];
          test(unit_vector(u) + unit_vector(v) + unit_vector(w), {u, v, w},
               {a.label(u) + "+" + a.label(v) + "+" + a.label(w)});
        }
      }
    }
  });
  const double millis = report.millis + cubic.millis;
  report.absorb(std::move(cubic), options.limit);
  report.millis = millis;
  return report;
}

StructureTable kan_closed_form(unsigned n, const FieldContext& field) {
  if (n < 1 || n > kMaxGenerators) throw std::invalid_argument("generator count out of range");
  const std::size_t half = std::size_t{1} << n;
  std::vector<unsigned> parities(2 * half);
  std::vector<std::string> labels(2 * half);
  for (Mask m = 0; m < half; ++m) {
    parities[m] = popcount(m) & 1U;
    parities[half + m] = parities[m] ^ 1U;
    labels[m] = monomial_label(m);
    labels[half + m] = bar_label(labels[m]);
  }
  StructureTable t(field, parities, labels);
  for (Mask i = 0; i < half; ++i) {
    for (Mask j = 0; j < half; ++j) {
      const unsigned s = popcount(j);
      if ((i & j) == 0) {
        const Scalar sign = sign_scalar(cross_inversions(i, j));
        t.set_product(i, j, unit_vector(i | j, sign));
        t.set_product(i, half + j, unit_vector(half + (i | j), sign));
        t.set_product(half + i, j, unit_vector(half + (i | j), sign * sign_scalar(s)));
      }
      const Mask common = i & j;
      if (popcount(common) == 1) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(common));
        const unsigned p = popcount(i & bits_below(bit)) + 1;
        const unsigned q = popcount(j & bits_below(bit)) + 1;
        const unsigned k = popcount(i);
        const Mask ip = i & ~common;
        const Mask jp = j & ~common;
        t.set_product(half + i, half + j, unit_vector(ip | jp, sign_scalar(s + k + p + q + cross_inversions(ip, jp))));
      }
    }
  }
  t.set_unit(0);
  return t;
}

StructureTable build_kan(unsigned n, const FieldContext& field) {
  if (n < 2) throw std::invalid_argument("Kan(n) needs n >= 2");
  if (n > kMaxKanGenerators) throw std::invalid_argument("Kan(n) supported for n <= " + std::to_string(kMaxKanGenerators));
  StructureTable doubled = kantor_double(grassmann_poisson(n, field));
  if (!(doubled == kan_closed_form(n, field))) {
    throw std::logic_error("Kantor double of G_" + std::to_string(n) + " disagrees with the closed-form table");
  }
  doubled.set_kan_generators(n);
  return doubled;
}

std::optional<std::array<std::size_t, 3>> nonspecial_witness(const DotBracketAlgebra& algebra) {
  const std::size_t d = algebra.dim();
  for (std::size_t f = 0; f < d; ++f) {
    for (std::size_t g = 0; g < d; ++g) {
      const auto& fg = algebra.bracket(f, g);
      if (fg.empty()) continue;
      for (std::size_t h = 0; h < d; ++h) {
        if (!algebra.bracket_of(fg, unit_vector(h)).empty()) return std::array<std::size_t, 3>{f, g, h};
      }
    }
  }
  return std::nullopt;
}

}  // namespace kanrep
