#include "kanrep/tensor.hpp"

#include <stdexcept>

#include "kanrep/analysis.hpp"
#include "kanrep/bimodule.hpp"
#include "kanrep/grassmann.hpp"
#include "kanrep/parallel.hpp"

namespace kanrep {

StructureTable TruncatedPolyAlgebra::table(const FieldContext& field) const {
  if (N == 0) throw std::invalid_argument("truncation degree must be positive");
  std::vector<std::string> labels;
  for (unsigned k = 0; k < N; ++k) labels.push_back("t^" + std::to_string(k));
  StructureTable t(field, std::vector<unsigned>(N, 0), labels);
  for (unsigned i = 0; i < N; ++i) {
    for (unsigned j = 0; i + j < N; ++j) t.set_product(i, j, unit_vector(i + j));
  }
  t.set_unit(0);
  return t;
}

SparseVector apply_map(const LinearMap& map, const SparseVector& x) {
  SparseVector out;
  for (const auto& [i, c] : x) add_scaled(out, map.at(i), c);
  return out;
}

LinearMap graded_generalized_derivation(unsigned n, const FieldContext& field) {
  const std::size_t d = std::size_t{1} << n;
  LinearMap e(d);
  for (Mask m = 0; m < d; ++m) {
    const Scalar w = field.from_int(static_cast<std::int64_t>(popcount(m)) - 1);
    if (!w.is_zero()) e[m] = unit_vector(m, w);
  }
  return e;
}

CheckReport check_generalized_derivation(const DotBracketAlgebra& algebra, const LinearMap& e,
                                         const CheckOptions& options) {
  const std::size_t d = algebra.dim();
  if (e.size() != d) throw std::invalid_argument("map size does not match the algebra");
  const auto unit = algebra.dot().unit();
  if (!unit) throw std::invalid_argument("generalized derivation needs a unital algebra");
  const StructureTable& dot = algebra.dot();
  const SparseVector& e1 = e[*unit];
  auto labels = [&](std::size_t a, std::size_t b) { return std::vector<std::string>{dot.label(a), dot.label(b)}; };
  auto residual = [&](const SparseVector& r) {
    std::vector<std::pair<std::string, Scalar>> out;
    for (const auto& [k, c] : r) out.emplace_back(dot.label(k), c);
    return out;
  };
  return run_partitioned("generalized derivation", d, options, [&](ViolationSink& sink, std::size_t begin,
                                                                   std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) {
      const SparseVector ea = e[a];
      for (std::size_t b = 0; b < d; ++b) {
        const SparseVector eb = e[b];
        const SparseVector ua = unit_vector(a);
        const SparseVector ub = unit_vector(b);
        const SparseVector ab = dot.product(a, b);
        SparseVector r = apply_map(e, ab);
        add_scaled(r, dot.multiply(ea, ub), Scalar(-1));
        add_scaled(r, dot.multiply(ua, eb), Scalar(-1));
        add_scaled(r, dot.multiply(ab, e1), Scalar(1));
        sink.count_case();
        if (!r.empty()) sink.record([&] { return Violation{"E(ab)", {a, b}, labels(a, b), residual(r)}; });

        const SparseVector& pq = algebra.bracket(a, b);
        SparseVector s = apply_map(e, pq);
        add_scaled(s, algebra.bracket_of(ea, ub), Scalar(-1));
        add_scaled(s, algebra.bracket_of(ua, eb), Scalar(-1));
        add_scaled(s, dot.multiply(pq, e1), Scalar(-1));
        sink.count_case();
        if (!s.empty()) sink.record([&] { return Violation{"E({p,q})", {a, b}, labels(a, b), residual(s)}; });
      }
    }
  });
}

namespace {

std::string tensor_label(const std::string& p, unsigned k) {
  return (p == "1" ? std::string("e[]") : p) + "*t^" + std::to_string(k);
}

}  // namespace

DotBracketAlgebra jordan_bracket_tensor(const DotBracketAlgebra& p, const LinearMap& e, const TruncatedPolyAlgebra& a) {
  p.validate();
  if (!p.is_poisson()) throw std::invalid_argument("tensor factor must be Poisson");
  CheckOptions quick;
  quick.limit = 1;
  if (!check_generalized_derivation(p, e, quick).passed()) {
    throw std::invalid_argument("map is not a generalized derivation of the factor");
  }
  const FieldContext& field = p.field();
  const Scalar alpha = field.coerce(a.alpha);
  const StructureTable& dot = p.dot();
  const std::size_t dp = p.dim();
  const unsigned n_trunc = a.N;
  if (n_trunc == 0) throw std::invalid_argument("truncation degree must be positive");
  const std::size_t d = dp * n_trunc;

  std::vector<unsigned> parities(d);
  std::vector<std::string> labels(d);
  for (unsigned k = 0; k < n_trunc; ++k) {
    for (std::size_t i = 0; i < dp; ++i) {
      parities[i + dp * k] = dot.parity(i);
      labels[i + dp * k] = tensor_label(dot.label(i), k);
    }
  }
  auto shifted = [dp](const SparseVector& v, unsigned k, const Scalar& c) {
    SparseVector out;
    for (const auto& [i, x] : v) out.emplace_back(i + dp * k, x * c);
    return out;
  };

  StructureTable table(field, parities, labels);
  for (unsigned i = 0; i < n_trunc; ++i) {
    for (unsigned j = 0; i + j < n_trunc; ++j) {
      for (std::size_t x = 0; x < dp; ++x) {
        for (std::size_t y = 0; y < dp; ++y) table.set_product(x + dp * i, y + dp * j, shifted(dot.product(x, y), i + j, 1));
      }
    }
  }
  table.set_unit(*dot.unit());

  DotBracketAlgebra out(std::move(table));
  for (unsigned i = 0; i < n_trunc; ++i) {
    const Scalar di = alpha * Scalar(-static_cast<std::int64_t>(i));
    for (unsigned j = 0; i + j < n_trunc; ++j) {
      const Scalar dj = alpha * Scalar(-static_cast<std::int64_t>(j));
      for (std::size_t x = 0; x < dp; ++x) {
        for (std::size_t y = 0; y < dp; ++y) {
          SparseVector v = p.bracket(x, y);
          add_scaled(v, dot.multiply(e[x], unit_vector(y)), dj);
          add_scaled(v, dot.multiply(e[y], unit_vector(x)), -sign_scalar(dot.parity(x) & dot.parity(y)) * di);
          out.set_bracket(x + dp * i, y + dp * j, shifted(v, i + j, 1));
        }
      }
    }
  }
  return out;
}

StructureTable build_J_GnT_alpha(unsigned n, const Scalar& alpha, unsigned N, const FieldContext& field) {
  if (n < 2 || n > kMaxKanGenerators) throw std::invalid_argument("generator count out of range");
  if (N < 2) throw std::invalid_argument("truncation order must be at least 2");
  if (!alpha.is_constant() && !field.symbolic()) throw std::invalid_argument("symbolic alpha needs a symbolic field");
  const DotBracketAlgebra tensor =
      jordan_bracket_tensor(grassmann_poisson(n, field), graded_generalized_derivation(n, field),
                            TruncatedPolyAlgebra{N, field.coerce(alpha)});
  return kantor_double(tensor);
}

EmbeddingResult embed_V_alpha(unsigned n, const Scalar& alpha, const FieldContext& field) {
  if (n < 2 || n > kMaxKanGenerators) throw std::invalid_argument("generator count out of range");
  const Scalar tensor_alpha = -field.coerce(alpha);
  const StructureTable j = build_J_GnT_alpha(n, tensor_alpha, 2, field);
  auto kan = std::make_shared<const StructureTable>(build_kan(n, field));
  const std::size_t half = std::size_t{1} << n;
  const std::size_t tensor_dim = 2 * half;
  const std::size_t d = 2 * half;

  auto kan_to_j = [&](std::size_t a) { return a < half ? a : tensor_dim + (a - half); };
  auto w_to_j = [&](std::size_t w) { return w < half ? half + w : tensor_dim + half + (w - half); };
  auto j_to_w = [&](std::size_t x) -> std::optional<std::size_t> {
    if (x >= half && x < tensor_dim) return x - half;
    if (x >= tensor_dim + half) return half + (x - tensor_dim - half);
    return std::nullopt;
  };

  EmbeddingResult out;
  out.tensor_alpha = tensor_alpha;
  BimoduleAction& w = out.w_action;
  w.algebra = kan;
  for (std::size_t i = 0; i < d; ++i) {
    w.vparity.push_back(j.parity(w_to_j(i)));
    w.vlabels.push_back(j.label(w_to_j(i)));
  }
  for (std::size_t a = 0; a < kan->dim(); ++a) {
    SparseMatrix r = SparseMatrix::zero(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& [x, c] : j.product(w_to_j(i), kan_to_j(a))) {
        const auto target = j_to_w(x);
        if (!target) throw std::logic_error("W is not closed under the Kan action");
        r.rows[i].emplace_back(*target, c);
      }
      canonicalize(r.rows[i]);
    }
    w.right.push_back(std::move(r));
  }

  const Mask full = full_mask(n);
  const std::size_t b1 = kan_bar_index(n, 0);
  out.phi = SparseMatrix::zero(d, d);
  for (Mask i = 0; i < half; ++i) {
    const Mask comp = full & ~i;
    const unsigned k = popcount(i);
    out.phi.rows[i] = unit_vector(comp, field.coerce(sign_scalar(cross_inversions(comp, i) + k * (k - 1) / 2)));
    out.phi.rows[half + i] = unit_vector(half + comp, coefficient_at(out.phi.rows[i], comp));
    if (w.act(out.phi.rows[i], b1) != out.phi.rows[half + i]) out.bar_images_agree = false;
  }

  out.word_images_agree = true;
  const SparseVector top = unit_vector(full);
  for (Mask i = 0; i < half; ++i) {
    const SparseVector via_words = word_vector(w, top, generators_of(i), false);
    if (via_words != out.phi.rows[i]) out.word_images_agree = false;
  }

  std::vector<SparseVector> image = out.phi.rows;
  if (rank_of(image, d) != d) throw std::logic_error("embedding map is not injective");
  std::vector<std::string> labels;
  for (Mask i = 0; i < half; ++i) labels.push_back(valpha_label(i, false));
  for (Mask i = 0; i < half; ++i) labels.push_back(valpha_label(i, true));
  out.transported = restrict_action(w, image, labels);

  const BimoduleAction expected = build_V_alpha(VAlphaSpec{n, field.coerce(alpha), n & 1U, field}, kan);
  CheckOptions opts;
  out.comparison = run_partitioned("embedding comparison", kan->dim(), opts, [&](ViolationSink& sink, std::size_t begin,
                                                                                std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t i = 0; i < d; ++i) {
        sink.count_case();
        const SparseVector diff = out.transported.R(a).rows[i] - expected.R(a).rows[i];
        if (!diff.empty()) {
          sink.record([&] {
            std::vector<std::pair<std::string, Scalar>> res;
            for (const auto& [k, c] : diff) res.emplace_back(labels[k], c);
            return Violation{"transported action", {i, a}, {labels[i], kan->label(a)}, res};
          });
        }
      }
    }
  });
  if (out.transported.vparity != expected.vparity) {
    ++out.comparison.total_violations;
    out.comparison.violations.push_back(Violation{"parity", {}, {}, {}});
  }
  return out;
}

}  // namespace kanrep
