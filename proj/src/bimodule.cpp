#include "kanrep/bimodule.hpp"

#include <stdexcept>

#include "kanrep/grassmann.hpp"
#include "kanrep/kantor.hpp"
#include "kanrep/superalgebra.hpp"

namespace kanrep {

StructureTable split_null_extension(const BimoduleAction& module) {
  module.validate();
  const StructureTable& j = *module.algebra;
  const std::size_t dj = j.dim();
  const std::size_t dv = module.dim();
  std::vector<unsigned> parities = j.parities();
  std::vector<std::string> labels = j.labels();
  for (std::size_t i = 0; i < dv; ++i) {
    parities.push_back(module.vparity[i]);
    labels.push_back("V." + (module.vlabels.empty() ? "v" + std::to_string(i) : module.vlabels[i]));
  }
  StructureTable e(j.field(), parities, labels);
  auto shifted = [dj](const SparseVector& v, const Scalar& c) {
    SparseVector out;
    out.reserve(v.size());
    for (const auto& [k, x] : v) out.emplace_back(dj + k, x * c);
    return out;
  };
  for (std::size_t a = 0; a < dj; ++a) {
    for (std::size_t b = 0; b < dj; ++b) e.set_product(a, b, j.product(a, b));
  }
  for (std::size_t a = 0; a < dj; ++a) {
    const SparseMatrix& r = module.R(a);
    for (std::size_t i = 0; i < dv; ++i) {
      e.set_product(dj + i, a, shifted(r.rows[i], Scalar(1)));
      e.set_product(a, dj + i, shifted(r.rows[i], sign_scalar(j.parity(a) & module.vparity[i])));
    }
  }
  e.set_unit(j.unit());
  return e;
}

CheckReport check_jordan_bimodule(const BimoduleAction& module, const CheckOptions& options) {
  CheckOptions opts = options;
  opts.square_zero_ideal_from = module.algebra->dim();
  CheckReport report = check_jordan_superidentity(split_null_extension(module), opts);
  report.subject = "jordan bimodule";
  return report;
}

BimoduleAction regular_bimodule(std::shared_ptr<const StructureTable> algebra) {
  BimoduleAction m;
  const std::size_t d = algebra->dim();
  m.vparity = algebra->parities();
  m.vlabels = algebra->labels();
  m.right.reserve(d);
  for (std::size_t a = 0; a < d; ++a) {
    SparseMatrix r = SparseMatrix::zero(d, d);
    for (std::size_t i = 0; i < d; ++i) r.rows[i] = algebra->product(i, a);
    m.right.push_back(std::move(r));
  }
  m.algebra = std::move(algebra);
  return m;
}

BimoduleAction opposite(const BimoduleAction& module) {
  BimoduleAction m = module;
  for (auto& p : m.vparity) p ^= 1U;
  return m;
}

BimoduleAction trivial_module(std::shared_ptr<const StructureTable> algebra, std::vector<unsigned> parities) {
  BimoduleAction m;
  const std::size_t d = parities.size();
  m.vparity = std::move(parities);
  m.right.assign(algebra->dim(), SparseMatrix::zero(d, d));
  m.algebra = std::move(algebra);
  return m;
}

BimoduleAction direct_sum(const BimoduleAction& v, const BimoduleAction& w) {
  if (v.algebra != w.algebra && !(*v.algebra == *w.algebra)) {
    throw std::invalid_argument("direct sum of modules over different algebras");
  }
  BimoduleAction m;
  m.algebra = v.algebra;
  const std::size_t dv = v.dim();
  const std::size_t d = dv + w.dim();
  m.vparity = v.vparity;
  m.vparity.insert(m.vparity.end(), w.vparity.begin(), w.vparity.end());
  if (!v.vlabels.empty() || !w.vlabels.empty()) {
    for (std::size_t i = 0; i < v.dim(); ++i) m.vlabels.push_back("1." + (v.vlabels.empty() ? std::to_string(i) : v.vlabels[i]));
    for (std::size_t i = 0; i < w.dim(); ++i) m.vlabels.push_back("2." + (w.vlabels.empty() ? std::to_string(i) : w.vlabels[i]));
  }
  for (std::size_t a = 0; a < v.right.size(); ++a) {
    SparseMatrix r = SparseMatrix::zero(d, d);
    for (std::size_t i = 0; i < dv; ++i) r.rows[i] = v.R(a).rows[i];
    for (std::size_t i = 0; i < w.dim(); ++i) {
      for (const auto& [k, c] : w.R(a).rows[i]) r.rows[dv + i].emplace_back(dv + k, c);
    }
    m.right.push_back(std::move(r));
  }
  return m;
}

BimoduleAction permute_basis(const BimoduleAction& module, const std::vector<std::size_t>& order) {
  const std::size_t d = module.dim();
  if (order.size() != d) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::size_t> position(d, SIZE_MAX);
  for (std::size_t i = 0; i < d; ++i) {
    if (order[i] >= d || position[order[i]] != SIZE_MAX) throw std::invalid_argument("not a permutation");
    position[order[i]] = i;
  }
  BimoduleAction m;
  m.algebra = module.algebra;
  for (std::size_t i = 0; i < d; ++i) {
    m.vparity.push_back(module.vparity[order[i]]);
    if (!module.vlabels.empty()) m.vlabels.push_back(module.vlabels[order[i]]);
  }
  for (const auto& r : module.right) {
    SparseMatrix p = SparseMatrix::zero(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& [k, c] : r.rows[order[i]]) p.rows[i].emplace_back(position[k], c);
      canonicalize(p.rows[i]);
    }
    m.right.push_back(std::move(p));
  }
  return m;
}

BimoduleAction restrict_action(const BimoduleAction& module, const std::vector<SparseVector>& basis,
                               std::vector<std::string> labels) {
  BimoduleAction m;
  m.algebra = module.algebra;
  const std::size_t d = basis.size();
  for (const auto& b : basis) {
    const auto p = module.parity_of(b);
    if (!p || b.empty()) throw std::invalid_argument("restriction basis vectors must be nonzero and homogeneous");
    m.vparity.push_back(*p);
  }
  m.vlabels = std::move(labels);
  for (std::size_t a = 0; a < module.right.size(); ++a) {
    SparseMatrix r = SparseMatrix::zero(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const auto coords = solve_left(basis, module.act(basis[i], a));
      if (!coords) throw std::invalid_argument("subspace is not invariant under " + module.algebra->label(a));
      for (std::size_t k = 0; k < d; ++k) {
        if (!(*coords)[k].is_zero()) r.rows[i].emplace_back(k, (*coords)[k]);
      }
    }
    m.right.push_back(std::move(r));
  }
  return m;
}

PeirceDecomposition peirce_decompose(const BimoduleAction& module) {
  module.validate();
  const auto unit = module.algebra->unit();
  if (!unit) throw std::invalid_argument("Peirce decomposition needs a unital algebra");
  const FieldContext& field = module.algebra->field();
  const std::size_t d = module.dim();
  std::vector<std::size_t> even, odd;
  for (std::size_t i = 0; i < d; ++i) (module.vparity[i] ? odd : even).push_back(i);

  auto eigenspace = [&](const Scalar& lambda) {
    const SparseMatrix shifted = add_scaled(module.R(*unit), SparseMatrix::identity(d), -lambda);
    std::vector<SparseVector> basis = left_kernel({&shifted}, even, d);
    for (auto& v : left_kernel({&shifted}, odd, d)) basis.push_back(std::move(v));
    return basis;
  };
  PeirceDecomposition out;
  out.zero.basis = eigenspace(field.zero());
  out.one.basis = eigenspace(field.one());
  out.half.basis = eigenspace(field.from_fraction(1, 2));
  if (out.zero.basis.size() + out.one.basis.size() + out.half.basis.size() != d) {
    throw std::invalid_argument("R_1 is not diagonalizable with eigenvalues 0, 1, 1/2");
  }
  out.zero.action = restrict_action(module, out.zero.basis);
  out.one.action = restrict_action(module, out.one.basis);
  out.half.action = restrict_action(module, out.half.basis);
  return out;
}

std::string valpha_label(std::uint32_t mask, bool bar) {
  std::string inner = monomial_label(mask);
  if (mask == 0) inner = "e[]";
  return (bar ? "bv" : "v") + inner.substr(1);
}

BimoduleAction build_V_alpha(const VAlphaSpec& spec, std::shared_ptr<const StructureTable> kan) {
  const unsigned n = spec.n;
  if (n < 2) throw std::invalid_argument("V(alpha) needs n >= 2");
  if (spec.v_parity > 1) throw std::invalid_argument("parity must be 0 or 1");
  if (!spec.alpha.is_constant() && !spec.field.symbolic()) {
    throw std::invalid_argument("symbolic alpha needs a symbolic field");
  }
  if (!kan) kan = std::make_shared<const StructureTable>(build_kan(n, spec.field));
  if (kan->kan_generators() != n) throw std::invalid_argument("algebra is not Kan(" + std::to_string(n) + ")");
  const FieldContext& field = kan->field();
  const Scalar alpha = field.coerce(spec.alpha);

  const std::size_t half = std::size_t{1} << n;
  const std::size_t d = 2 * half;
  BimoduleAction m;
  m.algebra = kan;
  m.vparity.resize(d);
  m.vlabels.resize(d);
  for (Mask i = 0; i < half; ++i) {
    m.vparity[i] = (spec.v_parity + popcount(i)) & 1U;
    m.vparity[half + i] = m.vparity[i] ^ 1U;
    m.vlabels[i] = valpha_label(i, false);
    m.vlabels[half + i] = valpha_label(i, true);
  }
  m.right.assign(d, SparseMatrix::zero(d, d));

  for (Mask i = 0; i < half; ++i) {
    for (Mask j = 0; j < half; ++j) {
      const unsigned s = popcount(j);
      if ((j & ~i) == 0) {
        const Mask rest = i & ~j;
        // v(I) in ascending order equals this sign times v(I \ J, J reversed).
        const Scalar sgn = sign_scalar(cross_inversions(rest, j) + s * (s - 1) / 2);
        m.right[j].rows[i] = unit_vector(rest, sgn);
        m.right[half + j].rows[i] = unit_vector(half + rest, sgn);
        m.right[j].rows[half + i] = unit_vector(half + rest, sgn * sign_scalar(s));
        const Scalar c = sgn * sign_scalar(s + 1) * alpha * Scalar(static_cast<std::int64_t>(s) - 1);
        if (!c.is_zero()) m.right[half + j].rows[half + i] = unit_vector(rest, c);
      } else if (popcount(j & ~i) == 1) {
        const Mask missing = j & ~i;
        const unsigned bit = static_cast<unsigned>(std::countr_zero(missing));
        const Mask j1 = j & ~missing;
        const unsigned s1 = s - 1;
        const Mask rest = i & ~j1;
        const unsigned sign_j = popcount(j1 & bits_above(bit));
        const unsigned sign_i = cross_inversions(rest, j1) + s1 * (s1 - 1) / 2;
        const unsigned sign_out = popcount(rest & bits_above(bit));
        m.right[half + j].rows[half + i] = unit_vector(rest | missing, sign_scalar(sign_j + sign_i + s1 + sign_out));
      }
    }
  }
  for (auto& r : m.right) {
    for (auto& row : r.rows) {
      for (auto& [k, c] : row) c = field.coerce(c);
    }
  }
  return m;
}

}  // namespace kanrep
