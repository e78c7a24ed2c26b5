#include "kanrep/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "kanrep/bimodule.hpp"
#include "kanrep/kantor.hpp"

namespace kanrep {

namespace {

std::size_t bar_one(unsigned n) { return kan_bar_index(n, 0); }
std::size_t e_index(unsigned n, Mask m) { return kan_index(n, m); }
std::size_t be_index(unsigned n, Mask m) { return kan_bar_index(n, m); }

std::vector<std::pair<std::string, Scalar>> labelled(const SparseVector& v, const BimoduleAction& module) {
  std::vector<std::pair<std::string, Scalar>> out;
  for (const auto& [i, c] : v) {
    out.emplace_back(module.vlabels.empty() ? "v" + std::to_string(i) : module.vlabels[i], c);
  }
  return out;
}

std::string basis_target(Mask m, bool bar) { return valpha_label(m, bar); }

/// First nonzero entry of w divided by the matching entry of v, provided w
/// is that multiple of v.
std::optional<Scalar> ratio(const SparseVector& w, const SparseVector& v) {
  if (v.empty()) return std::nullopt;
  const auto& [p, c] = v.front();
  if (!c.is_constant()) return std::nullopt;
  const Scalar r = coefficient_at(w, p) / c;
  if (w != scaled(v, r)) return std::nullopt;
  return r;
}

}  // namespace

SparseVector apply_word(const BimoduleAction& module, const SparseVector& v, const OperatorWord& word) {
  SparseVector x = v;
  for (const std::size_t a : word.factors) {
    if (x.empty()) break;
    x = module.act(x, a);
  }
  return scaled(x, word.coefficient);
}

std::string word_to_string(const StructureTable& algebra, const OperatorWord& word) {
  std::ostringstream os;
  os << '(' << word.coefficient << ')';
  for (const std::size_t a : word.factors) os << " R_" << algebra.label(a);
  return os.str();
}

unsigned kan_rank(const BimoduleAction& module) {
  if (!module.algebra) throw std::invalid_argument("module without algebra");
  const auto n = module.algebra->kan_generators();
  if (!n) throw std::invalid_argument("module is not over Kan(n)");
  return *n;
}

std::vector<SparseVector> special_elements(const BimoduleAction& module) {
  const unsigned n = kan_rank(module);
  std::vector<const SparseMatrix*> ops;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    ops.push_back(&module.R(e_index(n, m)));
    ops.push_back(&module.R(be_index(n, m)));
  }
  std::vector<std::size_t> even, odd;
  for (std::size_t i = 0; i < module.dim(); ++i) (module.vparity[i] ? odd : even).push_back(i);
  std::vector<SparseVector> out = left_kernel(ops, even, module.dim());
  for (auto& v : left_kernel(ops, odd, module.dim())) out.push_back(std::move(v));
  return out;
}

SparseVector word_vector(const BimoduleAction& module, const SparseVector& v, const std::vector<unsigned>& sequence,
                         bool bar) {
  const unsigned n = kan_rank(module);
  OperatorWord word;
  for (const unsigned i : sequence) {
    word.factors.push_back(bar_one(n));
    word.factors.push_back(be_index(n, generator_bit(i)));
  }
  if (bar) word.factors.push_back(bar_one(n));
  return apply_word(module, v, word);
}

std::vector<SparseVector> adapted_basis(const BimoduleAction& module, const SparseVector& special) {
  const unsigned n = kan_rank(module);
  const std::size_t half = std::size_t{1} << n;
  std::vector<SparseVector> basis(2 * half);
  for (Mask m = 0; m < half; ++m) {
    basis[m] = word_vector(module, special, generators_of(m), false);
    basis[half + m] = module.act(basis[m], bar_one(n));
  }
  return basis;
}

OperatorWord witness_word(unsigned n, Mask subset) {
  const Mask full = full_mask(n);
  OperatorWord w;
  w.factors.push_back(e_index(n, subset));
  for (const unsigned m : generators_of(full & ~subset)) {
    w.factors.push_back(bar_one(n));
    w.factors.push_back(be_index(n, generator_bit(m)));
  }
  if (subset != full) {
    w.factors.push_back(e_index(n, full & ~subset));
  } else {
    w.factors.push_back(bar_one(n));
    w.factors.push_back(be_index(n, generator_bit(1)));
    w.factors.push_back(e_index(n, generator_bit(1)));
  }
  return w;
}

OperatorWord witness_word_bar(unsigned n, Mask subset, bool alpha_invertible) {
  const Mask full = full_mask(n);
  OperatorWord w;
  if (alpha_invertible) {
    w.factors.push_back(bar_one(n));
    const OperatorWord tail = witness_word(n, subset);
    w.factors.insert(w.factors.end(), tail.factors.begin(), tail.factors.end());
    return w;
  }
  if (subset != full) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(~subset)) + 1;
    w.factors.push_back(be_index(n, generator_bit(i)));
    const OperatorWord tail = witness_word(n, subset | generator_bit(i));
    w.factors.insert(w.factors.end(), tail.factors.begin(), tail.factors.end());
    return w;
  }
  w.factors.push_back(e_index(n, generator_bit(n)));
  const OperatorWord tail = witness_word_bar(n, full & ~generator_bit(n), false);
  w.factors.insert(w.factors.end(), tail.factors.begin(), tail.factors.end());
  return w;
}

std::vector<SparseVector> closure(const BimoduleAction& module, const std::vector<SparseVector>& generators) {
  EchelonBasis span(module.dim());
  std::deque<SparseVector> queue;
  for (const auto& g : generators) {
    if (span.insert(g)) queue.push_back(g);
  }
  while (!queue.empty()) {
    const SparseVector x = std::move(queue.front());
    queue.pop_front();
    for (std::size_t a = 0; a < module.right.size(); ++a) {
      SparseVector y = module.act(x, a);
      if (span.insert(y)) queue.push_back(std::move(y));
    }
  }
  std::vector<SparseVector> out;
  for (const auto& [pivot, row] : span.rows()) out.push_back(row);
  return out;
}

namespace {

/// Calibrated witness words for the adapted basis of `special`, or nullopt
/// when some word does not isolate its target.
std::optional<std::vector<WitnessEntry>> certify(const BimoduleAction& module, const SparseVector& special,
                                                 const std::vector<SparseVector>& basis) {
  const unsigned n = kan_rank(module);
  const std::size_t half = std::size_t{1} << n;
  // alpha from the special line decides which form of the bar word applies.
  const auto alpha = ratio(module.act(module.act(special, bar_one(n)), bar_one(n)), special);
  const bool alpha_invertible = alpha && alpha->is_constant() && !alpha->is_zero();
  std::vector<WitnessEntry> out;
  for (std::size_t target = 0; target < basis.size(); ++target) {
    const bool bar = target >= half;
    const Mask m = static_cast<Mask>(bar ? target - half : target);
    OperatorWord word = bar ? witness_word_bar(n, m, alpha_invertible) : witness_word(n, m);
    const auto c = ratio(apply_word(module, basis[target], word), special);
    if (!c || c->is_zero() || !c->is_constant()) return std::nullopt;
    word.coefficient = c->inverse();
    for (std::size_t other = 0; other < basis.size(); ++other) {
      if (other == target) continue;
      if (!apply_word(module, basis[other], word).empty()) return std::nullopt;
    }
    out.push_back({basis_target(m, bar), std::move(word)});
  }
  return out;
}

}  // namespace

IrreducibilityResult check_irreducible(const BimoduleAction& module) {
  module.validate();
  const std::vector<SparseVector> kernel = special_elements(module);
  if (kernel.empty()) throw std::invalid_argument("no special element: not a unital Jordan Kan(n)-bimodule");
  IrreducibilityResult result;
  const unsigned first_parity = *module.parity_of(kernel.front());
  SparseVector seed;
  for (const auto& k : kernel) {
    if (*module.parity_of(k) == first_parity) seed = seed + k;
  }
  result.special_vector = seed;
  std::vector<SparseVector> span = closure(module, {seed});
  if (span.size() != module.dim()) {
    result.subspace_basis = std::move(span);
    return result;
  }
  result.adapted_basis = adapted_basis(module, seed);
  if (result.adapted_basis.size() == module.dim()) {
    if (auto witnesses = certify(module, seed, result.adapted_basis)) {
      result.irreducible = true;
      result.witnesses = std::move(*witnesses);
      return result;
    }
  }
  result.adapted_basis.clear();
  for (const auto& k : kernel) {
    span = closure(module, {k});
    if (span.size() != module.dim()) {
      result.subspace_basis = std::move(span);
      return result;
    }
  }
  throw std::logic_error("irreducibility undecided: no witness certificate and no proper invariant subspace found");
}

ClassificationResult classify(const BimoduleAction& module) {
  module.validate();
  const unsigned n = kan_rank(module);
  const std::vector<SparseVector> kernel = special_elements(module);
  if (kernel.size() != 1) {
    throw std::invalid_argument("special line has dimension " + std::to_string(kernel.size()) + ", expected 1");
  }
  ClassificationResult r;
  r.special_vector = kernel.front();
  r.v_parity = *module.parity_of(r.special_vector);
  const auto alpha = ratio(module.act(module.act(r.special_vector, bar_one(n)), bar_one(n)), r.special_vector);
  if (!alpha) throw std::invalid_argument("special line is not an eigenline of R_b1^2");
  r.alpha = *alpha;
  return r;
}

IsomorphismResult check_isomorphic(const BimoduleAction& a, const BimoduleAction& b) {
  IsomorphismResult out;
  if (!(*a.algebra == *b.algebra)) {
    out.reason = "modules over different algebras";
    return out;
  }
  if (a.dim() != b.dim()) {
    out.reason = "dimensions differ";
    return out;
  }
  const ClassificationResult ca = classify(a);
  const ClassificationResult cb = classify(b);
  if (ca.v_parity != cb.v_parity) {
    out.reason = "special elements have different parity";
    return out;
  }
  if (ca.alpha != cb.alpha) {
    out.reason = "alpha differs: " + ca.alpha.to_string() + " vs " + cb.alpha.to_string();
    return out;
  }
  const auto basis_a = adapted_basis(a, ca.special_vector);
  const auto basis_b = adapted_basis(b, cb.special_vector);
  const std::size_t d = a.dim();
  if (rank_of(basis_a, d) != d || rank_of(basis_b, d) != d) {
    throw std::logic_error("adapted basis does not span an irreducible module");
  }
  SparseMatrix phi = SparseMatrix::zero(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto coords = solve_left(basis_a, unit_vector(i));
    if (!coords) throw std::logic_error("adapted basis is not a basis");
    for (std::size_t k = 0; k < d; ++k) {
      if (!(*coords)[k].is_zero()) add_scaled(phi.rows[i], basis_b[k], (*coords)[k]);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    const auto p = b.parity_of(phi.rows[i]);
    if (!p || *p != a.vparity[i]) throw std::logic_error("isomorphism candidate does not preserve parity");
    for (std::size_t x = 0; x < a.right.size(); ++x) {
      if (kanrep::apply(a.act(unit_vector(i), x), phi) != b.act(phi.rows[i], x)) {
        throw std::logic_error("isomorphism candidate is not equivariant at " + a.algebra->label(x));
      }
    }
  }
  out.isomorphic = true;
  out.reason = "equal parity and alpha";
  out.map = std::move(phi);
  return out;
}

CheckReport check_basis_independence(const BimoduleAction& module) {
  const auto start = std::chrono::steady_clock::now();
  const ClassificationResult c = classify(module);
  if (!c.alpha.is_constant()) throw std::invalid_argument("basis independence check needs a constant alpha");
  const auto basis = adapted_basis(module, c.special_vector);
  const IrreducibilityResult irr = check_irreducible(module);
  if (!irr.irreducible) throw std::invalid_argument("module is reducible");
  const std::uint32_t modulus = module.algebra->field().modulus();
  const Scalar al = Scalar::parameter(modulus);
  std::vector<Scalar> formal(basis.size());
  SparseVector generic;
  Scalar power = Scalar::integer(1, modulus);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    formal[k] = power;
    add_scaled(generic, basis[k], power);
    power *= al;
  }
  // Certificates were calibrated on the classification's special vector.
  const auto witnesses = certify(module, c.special_vector, basis);
  if (!witnesses) throw std::logic_error("witness words failed on the adapted basis");
  CheckReport report;
  report.subject = "basis independence";
  for (std::size_t k = 0; k < basis.size(); ++k) {
    ++report.cases_checked;
    const SparseVector got = apply_word(module, generic, (*witnesses)[k].word);
    const SparseVector expected = scaled(c.special_vector, formal[k]);
    if (got != expected) {
      ++report.total_violations;
      report.violations.push_back(
          Violation{"coefficient recovery", {k}, {(*witnesses)[k].target}, labelled(got - expected, module)});
    }
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

struct LemmaChecker {
  const BimoduleAction& module;
  const CheckOptions& options;
  unsigned n;
  std::size_t half;
  CheckReport report;

  void expect_zero_operator(const std::string& relation, std::vector<std::size_t> inputs, const SparseMatrix& m) {
    ++report.cases_checked;
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      if (m.rows[i].empty()) continue;
      ++report.total_violations;
      if (report.violations.size() < options.limit) {
        std::vector<std::string> names;
        for (const auto a : inputs) names.push_back(module.algebra->label(a));
        inputs.push_back(i);
        names.push_back(module.vlabels.empty() ? "v" + std::to_string(i) : module.vlabels[i]);
        report.violations.push_back(Violation{relation, std::move(inputs), std::move(names), labelled(m.rows[i], module)});
      }
      return;
    }
  }

  void expect_equal(const std::string& relation, std::vector<std::size_t> inputs, std::vector<std::string> names,
                    const SparseVector& got, const SparseVector& expected) {
    ++report.cases_checked;
    if (got == expected) return;
    ++report.total_violations;
    if (report.violations.size() < options.limit) {
      report.violations.push_back(Violation{relation, std::move(inputs), std::move(names), labelled(got - expected, module)});
    }
  }

  SparseMatrix supercommutator(std::size_t x, std::size_t y) const {
    const unsigned p = module.algebra->parity(x) & module.algebra->parity(y);
    return add_scaled(compose(module.R(x), module.R(y)), compose(module.R(y), module.R(x)), -sign_scalar(p));
  }
};

}  // namespace

CheckReport check_lemmas(const BimoduleAction& module, const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  module.validate();
  LemmaChecker ck{module, options, kan_rank(module), 0, {}};
  ck.report.subject = "kan(n) bimodule relations";
  const unsigned n = ck.n;
  const std::size_t half = ck.half = std::size_t{1} << n;
  const Mask full = full_mask(n);
  const std::size_t b1 = bar_one(n);
  const std::size_t d = module.dim();
  const SparseMatrix zero = SparseMatrix::zero(d, d);

  // Supercommutation rules.
  for (Mask i = 0; i < half; ++i) {
    for (Mask j = 0; j < half; ++j) {
      ck.expect_zero_operator("[R_eI,R_eJ]=0", {e_index(n, i), e_index(n, j)}, ck.supercommutator(e_index(n, i), e_index(n, j)));
      if (popcount(i & j) >= 2) {
        ck.expect_zero_operator("[R_eI,R_beJ]=0", {e_index(n, i), be_index(n, j)},
                                ck.supercommutator(e_index(n, i), be_index(n, j)));
      }
      if ((i & j) != 0) {
        ck.expect_zero_operator("[R_beI,R_beJ]=0", {be_index(n, i), be_index(n, j)},
                                ck.supercommutator(be_index(n, i), be_index(n, j)));
      }
    }
    if (i != full) ck.expect_zero_operator("[R_eI,R_b1]=0", {e_index(n, i), b1}, ck.supercommutator(e_index(n, i), b1));
  }

  // Powers of single operators.
  for (std::size_t a = 0; a < 2 * half; ++a) {
    const SparseMatrix& r = module.R(a);
    const SparseMatrix r2 = compose(r, r);
    const bool is_bar_generator = a >= half && popcount(static_cast<Mask>(a - half)) == 1;
    if (module.algebra->parity(a) == 1) {
      if (a != b1) ck.expect_zero_operator("R_a^2=0", {a}, r2);
    } else if (a != 0 && !is_bar_generator) {
      ck.expect_zero_operator("R_a^3=0", {a}, compose(r2, r));
    } else if (is_bar_generator) {
      ck.expect_zero_operator("R_bei^3=R_bei", {a}, add_scaled(compose(r2, r), r, Scalar(-1)));
    }
  }

  // R_bei R_b1 R_bej.
  for (unsigned i = 1; i <= n; ++i) {
    const std::size_t bi = be_index(n, generator_bit(i));
    const SparseMatrix mi = compose(module.R(bi), module.R(b1));
    ck.expect_zero_operator("R_bei R_b1 R_bei=0", {bi, b1, bi}, compose(mi, module.R(bi)));
    for (unsigned j = i + 1; j <= n; ++j) {
      const std::size_t bj = be_index(n, generator_bit(j));
      const SparseMatrix mj = compose(module.R(bj), module.R(b1));
      ck.expect_zero_operator("R_bei R_b1 R_bej antisymmetric", {bi, b1, bj},
                              add_scaled(compose(mi, module.R(bj)), compose(mj, module.R(bi)), Scalar(1)));
    }
  }

  // Special line and alpha.
  const std::vector<SparseVector> kernel = special_elements(module);
  ck.report.cases_checked++;
  if (kernel.size() != 1) {
    ck.report.total_violations++;
    ck.report.violations.push_back(Violation{"special line dimension 1", {kernel.size()}, {}, {}});
    ck.report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return ck.report;
  }
  const SparseVector& v = kernel.front();
  const auto alpha = ratio(module.act(module.act(v, b1), b1), v);
  if (!alpha) {
    ck.report.total_violations++;
    ck.report.violations.push_back(Violation{"R_b1^2 scalar on special line", {}, {}, {}});
  } else {
    ck.expect_zero_operator("R_b1^2=alpha", {b1, b1},
                            add_scaled(compose(module.R(b1), module.R(b1)), SparseMatrix::identity(d), -*alpha));
  }
  const Scalar a = alpha.value_or(Scalar());

  // Action on word-built vectors v(I).
  auto seq_of = [](Mask m) { return generators_of(m); };
  auto reversed = [](std::vector<unsigned> s) {
    std::reverse(s.begin(), s.end());
    return s;
  };
  for (Mask i = 0; i < half; ++i) {
    const SparseVector vi = word_vector(module, v, seq_of(i), false);
    const SparseVector vbi = word_vector(module, v, seq_of(i), true);
    for (Mask j = 1; j < half; ++j) {
      const std::vector<std::string> names{valpha_label(i, false), module.algebra->label(e_index(n, j))};
      if ((j & ~i) != 0) {
        ck.expect_equal("v(I)e_J=0 for J not in I", {i, j}, names, module.act(vi, e_index(n, j)), {});
        ck.expect_equal("v(I)be_J=0 for J not in I", {i, j}, names, module.act(vi, be_index(n, j)), {});
        ck.expect_equal("bv(I)e_J=0 for J not in I", {i, j}, names, module.act(vbi, e_index(n, j)), {});
        if (popcount(j & ~i) >= 2) {
          ck.expect_equal("bv(I)be_J=0 for |J-I|>=2", {i, j}, names, module.act(vbi, be_index(n, j)), {});
        }
      }
      const unsigned s = popcount(j);
      if ((j & ~i) == 0) {
        // I ordered as (I \ J ascending, J descending), J ascending.
        std::vector<unsigned> iseq = seq_of(i & ~j);
        for (const unsigned g : reversed(seq_of(j))) iseq.push_back(g);
        const SparseVector vI = word_vector(module, v, iseq, false);
        const SparseVector vbI = word_vector(module, v, iseq, true);
        const SparseVector rest = word_vector(module, v, seq_of(i & ~j), false);
        const SparseVector rest_bar = word_vector(module, v, seq_of(i & ~j), true);
        ck.expect_equal("v(I)e_J=v(I-J)", {i, j}, names, module.act(vI, e_index(n, j)), rest);
        ck.expect_equal("v(I)be_J=bv(I-J)", {i, j}, names, module.act(vI, be_index(n, j)), rest_bar);
        ck.expect_equal("bv(I)e_J=(-1)^s bv(I-J)", {i, j}, names, module.act(vbI, e_index(n, j)),
                        scaled(rest_bar, sign_scalar(s)));
        ck.expect_equal("bv(I)be_J=(-1)^(s-1) alpha (s-1) v(I-J)", {i, j}, names, module.act(vbI, be_index(n, j)),
                        scaled(rest, sign_scalar(s + 1) * a * Scalar(static_cast<std::int64_t>(s) - 1)));
      } else if (popcount(j & ~i) == 1) {
        const Mask missing = j & ~i;
        const unsigned m = static_cast<unsigned>(std::countr_zero(missing)) + 1;
        const Mask j1 = j & ~missing;
        std::vector<unsigned> iseq = seq_of(i & ~j1);
        for (const unsigned g : reversed(seq_of(j1))) iseq.push_back(g);
        std::vector<unsigned> jseq = seq_of(j1);
        jseq.push_back(m);
        const auto [jmask, jsign] = normalize_sequence(jseq);
        std::vector<unsigned> out_seq = seq_of(i & ~j1);
        out_seq.push_back(m);
        const SparseVector vbI = word_vector(module, v, iseq, true);
        ck.expect_equal("bv(I)be_J=(-1)^(s-1) v((I-J1)+j_s)", {i, j}, names,
                        scaled(module.act(vbI, be_index(n, jmask)), Scalar(jsign)),
                        scaled(word_vector(module, v, out_seq, false), sign_scalar(s + 1)));
      }
    }
  }
  ck.report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return ck.report;
}

}  // namespace kanrep
