#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kanrep/report.hpp"
#include "kanrep/table.hpp"

namespace kanrep {

/// Supercommutative associative unital algebra A together with a bracket.
/// D(f) = {f, 1} is always derived from the bracket.
class DotBracketAlgebra {
 public:
  DotBracketAlgebra() = default;
  explicit DotBracketAlgebra(StructureTable dot);

  const StructureTable& dot() const noexcept { return dot_; }
  std::size_t dim() const noexcept { return dot_.dim(); }
  const FieldContext& field() const noexcept { return dot_.field(); }

  const SparseVector& bracket(std::size_t i, std::size_t j) const { return bracket_[i * dim() + j]; }
  /// Stores {e_i, e_j} only.
  void set_bracket(std::size_t i, std::size_t j, SparseVector value);
  /// Stores {e_i, e_j} = value and the mirrored {e_j, e_i} demanded by
  /// super-skew-symmetry.
  void set_bracket_pair(std::size_t i, std::size_t j, const SparseVector& value);

  SparseVector bracket_of(const SparseVector& x, const SparseVector& y) const;
  /// D(e_i) = {e_i, 1}.
  SparseVector derivation(std::size_t i) const;
  bool is_poisson() const;

  /// Unit present, bracket parities and super-skew-symmetry; throws
  /// std::invalid_argument naming the first offending pair.
  void validate() const;

 private:
  StructureTable dot_;
  std::vector<SparseVector> bracket_;
};

/// G_n with the wedge product, basis e_I at index I (as a bitmask).
StructureTable grassmann_table(unsigned n, const FieldContext& field);

/// G_n with its Poisson superbracket, computed from the odd derivations.
DotBracketAlgebra grassmann_poisson(unsigned n, const FieldContext& field);

/// Display name of the barred copy of a basis label: "1" -> "be[]",
/// "e[1,2]" -> "be[1,2]".
std::string bar_label(const std::string& label);

/// J(A) = A + bar(A); bar(e_i) sits at index dim(A) + i.  Throws
/// std::invalid_argument when A has no unit.
StructureTable kantor_double(const DotBracketAlgebra& algebra);

/// Generalized Leibniz and Jacobi conditions on all basis triples, and the
/// cubic condition {{x,x},x} = -{x,x}D(x) on odd x when the characteristic
/// is 3 (or when forced).  The cubic condition is not linear in x; it is
/// evaluated on every odd basis vector a, on a + b and a - b, and on
/// a + b + c, which determines the cubic form completely.
CheckReport check_kantor_conditions(const DotBracketAlgebra& algebra, const CheckOptions& options = {});

/// Kan(n) from the explicit sign formulas for the four product types,
/// independent of the Grassmann derivation machinery.
StructureTable kan_closed_form(unsigned n, const FieldContext& field);

/// Kan(n) = J(G_n); built via the Kantor double and compared against the
/// closed-form table.  Throws std::invalid_argument for n < 2 or
/// n > kMaxKanGenerators and std::logic_error if the constructions disagree.
StructureTable build_kan(unsigned n, const FieldContext& field = FieldContext::rational());

constexpr unsigned kMaxKanGenerators = 10;

/// Index of e_I and of its bar in Kan(n).
inline std::size_t kan_index(unsigned /*n*/, std::uint32_t mask) { return mask; }
inline std::size_t kan_bar_index(unsigned n, std::uint32_t mask) { return (std::size_t{1} << n) + mask; }

/// First basis triple (f, g, h) in lexicographic order with {{f,g},h} != 0,
/// i.e. a witness that the bracket is not special.
std::optional<std::array<std::size_t, 3>> nonspecial_witness(const DotBracketAlgebra& algebra);

}  // namespace kanrep
