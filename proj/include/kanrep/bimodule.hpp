#pragma once

#include <memory>
#include <vector>

#include "kanrep/action.hpp"
#include "kanrep/report.hpp"
#include "kanrep/table.hpp"

namespace kanrep {

/// E(J, V) = J + V with V·V = 0; J occupies indices [0, dim J) and V the
/// indices after it.  The left action is a·v = (-1)^{|a||v|} v·a.
StructureTable split_null_extension(const BimoduleAction& module);

/// Jordan superidentity on the split null extension.  Tuples with two or
/// more module entries are skipped since every term of the identity then
/// vanishes.
CheckReport check_jordan_bimodule(const BimoduleAction& module, const CheckOptions& options = {});

/// V = J with R_a the right multiplication.
BimoduleAction regular_bimodule(std::shared_ptr<const StructureTable> algebra);

/// Same operators, module parities flipped.
BimoduleAction opposite(const BimoduleAction& module);

/// Module with the given parities on which every R_a is zero.
BimoduleAction trivial_module(std::shared_ptr<const StructureTable> algebra, std::vector<unsigned> parities);

/// V + W over the same algebra; W's basis follows V's.
BimoduleAction direct_sum(const BimoduleAction& v, const BimoduleAction& w);

/// Relabels the basis: new vector i is old vector order[i].
BimoduleAction permute_basis(const BimoduleAction& module, const std::vector<std::size_t>& order);

/// The action restricted to the span of `basis` (homogeneous vectors),
/// written in that basis.  Throws std::invalid_argument if the span is not
/// invariant or a vector is not homogeneous.
BimoduleAction restrict_action(const BimoduleAction& module, const std::vector<SparseVector>& basis,
                               std::vector<std::string> labels = {});

struct PeirceComponent {
  std::vector<SparseVector> basis;  // in the coordinates of the input module
  BimoduleAction action;
};

struct PeirceDecomposition {
  PeirceComponent zero;
  PeirceComponent one;
  PeirceComponent half;
};

/// Eigenspaces of R_1 for the eigenvalues 0, 1 and 1/2.  Throws
/// std::invalid_argument when the algebra has no unit or R_1 does not
/// diagonalize with spectrum in {0, 1, 1/2}.
PeirceDecomposition peirce_decompose(const BimoduleAction& module);

struct VAlphaSpec {
  unsigned n = 2;
  Scalar alpha;
  unsigned v_parity = 0;
  /// Coefficient field; must be symbolic when alpha is not a constant.
  FieldContext field;
};

/// The bimodule with basis v(I) (index I) and bar v(I) (index 2^n + I),
/// I ascending, parities |v(I)| = v_parity + |I|.  Uses `kan` when given,
/// otherwise builds Kan(n) over spec.field.
BimoduleAction build_V_alpha(const VAlphaSpec& spec, std::shared_ptr<const StructureTable> kan = nullptr);

/// "v[]", "v[1,3]", "bv[2]".
std::string valpha_label(std::uint32_t mask, bool bar);

}  // namespace kanrep
