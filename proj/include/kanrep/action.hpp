#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kanrep/linear.hpp"
#include "kanrep/table.hpp"

namespace kanrep {

/// Right action a -> R_a of a superalgebra on a graded vector space.
/// `right[a].rows[i]` is the image v_i·e_a.  The left action is determined
/// by supercommutativity: a·v = (-1)^{|a||v|} v·a.
struct BimoduleAction {
  std::shared_ptr<const StructureTable> algebra;
  std::vector<unsigned> vparity;
  std::vector<std::string> vlabels;
  std::vector<SparseMatrix> right;

  std::size_t dim() const noexcept { return vparity.size(); }
  const SparseMatrix& R(std::size_t a) const { return right.at(a); }

  /// v·e_a
  SparseVector act(const SparseVector& v, std::size_t a) const { return kanrep::apply(v, right.at(a)); }
  /// v·x for an algebra element x.
  SparseVector act(const SparseVector& v, const SparseVector& x) const;
  /// R_x for an algebra element x.
  SparseMatrix operator_of(const SparseVector& x) const;

  std::optional<unsigned> parity_of(const SparseVector& v) const;

  /// Shapes and parity compatibility |v·a| = |v| + |a|; throws
  /// std::invalid_argument describing the first offence.
  void validate() const;
};

}  // namespace kanrep
