#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kanrep/linear.hpp"
#include "kanrep/scalar.hpp"

namespace kanrep {

/// Finite-dimensional superalgebra given by basis parities and sparse
/// structure constants e_i e_j = sum_k c_ijk e_k.
class StructureTable {
 public:
  StructureTable() = default;
  StructureTable(FieldContext field, std::vector<unsigned> parities, std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return parities_.size(); }
  const FieldContext& field() const noexcept { return field_; }
  unsigned parity(std::size_t i) const { return parities_.at(i); }
  const std::vector<unsigned>& parities() const noexcept { return parities_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find_label(const std::string& label) const;

  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  /// Stores e_i e_j.  Throws std::invalid_argument if a term breaks parity.
  void set_product(std::size_t i, std::size_t j, SparseVector value);

  std::optional<std::size_t> unit() const noexcept { return unit_; }
  void set_unit(std::optional<std::size_t> unit);

  /// When set, the table is Kan(n) in the standard basis
  /// (e_I at index I, barred e_I at index 2^n + I).
  std::optional<unsigned> kan_generators() const noexcept { return kan_generators_; }
  void set_kan_generators(std::optional<unsigned> n) { kan_generators_ = n; }

  /// Bilinear extension of the structure constants.
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  /// Parity of a nonzero homogeneous vector; nullopt when mixed.
  std::optional<unsigned> parity_of(const SparseVector& x) const;

  friend bool operator==(const StructureTable& a, const StructureTable& b) {
    return a.field_ == b.field_ && a.parities_ == b.parities_ && a.unit_ == b.unit_ && a.products_ == b.products_;
  }

 private:
  FieldContext field_;
  std::vector<unsigned> parities_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> products_;
  std::optional<std::size_t> unit_;
  std::optional<unsigned> kan_generators_;
};

/// Element of a superalgebra given by a structure table.  The table must
/// outlive the element.
class Element {
 public:
  explicit Element(const StructureTable& table, SparseVector coeffs = {});
  static Element basis(const StructureTable& table, std::size_t i, const Scalar& coeff = Scalar(1));

  const StructureTable& table() const noexcept { return *table_; }
  const SparseVector& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<unsigned> parity() const { return table_->parity_of(coeffs_); }

  Element& operator+=(const Element& rhs);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator*(const Scalar& c, const Element& x) { return Element(*x.table_, scaled(x.coeffs_, c)); }
  friend bool operator==(const Element& a, const Element& b) {
    return a.table_ == b.table_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  const StructureTable* table_;
  SparseVector coeffs_;
};

/// Product in the common table; throws std::invalid_argument on mismatch.
Element multiply(const Element& x, const Element& y);

/// Renders a sparse vector with basis labels, e.g. "-1*be[1] + 2*e[2]".
std::string format_vector(const SparseVector& v, const std::vector<std::string>& labels);

/// The subalgebra spanned by the listed basis elements, renumbered in list
/// order.  Throws std::invalid_argument if the span is not closed.
StructureTable restrict_table(const StructureTable& table, const std::vector<std::size_t>& basis);

}  // namespace kanrep
