#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kanrep/scalar.hpp"

namespace kanrep {

/// Sparse coordinate vector: (index, coefficient) pairs sorted by index,
/// zero coefficients never stored.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector unit_vector(std::size_t index, const Scalar& coeff = Scalar(1));
Scalar coefficient_at(const SparseVector& v, std::size_t index);
/// acc += c * v
void add_scaled(SparseVector& acc, const SparseVector& v, const Scalar& c);
SparseVector scaled(const SparseVector& v, const Scalar& c);
SparseVector operator+(const SparseVector& a, const SparseVector& b);
SparseVector operator-(const SparseVector& a, const SparseVector& b);
/// Sorts, merges duplicates and drops zeros.
void canonicalize(SparseVector& v);

/// Dense scratch buffer for repeated sparse accumulation.
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim) : values_(dim), used_(dim, false) {}

  void add(std::size_t index, const Scalar& c);
  void add_scaled(const SparseVector& v, const Scalar& c);
  /// Returns the accumulated vector and resets the buffer.
  SparseVector take();

 private:
  std::vector<Scalar> values_;
  std::vector<bool> used_;
  std::vector<std::size_t> touched_;
};

/// Linear map on row vectors: rows[i] is the image of basis vector i, so
/// applying A then B is the product A·B.
struct SparseMatrix {
  std::size_t cols = 0;
  std::vector<SparseVector> rows;

  std::size_t row_count() const { return rows.size(); }
  static SparseMatrix zero(std::size_t rows, std::size_t cols);
  static SparseMatrix identity(std::size_t n);

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

/// x·M
SparseVector apply(const SparseVector& x, const SparseMatrix& m);
/// A·B: apply A first, then B.
SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b);
/// a + c·b
SparseMatrix add_scaled(const SparseMatrix& a, const SparseMatrix& b, const Scalar& c);
bool is_zero(const SparseMatrix& m);

/// Incrementally maintained reduced row-echelon basis.  Every stored row has
/// a pivot column holding 1, and every other row is zero in that column.
/// Pivots must be invertible constants; an entry that is a non-constant
/// polynomial in al is never chosen, and if nothing else is available
/// std::domain_error is thrown.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  /// Reduces v against the basis; the result is zero iff v is in the span.
  SparseVector reduce(const SparseVector& v) const;
  /// Adds v if independent; returns true when the span grew.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  /// Rows keyed by pivot column.
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }
  /// Basis of {x : x·row = 0 for every row} viewed as linear equations,
  /// i.e. the null space of the stored equation system.
  std::vector<SparseVector> null_space() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseVector> rows_;
};

/// Basis of {x supported on `support` : x·M = 0 for every M in ops}.
std::vector<SparseVector> left_kernel(const std::vector<const SparseMatrix*>& ops,
                                      const std::vector<std::size_t>& support, std::size_t dim);

/// Solves c·B = x where B's rows are `basis`; nullopt when x is outside the span.
std::optional<std::vector<Scalar>> solve_left(const std::vector<SparseVector>& basis,
                                              const SparseVector& x);

std::size_t rank_of(const std::vector<SparseVector>& vectors, std::size_t dim);

}  // namespace kanrep
