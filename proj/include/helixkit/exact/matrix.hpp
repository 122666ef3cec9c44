#ifndef HELIXKIT_EXACT_MATRIX_HPP
#define HELIXKIT_EXACT_MATRIX_HPP

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "helixkit/exact/rational.hpp"

namespace helixkit {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Convenience for literals in tests and fixtures.
  static RationalMatrix from_rows(std::size_t cols, const std::vector<std::vector<long>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Rational>& entries() const { return entries_; }

  void append_row(std::span<const Rational> values);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct EchelonForm {
  RationalMatrix reduced;             // nonzero rows only, pivots normalised to 1
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Exact reduced row echelon form; pivot = row with largest |numerator| in the column.
EchelonForm rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Rows form a basis of {v : M v^T = 0}; (cols - rank) x cols.
RationalMatrix matrix_kernel(const RationalMatrix& m);

/// Vertical concatenation; throws ColumnMismatch on width disagreement.
RationalMatrix vstack(std::span<const RationalMatrix> blocks, std::size_t cols);

/// dim of the sum of the row spaces. Throws ColumnMismatch.
std::size_t subspace_sum_dim(std::span<const RationalMatrix> bases, std::size_t ambient_dim);

/// Basis of the annihilator of the row space of m under the standard dual pairing.
RationalMatrix annihilator(const RationalMatrix& m, std::size_t ambient_dim);

bool same_row_space(const RationalMatrix& x, const RationalMatrix& y);

std::vector<Rational> mat_vec(const RationalMatrix& m, std::span<const Rational> v);

/// Sparse vector as (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental echelon basis over sparse rows; used for large stacked spans
/// whose generators are very sparse.
class SparseEchelon {
public:
  explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

  /// Returns true when the row enlarged the span.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> pivots_;  // leading column -> row with leading coefficient 1
};

}  // namespace helixkit

#endif  // HELIXKIT_EXACT_MATRIX_HPP
