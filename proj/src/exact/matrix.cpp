#include "helixkit/exact/matrix.hpp"

#include <string>

#include "helixkit/error.hpp"

namespace helixkit {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw Error(Errc::ColumnMismatch, "matrix entry count does not match shape");
}

RationalMatrix RationalMatrix::from_rows(std::size_t cols, const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(0, cols);
  std::vector<Rational> buf(cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(Errc::ColumnMismatch, "row width does not match matrix");
    for (std::size_t c = 0; c < cols; ++c) buf[c] = Rational(r[c]);
    m.append_row(buf);
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw Error(Errc::ColumnMismatch, "row width does not match matrix");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

EchelonForm rref(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Rational>> a(rows);
  for (std::size_t r = 0; r < rows; ++r) a[r].assign(m.row(r).begin(), m.row(r).end());

  EchelonForm out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t best = rows;
    BigInt best_abs;
    for (std::size_t r = lead; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      BigInt v = abs(a[r][c].num());
      if (best == rows || v > best_abs) {
        best = r;
        best_abs = v;
      }
    }
    if (best == rows) continue;
    std::swap(a[lead], a[best]);
    Rational inv = a[lead][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[lead][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!a[lead][k].is_zero()) a[r][k] -= f * a[lead][k];
    }
    out.pivot_cols.push_back(c);
    ++lead;
  }

  out.reduced = RationalMatrix(0, cols);
  for (std::size_t r = 0; r < lead; ++r) out.reduced.append_row(a[r]);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank(); }

RationalMatrix matrix_kernel(const RationalMatrix& m) {
  const std::size_t cols = m.cols();
  EchelonForm e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  RationalMatrix basis(0, cols);
  std::vector<Rational> v(cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[f] = Rational(1);
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, f);
    basis.append_row(v);
  }
  return basis;
}

RationalMatrix vstack(std::span<const RationalMatrix> blocks, std::size_t cols) {
  RationalMatrix out(0, cols);
  for (const auto& b : blocks) {
    if (b.cols() != cols)
      throw Error(Errc::ColumnMismatch, "basis has " + std::to_string(b.cols()) +
                                            " columns, expected " + std::to_string(cols));
    for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  }
  return out;
}

std::size_t subspace_sum_dim(std::span<const RationalMatrix> bases, std::size_t ambient_dim) {
  return rank(vstack(bases, ambient_dim));
}

RationalMatrix annihilator(const RationalMatrix& m, std::size_t ambient_dim) {
  if (m.cols() != ambient_dim)
    throw Error(Errc::ColumnMismatch, "annihilator: matrix width differs from ambient dimension");
  // phi(v) = sum phi_k v_k, so the annihilator is the kernel of m itself
  return matrix_kernel(m);
}

bool same_row_space(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.cols() != y.cols()) return false;
  std::size_t rx = rank(x);
  std::size_t ry = rank(y);
  if (rx != ry) return false;
  std::vector<RationalMatrix> both{x, y};
  return subspace_sum_dim(both, x.cols()) == rx;
}

std::vector<Rational> mat_vec(const RationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw Error(Errc::ColumnMismatch, "mat_vec width mismatch");
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

namespace {

// row -= f * pivot, both sorted
SparseRow axpy(const SparseRow& row, const Rational& f, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(f * pivot[j].second));
      ++j;
    } else {
      Rational v = row[i].second - f * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      Rational inv = row.front().second.inverse();
      for (auto& [c, v] : row) v *= inv;
      std::size_t lead = row.front().first;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    Rational f = row.front().second;
    row = axpy(row, f, it->second);
  }
  return false;
}

}  // namespace helixkit
