#include "conepit/matrix.hpp"

#include "conepit/error.hpp"

namespace conepit {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) raise(ErrorKind::RaggedInput, "matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].field() == field)) detail::throw_mixed_fields(rows[r][c].field(), field);
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

EchelonForm rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
    const Scalar inv = m(lead_row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= factor * m(lead_row, j);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(Matrix m) {
  // Forward elimination only.
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  const EchelonForm ef = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = -ef.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) raise(ErrorKind::ArityMismatch, "right-hand side length differs from row count");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const EchelonForm ef = rref(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) x[ef.pivots[i]] = ef.reduced(i, m.cols());
  return x;
}

void IncrementalBasis::reduce(std::vector<Scalar>& v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar& coeff = v[pivots_[i]];
    if (coeff.is_zero()) continue;
    const Scalar factor = coeff;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!basis_[i][j].is_zero()) v[j] -= factor * basis_[i][j];
  }
}

bool IncrementalBasis::insert(std::vector<Scalar> v) {
  if (v.size() != dim_) raise(ErrorKind::ArityMismatch, "vector length differs from basis dimension");
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot].is_zero()) ++pivot;
  if (pivot == dim_) return false;
  const Scalar inv = v[pivot].inverse();
  for (auto& x : v) x *= inv;
  // Keep existing rows free of the new pivot so reduce() stays a single pass.
  for (auto& row : basis_) {
    if (row[pivot].is_zero()) continue;
    const Scalar factor = row[pivot];
    for (std::size_t j = 0; j < dim_; ++j) row[j] -= factor * v[j];
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool IncrementalBasis::contains(std::vector<Scalar> v) const {
  if (v.size() != dim_) raise(ErrorKind::ArityMismatch, "vector length differs from basis dimension");
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace conepit
