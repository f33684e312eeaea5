#pragma once

// Dense exact matrices over a Field and Gaussian elimination.

#include <cstddef>
#include <optional>
#include <vector>

#include "conepit/field.hpp"

namespace conepit {

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Rows must be non-ragged and share one field; throws RaggedInput / MixedFields.
  static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

EchelonForm rref(Matrix m);
std::size_t rank(Matrix m);

/// Basis of {v : M v = 0}; one vector per free column, with that free
/// column set to 1 and the other free columns 0, in increasing column order.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// Some x with M x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

/// Incremental independence test for a stream of vectors of fixed length.
/// Keeps a semi-echelon basis; insert() reports whether the vector was new.
class IncrementalBasis {
 public:
  IncrementalBasis(Field field, std::size_t dim) : field_(field), dim_(dim) {}

  /// Adds v to the basis if it is independent of what is already there.
  bool insert(std::vector<Scalar> v);
  /// True if v lies in the span of the inserted vectors.
  bool contains(std::vector<Scalar> v) const;
  std::size_t size() const noexcept { return basis_.size(); }

 private:
  void reduce(std::vector<Scalar>& v) const;

  Field field_;
  std::size_t dim_;
  std::vector<std::vector<Scalar>> basis_;  // each normalised: 1 at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace conepit
