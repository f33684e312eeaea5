#pragma once

// Dense univariate polynomials. Used both for the shift variable t of the
// cone-basis machinery and for the univariate tuples of hitting-set
// generators.

#include <cstddef>
#include <string>
#include <vector>

#include "conepit/field.hpp"
#include "conepit/matrix.hpp"

namespace conepit {

class UnivariatePoly {
 public:
  explicit UnivariatePoly(Field field) : field_(field) {}
  /// Trailing zeros are trimmed; all coefficients must lie in `field`.
  UnivariatePoly(Field field, std::vector<Scalar> coeffs);

  static UnivariatePoly monomial(Field field, const Scalar& c, std::size_t power);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar coeff(std::size_t power) const;

  Scalar evaluate(const Scalar& at) const;

  UnivariatePoly& operator+=(const UnivariatePoly& rhs);
  UnivariatePoly& operator-=(const UnivariatePoly& rhs);
  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  UnivariatePoly scaled(const Scalar& c) const;

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  Field field_;
  std::vector<Scalar> coeffs_;
};

using PolyMatrix = std::vector<std::vector<UnivariatePoly>>;

/// Rank over the fraction field F(t). Evaluates t at 0, 1, ..., D with
/// D = min(rows, cols) * (max entry degree) and returns the largest rank
/// seen; a nonzero r x r minor has degree at most D, so it cannot vanish at
/// all D + 1 points. Throws MixedFields / RaggedInput / CharTooSmall.
std::size_t rank_over_ft(const PolyMatrix& m);

/// The matrix with t replaced by `at`.
Matrix evaluate_at(const PolyMatrix& m, const Scalar& at);

}  // namespace conepit
