#pragma once

// Sparse multivariate polynomials over a Field, and polynomials with
// coefficients in F^k.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conepit/exponent.hpp"
#include "conepit/field.hpp"
#include "conepit/matrix.hpp"

namespace conepit {

class MultiPoly {
 public:
  using TermMap = std::map<ExponentVector, Scalar>;

  MultiPoly(Field field, std::size_t arity) : field_(field), arity_(arity) {}

  static MultiPoly constant(Field field, std::size_t arity, const Scalar& c);
  static MultiPoly variable(Field field, std::size_t arity, std::size_t var);
  static MultiPoly monomial(Field field, const ExponentVector& e, const Scalar& c);

  const Field& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// Deg-lex increasing.
  const TermMap& terms() const noexcept { return terms_; }

  Scalar coeff(const ExponentVector& e) const;
  /// Adds c·x^e; drops the term if it cancels.
  void add_term(const ExponentVector& e, const Scalar& c);

  /// Total degree; 0 for the zero polynomial.
  std::uint64_t degree() const;
  /// Largest exponent of any single variable.
  std::uint32_t individual_degree() const;

  Scalar evaluate(std::span<const Scalar> point) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  MultiPoly pow(std::uint64_t exponent) const;
  MultiPoly operator-() const;

  /// ∂/∂x_var.
  MultiPoly derivative(std::size_t var) const;

  /// Substitutes images[i] for x_i; all images share one arity (the result's).
  MultiPoly compose(const std::vector<MultiPoly>& images) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// `3*x1^2*x3 + x2 - 1` style, highest deg-lex term first.
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& other) const;

  Field field_;
  std::size_t arity_;
  TermMap terms_;
};

/// Parses sums of `coeff*monomial` terms, e.g. `x1*x2 - 3/2*x3^2 + 5`.
MultiPoly parse_poly(std::string_view text, const Field& field, std::size_t arity);

/// ≺-maximum exponent in the support; throws ZeroPolynomial.
ExponentVector leading_monomial(const MultiPoly& p, DegLex order = {});

/// Dimension of the span of all iterated partial derivatives of p
/// (p itself included). 0 for p = 0.
std::size_t pd_space_dim(const MultiPoly& p);

class VectorPoly {
 public:
  using TermMap = std::map<ExponentVector, std::vector<Scalar>>;

  VectorPoly(Field field, std::size_t arity, std::size_t dim) : field_(field), arity_(arity), dim_(dim) {}

  const Field& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::vector<ExponentVector> support() const;
  std::uint64_t degree() const;

  /// Zero vector when e is outside the support.
  std::vector<Scalar> coeff(const ExponentVector& e) const;
  /// Adds v to the coefficient of x^e; drops the term if it becomes zero.
  void add_term(const ExponentVector& e, const std::vector<Scalar>& v);

  /// Rows indexed by `index` (in the given order), columns by [k].
  Matrix coefficient_matrix(const std::vector<ExponentVector>& index) const;
  /// The t-th coordinate polynomial.
  MultiPoly component(std::size_t t) const;

 private:
  Field field_;
  std::size_t arity_;
  std::size_t dim_;
  TermMap terms_;
};

/// Rank of the coefficient matrix, i.e. dim sp(f).
std::size_t coeff_rank(const VectorPoly& f);

}  // namespace conepit
