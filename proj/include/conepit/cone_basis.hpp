#pragma once

// Weight assignments, least bases, basis isolation, the cone-closed set
// recursion, transfer matrices and the weighted shift x ↦ x + t^w.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conepit/exponent.hpp"
#include "conepit/matrix.hpp"
#include "conepit/multipoly.hpp"
#include "conepit/univariate.hpp"

namespace conepit {

struct WeightAssignment {
  std::vector<std::uint64_t> w;

  std::size_t arity() const noexcept { return w.size(); }
  /// ⟨e, w⟩; throws ArityMismatch, Overflow.
  std::uint64_t weight(const ExponentVector& e) const;

  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

/// Comma-separated naturals, e.g. `1,3,9`. Throws ParseError.
WeightAssignment parse_weights(std::string_view text);

/// w_i = (d+1)^(i-1). Throws Overflow.
WeightAssignment kronecker_weights(std::size_t n, std::uint64_t d);

/// Greedy basis of sp(f): support scanned by increasing weight, ties broken
/// deg-lex. Throws ZeroPolynomial, ArityMismatch.
std::vector<ExponentVector> least_basis(const VectorPoly& f, const WeightAssignment& w);

/// least_basis under the zero weight, i.e. the deg-lex greedy basis.
std::vector<ExponentVector> greedy_basis(const VectorPoly& f);

struct BasisReport {
  std::vector<ExponentVector> basis;   // non-decreasing weight
  bool isolating = false;
  std::string reason;                  // why isolation fails; empty otherwise
  /// For each non-basis monomial m: c with coef(m) = Σ c_j coef(basis_j),
  /// c_j = 0 unless w(basis_j) < w(m).
  std::map<ExponentVector, std::vector<Scalar>> certificate;
};

BasisReport is_basis_isolating(const VectorPoly& f, const WeightAssignment& w);

/// The cone-closed set of the same size obtained by projecting off the last
/// coordinate and recursing on preimage-multiplicity classes. Result in
/// deg-lex order. Throws EmptyInput, ArityMismatch.
std::vector<ExponentVector> find_cone_closed(const std::vector<ExponentVector>& b, std::size_t n);

/// T_{a,b} = ∏ C(b_i, a_i), rows A and columns B both deg-lex sorted.
Matrix transfer_submatrix(const std::vector<ExponentVector>& a, const std::vector<ExponentVector>& b,
                          const Field& field = Field::rationals());

/// f(x + t^w) as a polynomial in x with coefficient vectors over F[t].
class ShiftedVectorPoly {
 public:
  using TermMap = std::map<ExponentVector, std::vector<UnivariatePoly>>;

  ShiftedVectorPoly(Field field, std::size_t arity, std::size_t dim)
      : field_(field), arity_(arity), dim_(dim) {}

  const Field& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t dim() const noexcept { return dim_; }
  const TermMap& terms() const noexcept { return terms_; }
  /// Zero vector when a is absent.
  std::vector<UnivariatePoly> coeff(const ExponentVector& a) const;
  /// Rows indexed by `index`, columns by [k].
  PolyMatrix rows(const std::vector<ExponentVector>& index) const;

  void add_term(const ExponentVector& a, std::size_t component, const UnivariatePoly& p);

 private:
  Field field_;
  std::size_t arity_;
  std::size_t dim_;
  TermMap terms_;
};

/// coef_a = Σ_{b ⊒ a} C(b, a) · t^{w(b) − w(a)} · coef_b(f).
ShiftedVectorPoly shift_by_weight(const VectorPoly& f, const WeightAssignment& w);

struct ShiftBasis {
  std::vector<ExponentVector> least;  // least basis before the shift
  std::vector<ExponentVector> cone;   // cone-closed set A
  std::size_t rank = 0;               // rank of the A-rows over F(t)
};

/// Requires w isolating for f (else NotIsolating). Verifies that the
/// A-rows of the shifted coefficient matrix have full rank over F(t);
/// throws VerificationFailed otherwise.
ShiftBasis cone_closed_basis_after_shift(const VectorPoly& f, const WeightAssignment& w);

}  // namespace conepit
