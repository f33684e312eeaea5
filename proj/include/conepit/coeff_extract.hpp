#pragma once

// Blackbox coefficient extraction by per-variable Vandermonde filtering.
//
// Stage i replaces x_i by α_j·x_i for the e_i + 1 nodes α_j = 0, 1, ..., e_i
// and combines the copies with the Vandermonde weights that select the
// x_i^{e_i} slice. After all stages the filtered polynomial is
//   coef_e(C)·x^e + (terms whose exponents strictly dominate e),
// so substituting x = t·1 and reading off t^{|e|} yields the coefficient.
// Coordinates with e_i = 0 use the single node {1} with weight 1.

#include <cstdint>
#include <vector>

#include "conepit/circuit.hpp"
#include "conepit/exponent.hpp"

namespace conepit {

/// The unique a with a·M = unit row `target`, M_{j,p} = nodes[j]^p.
/// Throws DuplicateNodes; InvalidArgument when target ≥ |nodes|.
std::vector<Scalar> vandermonde_row(const std::vector<Scalar>& nodes, std::size_t target);

/// The polynomial C^{(stage)}: the base oracle filtered on the first
/// `stage` coordinates of the target exponent.
class FilteredOracle {
 public:
  FilteredOracle(Oracle base, ExponentVector target, std::size_t stage);

  const Oracle& base() const noexcept { return base_; }
  const ExponentVector& target() const noexcept { return target_; }
  std::size_t stage() const noexcept { return stage_; }
  /// Nodes and weights used at coordinate i (i < stage).
  const std::vector<Scalar>& nodes(std::size_t i) const { return nodes_.at(i); }
  const std::vector<Scalar>& weights(std::size_t i) const { return weights_.at(i); }

  /// Base-oracle calls per evaluation: ∏_{i<stage} (e_i + 1).
  std::uint64_t calls_per_evaluation() const noexcept { return calls_per_eval_; }

  Scalar operator()(std::span<const Scalar> point) const;
  /// Oracle view of C^{(stage)} (same degree bound as the base).
  Oracle as_oracle() const;

 private:
  Oracle base_;
  ExponentVector target_;
  std::size_t stage_;
  std::vector<std::vector<Scalar>> nodes_;
  std::vector<std::vector<Scalar>> weights_;
  std::uint64_t calls_per_eval_ = 1;
};

struct Extraction {
  Scalar coefficient;
  std::uint64_t oracle_calls = 0;  // exactly cone_size(e)·(d+1)
};

/// Coefficient of x^e in the polynomial behind O.
/// Throws ArityMismatch; CharTooSmall unless |F| > max(d, e_i).
Extraction extract_coefficient_counted(const Oracle& o, const ExponentVector& e);
Scalar extract_coefficient(const Oracle& o, const ExponentVector& e);

}  // namespace conepit
