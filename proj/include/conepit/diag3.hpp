#pragma once

// Depth-3 diagonal circuits Σ c_i · (a_i0 + Σ_j a_ij x_j)^(d_i), their
// arity reduction onto the span of the linear parts, and the low-cone PIT
// built on it.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conepit/circuit.hpp"
#include "conepit/matrix.hpp"
#include "conepit/multipoly.hpp"
#include "conepit/pit.hpp"

namespace conepit {

struct DiagonalTerm {
  Scalar c;
  Scalar constant;
  std::vector<Scalar> coeffs;  // one per variable
  std::uint64_t d = 0;
};

class DiagonalCircuit {
 public:
  /// Throws ArityMismatch / MixedFields on malformed terms.
  DiagonalCircuit(Field field, std::size_t arity, std::vector<DiagonalTerm> terms);

  const Field& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<DiagonalTerm>& terms() const noexcept { return terms_; }
  std::uint64_t max_degree() const;
  /// Σ (n + 2) over the terms.
  std::size_t size() const noexcept { return terms_.size() * (arity_ + 2); }

  Scalar evaluate(std::span<const Scalar> point) const;
  Circuit to_circuit() const;
  /// Degree bound = max d_i.
  Oracle oracle() const;
  MultiPoly expand() const;

 private:
  Field field_;
  std::size_t arity_;
  std::vector<DiagonalTerm> terms_;
};

/// JSON: {"field", "arity", "terms": [{"c", "const", "coeffs": [...], "d"}]}.
DiagonalCircuit parse_diagonal(std::string_view text);
std::string serialize(const DiagonalCircuit& d);

struct FormRank {
  std::size_t rank = 0;
  std::vector<std::size_t> basis_rows;  // 0-based, first independent rows
};

/// Rank of the linear parts of the forms.
FormRank rank_of_forms(const DiagonalCircuit& d);

/// Coordinate selection x_j ↦ y_pos(j) on the pivot columns J of the basis
/// rows, x_j ↦ 0 elsewhere.
struct PsiMap {
  std::size_t source_arity = 0;
  std::vector<std::size_t> columns;               // J, increasing, 0-based
  std::vector<std::optional<std::size_t>> image;  // per source variable

  std::size_t target_arity() const noexcept { return columns.size(); }
  /// The circuit after substitution, over target_arity variables.
  DiagonalCircuit apply(const DiagonalCircuit& d) const;
};

/// Throws RankZero when all forms are constant.
PsiMap build_psi(const DiagonalCircuit& d);

/// Σ (d_i + 1).
std::uint64_t diag_cone_bound(const DiagonalCircuit& d);

/// low_cone_pit on the reduced circuit with k = Σ (d_i + 1). When every form
/// is constant the circuit is tested as a constant over one dummy variable.
/// Throws CharTooSmall unless char > max d_i.
PitVerdict diag_pit(const DiagonalCircuit& d);

/// The componentwise power (1 + a_t · x)^d for the rows a_t of `a` (k × n).
/// Throws CharTooSmall unless char > d.
VectorPoly diag_power_vectorpoly(const Matrix& a, std::uint64_t d);

}  // namespace conepit
