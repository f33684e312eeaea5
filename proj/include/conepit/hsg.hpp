#pragma once

// Hardness-from-hitting-set kit: annihilators of univariate tuples, greedy
// combinatorial designs, design-based substitution, Fischer's rewriting of
// products as sums of powers, and the blockwise Kronecker map.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conepit/circuit.hpp"
#include "conepit/multipoly.hpp"
#include "conepit/univariate.hpp"

namespace conepit {

struct HsgTuple {
  Field field;
  std::vector<UnivariatePoly> polys;

  std::size_t arity() const noexcept { return polys.size(); }
  /// Max degree of the entries (0 if all constant).
  std::uint64_t degree() const;
};

/// JSON: {"field": "...", "degree": d, "polys": [["c0","c1",...], ...]}.
HsgTuple parse_hsg(std::string_view text);
std::string serialize(const HsgTuple& h);

/// Smallest δ with δ^(n−1) > d·n. Requires n ≥ 2.
std::uint64_t annihilator_delta(std::size_t n, std::uint64_t d);

struct Annihilator {
  MultiPoly g;              // final annihilator, total degree δ·n
  MultiPoly kernel;         // the kernel polynomial before degree padding
  ExponentVector padding;   // g = x^padding · kernel
  std::uint64_t delta = 0;
};

/// Nonzero g with g(f_1(y), ..., f_n(y)) = 0, individual degree < 2δ and
/// total degree exactly δn. Over Q the coefficients are coprime integers.
/// Throws ArityTooSmall (n < 2), BadParameters (d = 0), ValidationError
/// (a zero entry).
Annihilator build_annihilator(const HsgTuple& f);

struct DesignFamily {
  std::size_t l = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::vector<std::size_t>> subsets;  // 0-based, each sorted
};

/// Enumeration guard for greedy_design.
constexpr std::uint64_t kDesignEnumerationLimit = 10'000'000;

/// Scans the n-subsets of [l] lexicographically and keeps each one meeting
/// every kept subset in at most d points. Requires l > n > d ≥ 1
/// (BadParameters); C(l, n) ≤ kDesignEnumerationLimit (TooLarge).
DesignFamily greedy_design(std::size_t l, std::size_t n, std::size_t d);

enum class DesignCheck { Pairwise, SubsetIndex };

/// Both design clauses: every member has n distinct elements of [l] and any
/// two distinct members share at most d. Pairwise compares every pair of
/// members; SubsetIndex checks that no (d+1)-subset lies in two members.
bool verify_design(const DesignFamily& f, DesignCheck method = DesignCheck::Pairwise);

/// Lines of space-separated 1-based indices.
std::string render_design(const DesignFamily& f);

/// x_i ↦ q(y_{S_i}). The result has arity l. Throws DesignTooSmall,
/// ArityMismatch.
Circuit hard_map_substitution(const Circuit& c, const MultiPoly& q, const DesignFamily& design);

/// Σ_i ∏_j g_ij as Σ c·h^r, with 2^(r−1) powers per product. Throws
/// EmptyInput, RaggedInput, CharTooSmall (char ≤ r).
std::vector<std::pair<Scalar, MultiPoly>> fischer_rewrite(const std::vector<std::vector<MultiPoly>>& terms);

/// Block j's i-th variable (1-based i ≤ β) ↦ y_j^(2^i). Arity n becomes
/// ⌈n/β⌉; a short last block is padded.
Circuit local_kronecker(const Circuit& c, std::size_t beta);

/// Image of a monomial under local_kronecker.
ExponentVector kronecker_image(const ExponentVector& e, std::size_t beta);

}  // namespace conepit
