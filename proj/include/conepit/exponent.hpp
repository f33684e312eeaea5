#pragma once

// Exponent vectors, the deg-lex monomial order, cones and cone-closed sets.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conepit {

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t arity) : entries_(arity, 0) {}
  ExponentVector(std::initializer_list<std::uint32_t> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {}

  static ExponentVector unit(std::size_t arity, std::size_t var);

  std::size_t arity() const noexcept { return entries_.size(); }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
  std::uint32_t& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

  /// |e|_1
  std::uint64_t degree() const noexcept;
  /// Number of nonzero coordinates.
  std::size_t support_size() const noexcept;

  ExponentVector operator+(const ExponentVector& rhs) const;
  /// Requires rhs ⊑ *this.
  ExponentVector operator-(const ExponentVector& rhs) const;

  /// Appends one coordinate (arity grows by one).
  ExponentVector extended(std::uint32_t last) const;
  /// Drops the last coordinate.
  ExponentVector truncated() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  /// Deg-lex: total degree first, then lexicographic with x1 most significant.
  /// So 1 ≺ x2 ≺ x1 ≺ x2^2 ≺ x1*x2 ≺ x1^2 ≺ ...
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

  /// `x1^2*x3` style; `1` for the empty monomial.
  std::string to_string() const;
  /// `(2,0,1)` style.
  std::string to_tuple_string() const;

 private:
  std::vector<std::uint32_t> entries_;
};

/// Parses `x1^2*x3` (or `1`) at the given arity; throws ParseError.
ExponentVector parse_monomial(std::string_view text, std::size_t arity);

/// The ordering object; deg-lex is the only order used in this library.
struct DegLex {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return a < b; }
};

constexpr std::uint64_t kNoDegreeCap = std::numeric_limits<std::uint64_t>::max();

/// ∏ (e_i + 1), saturating at UINT64_MAX.
std::uint64_t cone_size(const ExponentVector& e);

/// e ⊑ f coordinatewise; throws ArityMismatch.
bool is_submonomial(const ExponentVector& e, const ExponentVector& f);

/// Closed under taking submonomials; throws ArityMismatch on mixed arities.
bool is_cone_closed(const std::vector<ExponentVector>& set);

/// All submonomials of e in deg-lex order.
std::vector<ExponentVector> cone_of(const ExponentVector& e);

/// Arity-n vectors with cone_size ≤ k and |e|_1 ≤ dcap, deg-lex increasing.
std::vector<ExponentVector> enumerate_low_cone(std::size_t n, std::uint64_t k, std::uint64_t dcap = kNoDegreeCap);

/// k^2 · (3n / log2 k)^(log2 k), the counting bound for low-cone monomials
/// (k^2 when k = 1). Exact integer arithmetic is used when k is a power of
/// two; otherwise long double.
long double low_cone_count_bound(std::size_t n, std::uint64_t k);
/// Exact test count ≤ bound, for any k ≥ 1.
bool within_low_cone_count_bound(std::uint64_t count, std::size_t n, std::uint64_t k);

}  // namespace conepit
