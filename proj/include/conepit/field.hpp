#pragma once

// Exact scalars over a prime field F_p (p < 2^63) or the rationals.
//
// A Scalar carries its field so that arithmetic between elements of
// different fields is detected (MixedFields) instead of silently producing
// garbage. Prime-field elements are stored as canonical residues in [0, p);
// rationals are GMP fractions kept in lowest terms with positive denominator.

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace conepit {

class Scalar;

class Field {
 public:
  static constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

  /// The default field: F_p with p = 2^61 - 1.
  Field() : modulus_(kMersenne61) {}

  static Field rationals() { return Field(0); }
  /// Throws InvalidArgument unless p is a prime below 2^63.
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "p:<decimal prime>".
  static Field parse(std::string_view spec);

  bool is_rational() const noexcept { return modulus_ == 0; }
  bool is_prime() const noexcept { return modulus_ != 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  /// True if the field has more than n elements.
  bool size_exceeds(std::uint64_t n) const noexcept { return is_rational() || modulus_ > n; }
  /// Throws CharTooSmall unless the field has more than n elements.
  void require_size_exceeds(std::uint64_t n, std::string_view context) const;
  /// Throws CharTooSmall unless char(F) is 0 or exceeds n.
  void require_char_exceeds(std::uint64_t n, std::string_view context) const {
    require_size_exceeds(n, context);
  }

  std::string spec() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_mpz(const mpz_class& v) const;
  Scalar from_mpq(const mpq_class& v) const;
  /// Decimal integer or fraction "a/b"; reduced into the field.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}

  std::uint64_t modulus_;
};

bool is_prime_u64(std::uint64_t n);

class Scalar {
 public:
  /// Zero of the default prime field.
  Scalar() = default;

  const Field& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Throws ZeroInverse on zero.
  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  /// Structural: same field and same canonical value.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

  /// Canonical residue; prime fields only.
  std::uint64_t residue() const;
  /// Exact value; rationals only.
  const mpq_class& rational() const;
  /// Always true over F_p; true over Q iff the denominator is 1.
  bool is_integral() const;

 private:
  friend class Field;
  Scalar(Field field, std::uint64_t residue) : field_(field), value_(residue) {}
  Scalar(Field field, mpq_class q) : field_(field), value_(std::move(q)) {}

  void check_same_field(const Scalar& other) const;

  Field field_{};
  std::variant<std::uint64_t, mpq_class> value_{std::uint64_t{0}};
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  if (p == Field::kMersenne61) {
    std::uint64_t r = static_cast<std::uint64_t>(x & p) + static_cast<std::uint64_t>(x >> 61);
    r = (r & p) + (r >> 61);
    return r >= p ? r - p : r;
  }
  return static_cast<std::uint64_t>(x % p);
}

[[noreturn]] void throw_mixed_fields(const Field& a, const Field& b);

}  // namespace detail

inline void Scalar::check_same_field(const Scalar& other) const {
  if (field_.modulus() != other.field_.modulus()) detail::throw_mixed_fields(field_, other.field_);
}

inline bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

inline Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    const std::uint64_t p = field_.modulus();
    std::uint64_t s = *r + std::get<std::uint64_t>(rhs.value_);
    *r = s >= p ? s - p : s;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

inline Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    const std::uint64_t b = std::get<std::uint64_t>(rhs.value_);
    *r = *r >= b ? *r - b : *r + (field_.modulus() - b);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

inline Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = detail::mul_mod(*r, std::get<std::uint64_t>(rhs.value_), field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

/// a · result = 1; throws ZeroInverse for a = 0, MixedFields if a is not in f.
Scalar scalar_inverse(const Scalar& a, const Field& f);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace conepit
