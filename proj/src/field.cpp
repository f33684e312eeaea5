#include "conepit/field.hpp"

#include <array>
#include <charconv>
#include <ostream>

#include "conepit/error.hpp"

namespace conepit {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = detail::mul_mod(result, base, p);
    base = detail::mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t mpz_mod_u64(const mpz_class& v, std::uint64_t p) {
  mpz_class m = v % mpz_class(std::to_string(p));
  if (sgn(m) < 0) m += mpz_class(std::to_string(p));
  return std::stoull(m.get_str());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_mpz(std::string_view s) {
  if (!is_decimal_integer(s)) raise(ErrorKind::ParseError, "not a decimal integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

namespace detail {
void throw_mixed_fields(const Field& a, const Field& b) {
  raise(ErrorKind::MixedFields, "operands in " + a.spec() + " and " + b.spec());
}
}  // namespace detail

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 63)) raise(ErrorKind::InvalidArgument, "prime modulus must be below 2^63");
  if (!is_prime_u64(p)) raise(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  spec = trim(spec);
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.size() > 2 && spec.substr(0, 2) == "p:") {
    std::string_view digits = spec.substr(2);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      raise(ErrorKind::ParseError, "bad prime in field spec '" + std::string(spec) + "'");
    return prime(p);
  }
  raise(ErrorKind::ParseError, "field spec must be 'q' or 'p:<prime>', got '" + std::string(spec) + "'");
}

void Field::require_size_exceeds(std::uint64_t n, std::string_view context) const {
  if (!size_exceeds(n))
    raise(ErrorKind::CharTooSmall,
          std::string(context) + ": field " + spec() + " needs more than " + std::to_string(n) + " elements");
}

std::string Field::spec() const { return is_rational() ? "q" : "p:" + std::to_string(modulus_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_rational()) return Scalar(*this, mpq_class(mpz_class(static_cast<long>(v))));
  std::uint64_t r;
  if (v >= 0) {
    r = static_cast<std::uint64_t>(v) % modulus_;
  } else {
    const std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
    r = (modulus_ - mag % modulus_) % modulus_;
  }
  return Scalar(*this, r);
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (is_rational()) return Scalar(*this, mpq_class(v));
  return Scalar(*this, mpz_mod_u64(v, modulus_));
}

Scalar Field::from_mpq(const mpq_class& v) const {
  if (is_rational()) {
    mpq_class q = v;
    q.canonicalize();
    return Scalar(*this, std::move(q));
  }
  return from_mpz(v.get_num()) / from_mpz(v.get_den());
}

Scalar Field::parse_scalar(std::string_view text) const {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_mpz(parse_mpz(text));
  const mpz_class num = parse_mpz(trim(text.substr(0, slash)));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && den_text.front() == '-') raise(ErrorKind::ParseError, "negative denominator");
  const mpz_class den = parse_mpz(den_text);
  if (sgn(den) == 0) raise(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  const Scalar d = from_mpz(den);
  if (d.is_zero()) raise(ErrorKind::ParseError, "denominator vanishes in " + spec());
  return from_mpz(num) / d;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
    if (*r != 0) *r = field_.modulus() - *r;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) raise(ErrorKind::ZeroInverse, "inverse of zero");
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) {
    // Fermat: a^(p-2) is the inverse for prime p.
    return Scalar(field_, pow_mod(*r, field_.modulus() - 2, field_.modulus()));
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  q.canonicalize();
  return Scalar(field_, std::move(q));
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_))
    return Scalar(field_, pow_mod(*r, exponent, field_.modulus()));
  Scalar result = field_.one();
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
  raise(ErrorKind::InvalidArgument, "residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  raise(ErrorKind::InvalidArgument, "rational() on a prime-field scalar");
}

bool Scalar::is_integral() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_den() == 1;
  return true;
}

Scalar scalar_inverse(const Scalar& a, const Field& f) {
  if (!(a.field() == f)) detail::throw_mixed_fields(a.field(), f);
  return a.inverse();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace conepit
