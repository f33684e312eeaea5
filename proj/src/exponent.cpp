#include "conepit/exponent.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <set>

#include <gmpxx.h>

#include "conepit/error.hpp"

namespace conepit {

ExponentVector ExponentVector::unit(std::size_t arity, std::size_t var) {
  ExponentVector e(arity);
  e.entries_.at(var) = 1;
  return e;
}

std::uint64_t ExponentVector::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto x : entries_) d += x;
  return d;
}

std::size_t ExponentVector::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](auto x) { return x != 0; }));
}

ExponentVector ExponentVector::operator+(const ExponentVector& rhs) const {
  if (arity() != rhs.arity()) raise(ErrorKind::ArityMismatch, "adding exponent vectors of different arity");
  ExponentVector out = *this;
  for (std::size_t i = 0; i < arity(); ++i) out.entries_[i] += rhs.entries_[i];
  return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& rhs) const {
  if (!is_submonomial(rhs, *this)) raise(ErrorKind::InvalidArgument, "subtracting a non-submonomial");
  ExponentVector out = *this;
  for (std::size_t i = 0; i < arity(); ++i) out.entries_[i] -= rhs.entries_[i];
  return out;
}

ExponentVector ExponentVector::extended(std::uint32_t last) const {
  ExponentVector out = *this;
  out.entries_.push_back(last);
  return out;
}

ExponentVector ExponentVector::truncated() const {
  ExponentVector out = *this;
  out.entries_.pop_back();
  return out;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.entries_ <=> b.entries_;
}

std::string ExponentVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (entries_[i] > 1) out += "^" + std::to_string(entries_[i]);
  }
  return out.empty() ? "1" : out;
}

std::string ExponentVector::to_tuple_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    raise(ErrorKind::ParseError, "bad number '" + std::string(s) + "' in monomial '" + std::string(whole) + "'");
  return v;
}

}  // namespace

ExponentVector parse_monomial(std::string_view text, std::size_t arity) {
  const std::string_view whole = text;
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t') compact += c;
  ExponentVector e(arity);
  if (compact == "1") return e;
  if (compact.empty()) raise(ErrorKind::ParseError, "empty monomial");
  std::string_view rest = compact;
  while (!rest.empty()) {
    const auto star = rest.find('*');
    std::string_view factor = rest.substr(0, star);
    rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star + 1);
    if (star != std::string_view::npos && rest.empty()) raise(ErrorKind::ParseError, "trailing '*' in monomial");
    if (factor.size() < 2 || factor.front() != 'x')
      raise(ErrorKind::ParseError, "bad factor '" + std::string(factor) + "' in monomial '" + std::string(whole) + "'");
    const auto caret = factor.find('^');
    const std::uint64_t var = parse_uint(factor.substr(1, caret == std::string_view::npos ? factor.npos : caret - 1), whole);
    const std::uint64_t power = caret == std::string_view::npos ? 1 : parse_uint(factor.substr(caret + 1), whole);
    if (var == 0 || var > arity)
      raise(ErrorKind::ParseError, "variable x" + std::to_string(var) + " outside arity " + std::to_string(arity));
    e[var - 1] += static_cast<std::uint32_t>(power);
  }
  return e;
}

std::uint64_t cone_size(const ExponentVector& e) {
  std::uint64_t size = 1;
  for (auto x : e.entries()) {
    const std::uint64_t f = std::uint64_t{x} + 1;
    if (size > std::numeric_limits<std::uint64_t>::max() / f) return std::numeric_limits<std::uint64_t>::max();
    size *= f;
  }
  return size;
}

bool is_submonomial(const ExponentVector& e, const ExponentVector& f) {
  if (e.arity() != f.arity()) raise(ErrorKind::ArityMismatch, "submonomial test across arities");
  for (std::size_t i = 0; i < e.arity(); ++i)
    if (e[i] > f[i]) return false;
  return true;
}

bool is_cone_closed(const std::vector<ExponentVector>& set) {
  if (set.empty()) return true;
  const std::size_t n = set.front().arity();
  for (const auto& e : set)
    if (e.arity() != n) raise(ErrorKind::ArityMismatch, "cone-closure test across arities");
  const std::set<ExponentVector> members(set.begin(), set.end());
  // Closure under dropping one unit from one coordinate implies closure under ⊑.
  for (const auto& e : members) {
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      ExponentVector lower = e;
      --lower[i];
      if (!members.contains(lower)) return false;
    }
  }
  return true;
}

std::vector<ExponentVector> cone_of(const ExponentVector& e) {
  std::vector<ExponentVector> out;
  ExponentVector cur(e.arity());
  // Odometer over the box [0, e].
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < e.arity() && cur[i] == e[i]) {
      cur[i] = 0;
      ++i;
    }
    if (i == e.arity()) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void low_cone_rec(std::size_t var, std::uint64_t product, std::uint64_t degree, std::uint64_t k, std::uint64_t dcap,
                  ExponentVector& cur, std::vector<ExponentVector>& out) {
  if (var == cur.arity()) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t x = 0;; ++x) {
    const std::uint64_t next = product * (std::uint64_t{x} + 1);
    if (next > k || degree + x > dcap) break;
    cur[var] = x;
    low_cone_rec(var + 1, next, degree + x, k, dcap, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<ExponentVector> enumerate_low_cone(std::size_t n, std::uint64_t k, std::uint64_t dcap) {
  if (n == 0 || k == 0) raise(ErrorKind::InvalidArgument, "enumerate_low_cone needs n >= 1 and k >= 1");
  std::vector<ExponentVector> out;
  ExponentVector cur(n);
  low_cone_rec(0, 1, 0, k, dcap, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

long double low_cone_count_bound(std::size_t n, std::uint64_t k) {
  const long double kk = static_cast<long double>(k);
  if (k <= 1) return kk * kk;
  const long double l = std::log2(kk);
  return kk * kk * std::pow(3.0L * static_cast<long double>(n) / l, l);
}

bool within_low_cone_count_bound(std::uint64_t count, std::size_t n, std::uint64_t k) {
  if (k <= 1) return count <= k * k;
  if (std::has_single_bit(k)) {
    // count · L^L ≤ k^2 · (3n)^L with L = log2 k, all integers.
    const unsigned long l = static_cast<unsigned long>(std::countr_zero(k));
    mpz_class lhs, rhs, base;
    mpz_ui_pow_ui(lhs.get_mpz_t(), l, l);
    lhs *= mpz_class(std::to_string(count));
    mpz_ui_pow_ui(rhs.get_mpz_t(), 3 * static_cast<unsigned long>(n), l);
    base = mpz_class(std::to_string(k));
    rhs *= base * base;
    return lhs <= rhs;
  }
  return static_cast<long double>(count) <= low_cone_count_bound(n, k);
}

}  // namespace conepit
