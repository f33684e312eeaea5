#include "conepit/univariate.hpp"

#include <algorithm>

#include "conepit/error.hpp"

namespace conepit {

UnivariatePoly::UnivariatePoly(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == field_)) detail::throw_mixed_fields(c.field(), field_);
  trim();
}

UnivariatePoly UnivariatePoly::monomial(Field field, const Scalar& c, std::size_t power) {
  std::vector<Scalar> coeffs(power + 1, field.zero());
  coeffs[power] = c;
  return UnivariatePoly(field, std::move(coeffs));
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UnivariatePoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : field_.zero();
}

Scalar UnivariatePoly::evaluate(const Scalar& at) const {
  Scalar acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& rhs) {
  if (!(field_ == rhs.field_)) detail::throw_mixed_fields(field_, rhs.field_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& rhs) {
  if (!(field_ == rhs.field_)) detail::throw_mixed_fields(field_, rhs.field_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (!(a.field_ == b.field_)) detail::throw_mixed_fields(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return UnivariatePoly(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePoly(a.field_, std::move(out));
}

UnivariatePoly UnivariatePoly::scaled(const Scalar& c) const {
  std::vector<Scalar> out = coeffs_;
  for (auto& x : out) x *= c;
  return UnivariatePoly(field_, std::move(out));
}

std::string UnivariatePoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = coeffs_[i].is_one();
    if (i == 0 || !unit) out += coeffs_[i].to_string();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Matrix evaluate_at(const PolyMatrix& m, const Scalar& at) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  Matrix out(at.field(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m[r][c].evaluate(at);
  return out;
}

std::size_t rank_over_ft(const PolyMatrix& m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  if (cols == 0) return 0;
  const Field field = m.front().front().field();
  long max_degree = 0;
  for (const auto& row : m) {
    if (row.size() != cols) raise(ErrorKind::RaggedInput, "polynomial matrix rows differ in length");
    for (const auto& entry : row) {
      if (!(entry.field() == field)) raise(ErrorKind::MixedFields, "matrix entries over different fields");
      max_degree = std::max(max_degree, entry.degree());
    }
  }
  const std::size_t full = std::min(rows, cols);
  const std::uint64_t nodes = static_cast<std::uint64_t>(full) * static_cast<std::uint64_t>(max_degree);
  field.require_size_exceeds(nodes, "rank_over_ft");
  std::size_t best = 0;
  for (std::uint64_t point = 0; point <= nodes; ++point) {
    best = std::max(best, rank(evaluate_at(m, field.from_int(static_cast<std::int64_t>(point)))));
    if (best == full) break;
  }
  return best;
}

}  // namespace conepit
