#include "conepit/multipoly.hpp"

#include <algorithm>

#include "conepit/error.hpp"

namespace conepit {

MultiPoly MultiPoly::constant(Field field, std::size_t arity, const Scalar& c) {
  MultiPoly p(field, arity);
  p.add_term(ExponentVector(arity), c);
  return p;
}

MultiPoly MultiPoly::variable(Field field, std::size_t arity, std::size_t var) {
  MultiPoly p(field, arity);
  p.add_term(ExponentVector::unit(arity, var), field.one());
  return p;
}

MultiPoly MultiPoly::monomial(Field field, const ExponentVector& e, const Scalar& c) {
  MultiPoly p(field, e.arity());
  p.add_term(e, c);
  return p;
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (!(field_ == other.field_)) detail::throw_mixed_fields(field_, other.field_);
  if (arity_ != other.arity_) raise(ErrorKind::ArityMismatch, "polynomials of different arity");
}

Scalar MultiPoly::coeff(const ExponentVector& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

void MultiPoly::add_term(const ExponentVector& e, const Scalar& c) {
  if (e.arity() != arity_) raise(ErrorKind::ArityMismatch, "term arity differs from polynomial arity");
  if (!(c.field() == field_)) detail::throw_mixed_fields(c.field(), field_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::uint64_t MultiPoly::degree() const {
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

std::uint32_t MultiPoly::individual_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_)
    for (auto x : e.entries()) d = std::max(d, x);
  return d;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != arity_) raise(ErrorKind::ArityMismatch, "evaluation point has wrong length");
  // Powers of each coordinate are cached up to the individual degree.
  const std::uint32_t top = individual_degree();
  std::vector<std::vector<Scalar>> powers(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    powers[i].reserve(top + 1);
    powers[i].push_back(field_.one());
    for (std::uint32_t j = 1; j <= top; ++j) powers[i].push_back(powers[i].back() * point[i]);
  }
  Scalar acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < arity_; ++i)
      if (e[i] != 0) term *= powers[i][e[i]];
    acc += term;
  }
  return acc;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (!(c.field() == field_)) detail::throw_mixed_fields(c.field(), field_);
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.field_, a.arity_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

MultiPoly MultiPoly::pow(std::uint64_t exponent) const {
  MultiPoly result = constant(field_, arity_, field_.one());
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= arity_) raise(ErrorKind::ArityMismatch, "derivative variable outside arity");
  MultiPoly out(field_, arity_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExponentVector lower = e;
    --lower[var];
    out.add_term(lower, c * field_.from_int(e[var]));
  }
  return out;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (images.size() != arity_) raise(ErrorKind::ArityMismatch, "compose needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().arity();
  for (const auto& img : images) {
    if (img.arity() != target) raise(ErrorKind::ArityMismatch, "compose images differ in arity");
    if (!(img.field() == field_)) raise(ErrorKind::FieldMismatch, "compose image over a different field");
  }
  MultiPoly out(field_, target);
  std::vector<std::vector<MultiPoly>> powers(arity_);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(field_, target, c);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(field_, target, field_.one()));
      while (cache.size() <= e[i]) cache.push_back(cache.back() * images[i]);
      term = term * cache[e[i]];
    }
    out += term;
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant_term = e.degree() == 0;
    const bool negative = field_.is_rational() && sgn(c.rational()) < 0;
    std::string coeff = (negative ? -c : c).to_string();
    if (!out.empty()) {
      out += negative ? " - " : " + ";
    } else if (negative) {
      out += "-";
    }
    if (constant_term) {
      out += coeff;
    } else if (coeff == "1") {
      out += e.to_string();
    } else {
      out += coeff + "*" + e.to_string();
    }
  }
  return out;
}

MultiPoly parse_poly(std::string_view text, const Field& field, std::size_t arity) {
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n') compact += c;
  if (compact.empty()) raise(ErrorKind::ParseError, "empty polynomial");
  MultiPoly out(field, arity);
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    while (pos < compact.size() && (compact[pos] == '+' || compact[pos] == '-')) {
      if (compact[pos] == '-') negative = !negative;
      ++pos;
    }
    std::size_t end = pos;
    while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
    const std::string_view term = std::string_view(compact).substr(pos, end - pos);
    if (term.empty()) raise(ErrorKind::ParseError, "empty term in polynomial '" + std::string(text) + "'");
    Scalar coeff = field.one();
    ExponentVector e(arity);
    if (term.front() == 'x') {
      e = parse_monomial(term, arity);
    } else {
      const auto star = term.find('*');
      coeff = field.parse_scalar(term.substr(0, star));
      if (star != std::string_view::npos) e = parse_monomial(term.substr(star + 1), arity);
    }
    out.add_term(e, negative ? -coeff : coeff);
    pos = end;
  }
  return out;
}

ExponentVector leading_monomial(const MultiPoly& p, DegLex) {
  if (p.is_zero()) raise(ErrorKind::ZeroPolynomial, "leading monomial of zero");
  return p.terms().rbegin()->first;
}

std::size_t pd_space_dim(const MultiPoly& p) {
  if (p.is_zero()) return 0;
  // Semi-echelon basis keyed by leading monomial; each element is monic.
  std::map<ExponentVector, MultiPoly> basis;
  std::vector<MultiPoly> pending{p};
  while (!pending.empty()) {
    MultiPoly q = std::move(pending.back());
    pending.pop_back();
    while (!q.is_zero()) {
      const ExponentVector lm = leading_monomial(q);
      const auto it = basis.find(lm);
      if (it == basis.end()) break;
      q -= it->second * q.coeff(lm);
    }
    if (q.is_zero()) continue;
    const ExponentVector lm = leading_monomial(q);
    q *= q.coeff(lm).inverse();
    for (std::size_t v = 0; v < q.arity(); ++v) {
      MultiPoly d = q.derivative(v);
      if (!d.is_zero()) pending.push_back(std::move(d));
    }
    basis.emplace(lm, std::move(q));
  }
  return basis.size();
}

std::vector<ExponentVector> VectorPoly::support() const {
  std::vector<ExponentVector> out;
  out.reserve(terms_.size());
  for (const auto& [e, v] : terms_) out.push_back(e);
  return out;
}

std::uint64_t VectorPoly::degree() const {
  std::uint64_t d = 0;
  for (const auto& [e, v] : terms_) d = std::max(d, e.degree());
  return d;
}

std::vector<Scalar> VectorPoly::coeff(const ExponentVector& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? std::vector<Scalar>(dim_, field_.zero()) : it->second;
}

void VectorPoly::add_term(const ExponentVector& e, const std::vector<Scalar>& v) {
  if (e.arity() != arity_) raise(ErrorKind::ArityMismatch, "term arity differs from polynomial arity");
  if (v.size() != dim_) raise(ErrorKind::ArityMismatch, "coefficient vector has wrong length");
  for (const auto& x : v)
    if (!(x.field() == field_)) detail::throw_mixed_fields(x.field(), field_);
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted)
    for (std::size_t i = 0; i < dim_; ++i) it->second[i] += v[i];
  if (std::all_of(it->second.begin(), it->second.end(), [](const Scalar& s) { return s.is_zero(); }))
    terms_.erase(it);
}

Matrix VectorPoly::coefficient_matrix(const std::vector<ExponentVector>& index) const {
  Matrix m(field_, index.size(), dim_);
  for (std::size_t r = 0; r < index.size(); ++r) {
    const auto it = terms_.find(index[r]);
    if (it == terms_.end()) continue;
    for (std::size_t c = 0; c < dim_; ++c) m(r, c) = it->second[c];
  }
  return m;
}

MultiPoly VectorPoly::component(std::size_t t) const {
  if (t >= dim_) raise(ErrorKind::ArityMismatch, "component index outside dimension");
  MultiPoly out(field_, arity_);
  for (const auto& [e, v] : terms_) out.add_term(e, v[t]);
  return out;
}

std::size_t coeff_rank(const VectorPoly& f) {
  if (f.is_zero()) return 0;
  return rank(f.coefficient_matrix(f.support()));
}

}  // namespace conepit
