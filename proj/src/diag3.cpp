#include "conepit/diag3.hpp"

#include <algorithm>

#include <gmpxx.h>

#include "conepit/error.hpp"
#include "json_io.hpp"

namespace conepit {

using detail::json;

DiagonalCircuit::DiagonalCircuit(Field field, std::size_t arity, std::vector<DiagonalTerm> terms)
    : field_(field), arity_(arity), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.coeffs.size() != arity_) raise(ErrorKind::ArityMismatch, "linear form has the wrong number of coefficients");
    if (!(t.c.field() == field_)) detail::throw_mixed_fields(t.c.field(), field_);
    if (!(t.constant.field() == field_)) detail::throw_mixed_fields(t.constant.field(), field_);
    for (const auto& a : t.coeffs)
      if (!(a.field() == field_)) detail::throw_mixed_fields(a.field(), field_);
  }
}

std::uint64_t DiagonalCircuit::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.d);
  return d;
}

Scalar DiagonalCircuit::evaluate(std::span<const Scalar> point) const {
  if (point.size() != arity_) raise(ErrorKind::ArityMismatch, "evaluation point has wrong length");
  Scalar acc = field_.zero();
  for (const auto& t : terms_) {
    Scalar form = t.constant;
    for (std::size_t j = 0; j < arity_; ++j)
      if (!t.coeffs[j].is_zero()) form += t.coeffs[j] * point[j];
    acc += t.c * form.pow(t.d);
  }
  return acc;
}

Circuit DiagonalCircuit::to_circuit() const {
  CircuitBuilder b(field_, arity_);
  if (terms_.empty()) return std::move(b).build(b.constant(0));
  std::vector<std::size_t> inputs;
  for (std::size_t j = 0; j < arity_; ++j) inputs.push_back(b.input(j));
  const std::size_t one = b.constant(1);
  std::vector<std::size_t> powers;
  std::vector<Scalar> outer;
  for (const auto& t : terms_) {
    std::vector<std::size_t> children{one};
    std::vector<Scalar> weights{t.constant};
    for (std::size_t j = 0; j < arity_; ++j) {
      children.push_back(inputs[j]);
      weights.push_back(t.coeffs[j]);
    }
    powers.push_back(b.pow(b.add(std::move(children), std::move(weights)), t.d));
    outer.push_back(t.c);
  }
  const std::size_t out = b.add(std::move(powers), std::move(outer));
  return std::move(b).build(out);
}

Oracle DiagonalCircuit::oracle() const {
  return Oracle(field_, arity_, max_degree(), [self = *this](std::span<const Scalar> x) { return self.evaluate(x); });
}

MultiPoly DiagonalCircuit::expand() const {
  MultiPoly out(field_, arity_);
  for (const auto& t : terms_) {
    MultiPoly form = MultiPoly::constant(field_, arity_, t.constant);
    for (std::size_t j = 0; j < arity_; ++j)
      form += MultiPoly::variable(field_, arity_, j) * t.coeffs[j];
    out += form.pow(t.d) * t.c;
  }
  return out;
}

DiagonalCircuit parse_diagonal(std::string_view text) {
  const json doc = detail::parse_json_text(text);
  if (!doc.is_object()) raise(ErrorKind::ParseError, "diagonal circuit document must be a JSON object");
  const Field field = Field::parse(detail::require<std::string>(doc, "field", "diagonal circuit"));
  const auto arity = detail::require<std::size_t>(doc, "arity", "diagonal circuit");
  std::vector<DiagonalTerm> terms;
  const json& jt = detail::require_array(doc, "terms", "diagonal circuit");
  for (std::size_t i = 0; i < jt.size(); ++i) {
    const std::string where = "term #" + std::to_string(i);
    DiagonalTerm t;
    t.c = detail::scalar_field(jt[i], "c", field, where);
    t.constant = detail::scalar_field(jt[i], "const", field, where);
    for (const json& a : detail::require_array(jt[i], "coeffs", where))
      t.coeffs.push_back(detail::json_scalar(a, field, where));
    t.d = detail::require<std::uint64_t>(jt[i], "d", where);
    terms.push_back(std::move(t));
  }
  return DiagonalCircuit(field, arity, std::move(terms));
}

std::string serialize(const DiagonalCircuit& d) {
  json terms = json::array();
  for (const auto& t : d.terms()) {
    json coeffs = json::array();
    for (const auto& a : t.coeffs) coeffs.push_back(a.to_string());
    terms.push_back({{"c", t.c.to_string()}, {"const", t.constant.to_string()}, {"coeffs", coeffs}, {"d", t.d}});
  }
  json doc;
  doc["field"] = d.field().spec();
  doc["arity"] = d.arity();
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

FormRank rank_of_forms(const DiagonalCircuit& d) {
  FormRank out;
  IncrementalBasis span(d.field(), d.arity());
  for (std::size_t i = 0; i < d.terms().size(); ++i)
    if (span.insert(d.terms()[i].coeffs)) out.basis_rows.push_back(i);
  out.rank = out.basis_rows.size();
  return out;
}

PsiMap build_psi(const DiagonalCircuit& d) {
  const FormRank fr = rank_of_forms(d);
  if (fr.rank == 0) raise(ErrorKind::RankZero, "all linear forms are constant");
  Matrix rows(d.field(), fr.rank, d.arity());
  for (std::size_t r = 0; r < fr.rank; ++r)
    for (std::size_t j = 0; j < d.arity(); ++j) rows(r, j) = d.terms()[fr.basis_rows[r]].coeffs[j];
  PsiMap psi;
  psi.source_arity = d.arity();
  psi.columns = rref(std::move(rows)).pivots;
  psi.image.assign(d.arity(), std::nullopt);
  for (std::size_t pos = 0; pos < psi.columns.size(); ++pos) psi.image[psi.columns[pos]] = pos;
  return psi;
}

DiagonalCircuit PsiMap::apply(const DiagonalCircuit& d) const {
  if (d.arity() != source_arity) raise(ErrorKind::ArityMismatch, "map built for a different arity");
  std::vector<DiagonalTerm> terms;
  for (const auto& t : d.terms()) {
    DiagonalTerm u{t.c, t.constant, {}, t.d};
    for (auto j : columns) u.coeffs.push_back(t.coeffs[j]);
    terms.push_back(std::move(u));
  }
  return DiagonalCircuit(d.field(), target_arity(), std::move(terms));
}

std::uint64_t diag_cone_bound(const DiagonalCircuit& d) {
  std::uint64_t k = 0;
  for (const auto& t : d.terms()) k += t.d + 1;
  return std::max<std::uint64_t>(k, 1);
}

PitVerdict diag_pit(const DiagonalCircuit& d) {
  d.field().require_char_exceeds(d.max_degree(), "diagonal PIT");
  const std::uint64_t k = diag_cone_bound(d);
  if (rank_of_forms(d).rank == 0) {
    std::vector<DiagonalTerm> terms;
    for (const auto& t : d.terms()) terms.push_back({t.c, t.constant, {d.field().zero()}, t.d});
    return low_cone_pit(DiagonalCircuit(d.field(), 1, std::move(terms)).oracle(), k);
  }
  return low_cone_pit(build_psi(d).apply(d).oracle(), k);
}

namespace {

void vectors_up_to(std::vector<std::uint32_t>& prefix, std::size_t n, std::uint64_t budget,
                   std::vector<ExponentVector>& out) {
  if (prefix.size() == n) {
    out.emplace_back(prefix);
    return;
  }
  for (std::uint64_t x = 0; x <= budget; ++x) {
    prefix.push_back(static_cast<std::uint32_t>(x));
    vectors_up_to(prefix, n, budget - x, out);
    prefix.pop_back();
  }
}

}  // namespace

VectorPoly diag_power_vectorpoly(const Matrix& a, std::uint64_t d) {
  const Field& field = a.field();
  field.require_char_exceeds(d, "diagonal power");
  const std::size_t k = a.rows();
  const std::size_t n = a.cols();
  VectorPoly out(field, n, k);
  std::vector<ExponentVector> exps;
  std::vector<std::uint32_t> prefix;
  vectors_up_to(prefix, n, d, exps);
  mpz_class d_factorial;
  mpz_fac_ui(d_factorial.get_mpz_t(), d);
  for (const auto& e : exps) {
    mpz_class denom;
    mpz_fac_ui(denom.get_mpz_t(), d - e.degree());
    mpz_class f;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_fac_ui(f.get_mpz_t(), e[j]);
      denom *= f;
    }
    const Scalar multinomial = field.from_mpz(d_factorial / denom);
    std::vector<Scalar> v(k, multinomial);
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t j = 0; j < n; ++j)
        if (e[j] != 0) v[t] *= a(t, j).pow(e[j]);
    out.add_term(e, v);
  }
  return out;
}

}  // namespace conepit
