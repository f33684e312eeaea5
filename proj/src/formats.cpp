#include "conepit/formats.hpp"

#include "conepit/error.hpp"
#include "json_io.hpp"

namespace conepit {

using detail::json;

namespace {

ExponentVector json_exponent(const json& v, std::size_t arity, const std::string& where) {
  if (v.is_string()) return parse_monomial(v.get<std::string>(), arity);
  if (!v.is_array()) raise(ErrorKind::ParseError, where + ": monomial must be a string or an exponent array");
  std::vector<std::uint32_t> entries;
  for (const json& x : v) {
    if (!x.is_number_unsigned()) raise(ErrorKind::ParseError, where + ": exponents must be naturals");
    entries.push_back(x.get<std::uint32_t>());
  }
  if (entries.size() != arity)
    raise(ErrorKind::ArityMismatch, where + ": exponent array has length " + std::to_string(entries.size()) +
                                        ", expected " + std::to_string(arity));
  return ExponentVector(std::move(entries));
}

}  // namespace

std::vector<ExponentVector> parse_exponent_set(std::string_view text) {
  const json doc = detail::parse_json_text(text);
  if (!doc.is_object()) raise(ErrorKind::ParseError, "set document must be a JSON object");
  const json& items = detail::require_array(doc, "set", "set");
  std::size_t arity;
  if (doc.contains("arity")) {
    arity = detail::require<std::size_t>(doc, "arity", "set");
  } else if (!items.empty() && items.front().is_array()) {
    arity = items.front().size();
  } else {
    raise(ErrorKind::ParseError, "set: 'arity' is required");
  }
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    out.push_back(json_exponent(items[i], arity, "set element #" + std::to_string(i)));
  return out;
}

std::string serialize_exponent_set(const std::vector<ExponentVector>& set) {
  json items = json::array();
  for (const auto& e : set) items.push_back(e.entries());
  json doc;
  doc["arity"] = set.empty() ? 0 : set.front().arity();
  doc["set"] = std::move(items);
  return doc.dump() + "\n";
}

VectorPoly parse_vectorpoly(std::string_view text) {
  const json doc = detail::parse_json_text(text);
  if (!doc.is_object()) raise(ErrorKind::ParseError, "vectorpoly document must be a JSON object");
  const Field field = Field::parse(detail::require<std::string>(doc, "field", "vectorpoly"));
  const auto arity = detail::require<std::size_t>(doc, "arity", "vectorpoly");
  const auto dim = detail::require<std::size_t>(doc, "dim", "vectorpoly");
  VectorPoly out(field, arity, dim);
  const json& terms = detail::require_array(doc, "terms", "vectorpoly");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "term #" + std::to_string(i);
    if (!terms[i].is_object() || !terms[i].contains("monomial")) raise(ErrorKind::ParseError, where + ": missing 'monomial'");
    const ExponentVector e = json_exponent(terms[i].at("monomial"), arity, where);
    std::vector<Scalar> v;
    for (const json& c : detail::require_array(terms[i], "coeffs", where)) v.push_back(detail::json_scalar(c, field, where));
    if (v.size() != dim) raise(ErrorKind::ArityMismatch, where + ": coefficient vector length differs from 'dim'");
    out.add_term(e, v);
  }
  return out;
}

std::string serialize(const VectorPoly& f) {
  json terms = json::array();
  for (const auto& [e, v] : f.terms()) {
    json coeffs = json::array();
    for (const auto& c : v) coeffs.push_back(c.to_string());
    terms.push_back({{"monomial", e.entries()}, {"coeffs", coeffs}});
  }
  json doc;
  doc["field"] = f.field().spec();
  doc["arity"] = f.arity();
  doc["dim"] = f.dim();
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

std::vector<std::vector<MultiPoly>> parse_products(std::string_view text) {
  const json doc = detail::parse_json_text(text);
  if (!doc.is_object()) raise(ErrorKind::ParseError, "products document must be a JSON object");
  const Field field = Field::parse(detail::require<std::string>(doc, "field", "products"));
  const auto arity = detail::require<std::size_t>(doc, "arity", "products");
  std::vector<std::vector<MultiPoly>> out;
  const json& terms = detail::require_array(doc, "terms", "products");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!terms[i].is_array()) raise(ErrorKind::ParseError, "product #" + std::to_string(i) + " must be an array");
    std::vector<MultiPoly> factors;
    for (const json& g : terms[i]) {
      if (!g.is_string()) raise(ErrorKind::ParseError, "factors must be polynomial strings");
      factors.push_back(parse_poly(g.get<std::string>(), field, arity));
    }
    out.push_back(std::move(factors));
  }
  return out;
}

MultiPoly parse_poly_document(std::string_view text) {
  const json doc = detail::parse_json_text(text);
  if (!doc.is_object()) raise(ErrorKind::ParseError, "poly document must be a JSON object");
  const Field field = Field::parse(detail::require<std::string>(doc, "field", "poly"));
  const auto arity = detail::require<std::size_t>(doc, "arity", "poly");
  return parse_poly(detail::require<std::string>(doc, "poly", "poly"), field, arity);
}

std::string serialize_poly_document(const MultiPoly& p) {
  json doc;
  doc["field"] = p.field().spec();
  doc["arity"] = p.arity();
  doc["poly"] = p.to_string();
  return doc.dump() + "\n";
}

std::string render_set(const std::vector<ExponentVector>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ',';
    out += set[i].to_tuple_string();
  }
  return out + "}";
}

}  // namespace conepit
