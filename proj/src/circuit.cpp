#include "conepit/circuit.hpp"

#include <algorithm>
#include <optional>

#include "conepit/error.hpp"
#include "json_io.hpp"

namespace conepit {

using nlohmann::json;

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::Input: return "input";
    case GateKind::Const: return "const";
    case GateKind::Add: return "add";
    case GateKind::Mul: return "mul";
    case GateKind::Pow: return "pow";
  }
  return "?";
}

Circuit::Circuit(Field field, std::size_t arity, std::vector<Gate> gates, std::size_t output)
    : field_(field), arity_(arity), gates_(std::move(gates)), output_(output) {
  if (gates_.empty()) raise(ErrorKind::ValidationError, "circuit has no gates");
  if (output_ >= gates_.size()) raise(ErrorKind::ValidationError, "output gate out of range");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    const std::string where = "gate id " + std::to_string(g.id);
    if (i > 0 && g.id <= gates_[i - 1].id) raise(ErrorKind::ValidationError, where + ": ids must strictly increase");
    for (std::size_t c : g.children)
      if (c >= i) raise(ErrorKind::ValidationError, where + ": child does not precede its parent");
    switch (g.kind) {
      case GateKind::Input:
        if (g.var >= arity_) raise(ErrorKind::ValidationError, where + ": variable index outside arity");
        if (!g.children.empty()) raise(ErrorKind::ValidationError, where + ": input gate with children");
        break;
      case GateKind::Const:
        if (!(g.value.field() == field_)) raise(ErrorKind::ValidationError, where + ": constant over another field");
        if (!g.children.empty()) raise(ErrorKind::ValidationError, where + ": const gate with children");
        break;
      case GateKind::Add:
        if (g.weights.size() != g.children.size())
          raise(ErrorKind::ValidationError, where + ": weights and children differ in length");
        for (const auto& w : g.weights)
          if (!(w.field() == field_)) raise(ErrorKind::ValidationError, where + ": weight over another field");
        break;
      case GateKind::Mul:
        break;
      case GateKind::Pow:
        if (g.children.size() != 1) raise(ErrorKind::ValidationError, where + ": pow gate needs exactly one child");
        break;
    }
  }
}

std::size_t Circuit::size() const noexcept {
  std::size_t edges = 0;
  for (const auto& g : gates_) edges += g.children.size();
  return gates_.size() + edges;
}

std::size_t CircuitBuilder::push(Gate g) {
  g.id = static_cast<std::int64_t>(gates_.size());
  gates_.push_back(std::move(g));
  return gates_.size() - 1;
}

std::size_t CircuitBuilder::input(std::size_t var) {
  Gate g;
  g.kind = GateKind::Input;
  g.var = var;
  return push(std::move(g));
}

std::size_t CircuitBuilder::constant(const Scalar& value) {
  Gate g;
  g.kind = GateKind::Const;
  g.value = value;
  return push(std::move(g));
}

std::size_t CircuitBuilder::add(std::vector<std::size_t> children) {
  std::vector<Scalar> weights(children.size(), field_.one());
  return add(std::move(children), std::move(weights));
}

std::size_t CircuitBuilder::add(std::vector<std::size_t> children, std::vector<Scalar> weights) {
  Gate g;
  g.kind = GateKind::Add;
  g.children = std::move(children);
  g.weights = std::move(weights);
  return push(std::move(g));
}

std::size_t CircuitBuilder::mul(std::vector<std::size_t> children) {
  Gate g;
  g.kind = GateKind::Mul;
  g.children = std::move(children);
  return push(std::move(g));
}

std::size_t CircuitBuilder::pow(std::size_t child, std::uint64_t exponent) {
  Gate g;
  g.kind = GateKind::Pow;
  g.children = {child};
  g.exponent = exponent;
  return push(std::move(g));
}

std::size_t CircuitBuilder::poly(const MultiPoly& p, std::span<const std::size_t> var_gates) {
  if (var_gates.size() != p.arity()) raise(ErrorKind::ArityMismatch, "one gate per polynomial variable required");
  if (!(p.field() == field_)) raise(ErrorKind::FieldMismatch, "polynomial over a different field");
  if (p.is_zero()) return constant(field_.zero());
  std::vector<std::size_t> monomials;
  std::vector<Scalar> weights;
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::size_t> factors;
    for (std::size_t i = 0; i < e.arity(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? var_gates[i] : pow(var_gates[i], e[i]));
    }
    if (factors.empty()) {
      monomials.push_back(constant(field_.one()));
    } else if (factors.size() == 1) {
      monomials.push_back(factors.front());
    } else {
      monomials.push_back(mul(std::move(factors)));
    }
    weights.push_back(c);
  }
  return add(std::move(monomials), std::move(weights));
}

Circuit CircuitBuilder::build(std::size_t output) && {
  return Circuit(field_, arity_, std::move(gates_), output);
}

Circuit CircuitBuilder::build(std::size_t output) const& { return Circuit(field_, arity_, gates_, output); }

Circuit circuit_from_poly(const MultiPoly& p) {
  CircuitBuilder b(p.field(), p.arity());
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < p.arity(); ++i) vars.push_back(b.input(i));
  const std::size_t out = b.poly(p, vars);
  return std::move(b).build(out);
}

Scalar evaluate(const Circuit& c, std::span<const Scalar> point) {
  if (point.size() != c.arity()) raise(ErrorKind::ArityMismatch, "evaluation point has wrong length");
  const Field& f = c.field();
  for (const auto& x : point)
    if (!(x.field() == f)) detail::throw_mixed_fields(x.field(), f);
  std::vector<Scalar> values;
  values.reserve(c.gates().size());
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Input: values.push_back(point[g.var]); break;
      case GateKind::Const: values.push_back(g.value); break;
      case GateKind::Add: {
        Scalar acc = f.zero();
        for (std::size_t i = 0; i < g.children.size(); ++i) acc += g.weights[i] * values[g.children[i]];
        values.push_back(std::move(acc));
        break;
      }
      case GateKind::Mul: {
        Scalar acc = f.one();
        for (std::size_t child : g.children) acc *= values[child];
        values.push_back(std::move(acc));
        break;
      }
      case GateKind::Pow: values.push_back(values[g.children.front()].pow(g.exponent)); break;
    }
  }
  return values[c.output()];
}

std::uint64_t syntactic_degree(const Circuit& c) {
  std::vector<std::uint64_t> deg;
  deg.reserve(c.gates().size());
  for (const Gate& g : c.gates()) {
    std::uint64_t d = 0;
    switch (g.kind) {
      case GateKind::Input: d = 1; break;
      case GateKind::Const: d = 0; break;
      case GateKind::Add:
        for (std::size_t child : g.children) d = std::max(d, deg[child]);
        break;
      case GateKind::Mul:
        for (std::size_t child : g.children) d += deg[child];
        break;
      case GateKind::Pow: d = deg[g.children.front()] * g.exponent; break;
    }
    deg.push_back(d);
  }
  return deg[c.output()];
}

Circuit substitute(const Circuit& c, const std::vector<MultiPoly>& images) {
  if (images.size() != c.arity()) raise(ErrorKind::ArityMismatch, "substitute needs one image per variable");
  const std::size_t target = images.empty() ? c.arity() : images.front().arity();
  for (const auto& img : images) {
    if (!(img.field() == c.field())) raise(ErrorKind::FieldMismatch, "image polynomial over a different field");
    if (img.arity() != target) raise(ErrorKind::ArityMismatch, "image polynomials differ in arity");
  }
  CircuitBuilder b(c.field(), target);
  std::vector<std::size_t> new_inputs;
  for (std::size_t i = 0; i < target; ++i) new_inputs.push_back(b.input(i));
  std::vector<std::optional<std::size_t>> spliced(c.arity());
  std::vector<std::size_t> remap(c.gates().size());
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    switch (g.kind) {
      case GateKind::Input: {
        auto& slot = spliced[g.var];
        if (!slot) slot = b.poly(images[g.var], new_inputs);
        remap[i] = *slot;
        break;
      }
      case GateKind::Const: remap[i] = b.constant(g.value); break;
      case GateKind::Add: {
        std::vector<std::size_t> kids;
        for (std::size_t child : g.children) kids.push_back(remap[child]);
        remap[i] = b.add(std::move(kids), g.weights);
        break;
      }
      case GateKind::Mul: {
        std::vector<std::size_t> kids;
        for (std::size_t child : g.children) kids.push_back(remap[child]);
        remap[i] = b.mul(std::move(kids));
        break;
      }
      case GateKind::Pow: remap[i] = b.pow(remap[g.children.front()], g.exponent); break;
    }
  }
  return std::move(b).build(remap[c.output()]);
}

Circuit substitute(const Circuit& c, const std::map<std::size_t, MultiPoly>& sigma) {
  std::vector<MultiPoly> images;
  images.reserve(c.arity());
  for (std::size_t i = 0; i < c.arity(); ++i) images.push_back(MultiPoly::variable(c.field(), c.arity(), i));
  for (const auto& [var, img] : sigma) {
    if (var >= c.arity()) raise(ErrorKind::ArityMismatch, "substitution for a variable outside arity");
    if (img.arity() != c.arity()) raise(ErrorKind::ArityMismatch, "partial substitution images must keep the arity");
    images[var] = img;
  }
  return substitute(c, images);
}

std::string serialize(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates()) {
    json j;
    j["id"] = g.id;
    j["kind"] = std::string(to_string(g.kind));
    std::vector<std::int64_t> child_ids;
    for (std::size_t child : g.children) child_ids.push_back(c.gates()[child].id);
    switch (g.kind) {
      case GateKind::Input: j["var"] = g.var; break;
      case GateKind::Const: j["value"] = g.value.to_string(); break;
      case GateKind::Add: {
        j["children"] = child_ids;
        std::vector<std::string> w;
        for (const auto& s : g.weights) w.push_back(s.to_string());
        j["weights"] = w;
        break;
      }
      case GateKind::Mul: j["children"] = child_ids; break;
      case GateKind::Pow:
        j["children"] = child_ids;
        j["exp"] = g.exponent;
        break;
    }
    gates.push_back(std::move(j));
  }
  json doc;
  doc["field"] = c.field().spec();
  doc["arity"] = c.arity();
  doc["gates"] = std::move(gates);
  doc["output"] = c.gates()[c.output()].id;
  return doc.dump(2) + "\n";
}

namespace {

using detail::parse_json_text;
using detail::require;
using detail::scalar_field;

Circuit parse_document(const json& doc, std::optional<Field> override_field) {
  if (!doc.is_object()) raise(ErrorKind::ParseError, "circuit document must be a JSON object");
  const Field field = override_field ? *override_field : Field::parse(require<std::string>(doc, "field", "circuit"));
  const auto arity = require<std::size_t>(doc, "arity", "circuit");
  const auto output_id = require<std::int64_t>(doc, "output", "circuit");
  if (!doc.contains("gates") || !doc.at("gates").is_array()) raise(ErrorKind::ParseError, "circuit: 'gates' must be an array");
  std::map<std::int64_t, std::size_t> index_of;
  std::vector<Gate> gates;
  std::int64_t previous_id = 0;
  for (const json& jg : doc.at("gates")) {
    const std::string where = "gate #" + std::to_string(gates.size());
    Gate g;
    g.id = require<std::int64_t>(jg, "id", where);
    if (!gates.empty() && g.id <= previous_id)
      raise(ErrorKind::ValidationError, where + ": gate ids must be strictly increasing");
    previous_id = g.id;
    const auto kind = require<std::string>(jg, "kind", where);
    auto read_children = [&] {
      for (auto id : require<std::vector<std::int64_t>>(jg, "children", where)) {
        const auto it = index_of.find(id);
        if (it == index_of.end())
          raise(ErrorKind::ValidationError, where + ": child id " + std::to_string(id) + " is not an earlier gate");
        g.children.push_back(it->second);
      }
    };
    if (kind == "input") {
      g.kind = GateKind::Input;
      g.var = require<std::size_t>(jg, "var", where);
    } else if (kind == "const") {
      g.kind = GateKind::Const;
      if (!jg.contains("value")) raise(ErrorKind::ParseError, where + ": missing 'value'");
      g.value = scalar_field(jg, "value", field, where);
    } else if (kind == "add") {
      g.kind = GateKind::Add;
      read_children();
      if (jg.contains("weights")) {
        const json& w = jg.at("weights");
        if (!w.is_array()) raise(ErrorKind::ParseError, where + ": 'weights' must be an array");
        for (const json& x : w) {
          if (x.is_string()) {
            g.weights.push_back(field.parse_scalar(x.get<std::string>()));
          } else if (x.is_number_integer()) {
            g.weights.push_back(field.from_int(x.get<std::int64_t>()));
          } else {
            raise(ErrorKind::ParseError, where + ": weights must be decimal strings");
          }
        }
      } else {
        g.weights.assign(g.children.size(), field.one());
      }
    } else if (kind == "mul") {
      g.kind = GateKind::Mul;
      read_children();
    } else if (kind == "pow") {
      g.kind = GateKind::Pow;
      read_children();
      g.exponent = require<std::uint64_t>(jg, "exp", where);
    } else {
      raise(ErrorKind::ParseError, where + ": unknown gate kind '" + kind + "'");
    }
    index_of.emplace(g.id, gates.size());
    gates.push_back(std::move(g));
  }
  const auto out = index_of.find(output_id);
  if (out == index_of.end()) raise(ErrorKind::ValidationError, "output id does not name a gate");
  return Circuit(field, arity, std::move(gates), out->second);
}

}  // namespace

Circuit parse_circuit(std::string_view text) { return parse_document(parse_json_text(text), std::nullopt); }

Circuit parse_circuit(std::string_view text, const Field& field) {
  return parse_document(parse_json_text(text), field);
}

Oracle Oracle::from_circuit(Circuit c) {
  const Field f = c.field();
  const std::size_t n = c.arity();
  const std::uint64_t d = syntactic_degree(c);
  return Oracle(f, n, d, [circuit = std::move(c)](std::span<const Scalar> x) { return evaluate(circuit, x); });
}

Oracle Oracle::from_poly(MultiPoly p) {
  const Field f = p.field();
  const std::size_t n = p.arity();
  const std::uint64_t d = p.degree();
  return Oracle(f, n, d, [poly = std::move(p)](std::span<const Scalar> x) { return poly.evaluate(x); });
}

Oracle Oracle::linear_combination(const Scalar& a, Oracle o1, const Scalar& b, Oracle o2) {
  if (!(o1.field() == o2.field())) raise(ErrorKind::FieldMismatch, "combining oracles over different fields");
  if (o1.arity() != o2.arity()) raise(ErrorKind::ArityMismatch, "combining oracles of different arity");
  const Field f = o1.field();
  const std::size_t n = o1.arity();
  const std::uint64_t d = std::max(o1.degree_bound(), o2.degree_bound());
  return Oracle(f, n, d, [a, b, o1 = std::move(o1), o2 = std::move(o2)](std::span<const Scalar> x) {
    return a * o1(x) + b * o2(x);
  });
}

Scalar Oracle::operator()(std::span<const Scalar> point) const {
  if (point.size() != arity_) raise(ErrorKind::ArityMismatch, "oracle point has wrong length");
  return eval_(point);
}

MultiPoly dense_expand(const Oracle& o) {
  const std::size_t n = o.arity();
  const std::uint64_t d = o.degree_bound();
  const Field& f = o.field();
  const std::uint64_t side = d + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kDenseExpandLimit / side) raise(ErrorKind::TooLarge, "dense expansion grid exceeds 10^7 points");
    total *= side;
  }
  f.require_size_exceeds(d, "dense_expand");

  // Inverse Vandermonde on nodes 0..d maps values to coefficients.
  Matrix vander(f, side, 2 * side);
  for (std::uint64_t j = 0; j < side; ++j) {
    const Scalar node = f.from_int(static_cast<std::int64_t>(j));
    Scalar power = f.one();
    for (std::uint64_t p = 0; p < side; ++p) {
      vander(j, p) = power;
      power *= node;
    }
    vander(j, side + j) = f.one();
  }
  const EchelonForm ef = rref(std::move(vander));
  std::vector<std::vector<Scalar>> inv(side, std::vector<Scalar>(side));
  for (std::uint64_t r = 0; r < side; ++r)
    for (std::uint64_t c = 0; c < side; ++c) inv[r][c] = ef.reduced(r, side + c);

  // values[idx], idx = Σ x_i (d+1)^i
  std::vector<Scalar> values(total);
  std::vector<Scalar> point(n, f.zero());
  std::vector<std::uint64_t> digits(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    values[idx] = o(point);
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < side) {
        point[i] = f.from_int(static_cast<std::int64_t>(digits[i]));
        break;
      }
      digits[i] = 0;
      point[i] = f.zero();
    }
  }

  std::uint64_t stride = 1;
  std::vector<Scalar> line(side);
  for (std::size_t axis = 0; axis < n; ++axis) {
    for (std::uint64_t base = 0; base < total; ++base) {
      if ((base / stride) % side != 0) continue;
      for (std::uint64_t j = 0; j < side; ++j) line[j] = values[base + j * stride];
      for (std::uint64_t p = 0; p < side; ++p) {
        Scalar acc = f.zero();
        for (std::uint64_t j = 0; j < side; ++j)
          if (!line[j].is_zero()) acc += inv[p][j] * line[j];
        values[base + p * stride] = std::move(acc);
      }
    }
    stride *= side;
  }

  MultiPoly out(f, n);
  ExponentVector e(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = static_cast<std::uint32_t>(rest % side);
      rest /= side;
    }
    if (!values[idx].is_zero()) out.add_term(e, values[idx]);
  }
  return out;
}

}  // namespace conepit
