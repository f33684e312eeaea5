#pragma once

// Arithmetic circuits as a topologically ordered gate list, plus the
// evaluation-only Oracle view used by every blackbox procedure.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conepit/field.hpp"
#include "conepit/multipoly.hpp"

namespace conepit {

enum class GateKind { Input, Const, Add, Mul, Pow };

std::string_view to_string(GateKind kind);

struct Gate {
  std::int64_t id = 0;           // external id; strictly increasing along the list
  GateKind kind = GateKind::Const;
  std::size_t var = 0;           // Input
  Scalar value;                  // Const
  std::vector<std::size_t> children;  // positions in the gate list (Add, Mul, Pow)
  std::vector<Scalar> weights;   // Add: one per child
  std::uint64_t exponent = 0;    // Pow

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  /// Validates the DAG: children precede parents, variables < arity,
  /// weights match children, ids strictly increasing. Throws ValidationError.
  Circuit(Field field, std::size_t arity, std::vector<Gate> gates, std::size_t output);

  const Field& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t output() const noexcept { return output_; }

  /// Gate count + edge count.
  std::size_t size() const noexcept;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  Field field_;
  std::size_t arity_;
  std::vector<Gate> gates_;
  std::size_t output_;
};

/// Convenience construction; ids are assigned 0, 1, 2, ... in creation order.
class CircuitBuilder {
 public:
  CircuitBuilder(Field field, std::size_t arity) : field_(field), arity_(arity) {}

  const Field& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }

  std::size_t input(std::size_t var);
  std::size_t constant(const Scalar& value);
  std::size_t constant(std::int64_t value) { return constant(field_.from_int(value)); }
  std::size_t add(std::vector<std::size_t> children);
  std::size_t add(std::vector<std::size_t> children, std::vector<Scalar> weights);
  std::size_t mul(std::vector<std::size_t> children);
  std::size_t pow(std::size_t child, std::uint64_t exponent);
  /// Splices a sparse polynomial over the given gates (one per variable of p).
  std::size_t poly(const MultiPoly& p, std::span<const std::size_t> var_gates);

  Circuit build(std::size_t output) &&;
  Circuit build(std::size_t output) const&;

 private:
  std::size_t push(Gate g);

  Field field_;
  std::size_t arity_;
  std::vector<Gate> gates_;
};

/// Circuit computing p over its own variables.
Circuit circuit_from_poly(const MultiPoly& p);

Scalar evaluate(const Circuit& c, std::span<const Scalar> point);

/// Bottom-up: input 1, const 0, add max, mul sum, pow child·exponent.
std::uint64_t syntactic_degree(const Circuit& c);

/// Replaces every variable: x_i ↦ images[i]; images share one arity, which
/// becomes the result's. Throws FieldMismatch / ArityMismatch.
Circuit substitute(const Circuit& c, const std::vector<MultiPoly>& images);
/// Replaces only the listed variables; images have the circuit's arity.
Circuit substitute(const Circuit& c, const std::map<std::size_t, MultiPoly>& sigma);

/// Exact circuit text (JSON). `serialize` output reparses to an equal circuit.
std::string serialize(const Circuit& c);
/// Throws ParseError (with line:column) or ValidationError.
Circuit parse_circuit(std::string_view text);
/// Same as parse_circuit but reinterprets every scalar in `field`.
Circuit parse_circuit(std::string_view text, const Field& field);

/// Blackbox access: arity, a degree bound, and evaluation. Evaluation must
/// be reentrant; the oracle holds no mutable state of its own.
class Oracle {
 public:
  using EvalFn = std::function<Scalar(std::span<const Scalar>)>;

  Oracle(Field field, std::size_t arity, std::uint64_t degree_bound, EvalFn eval)
      : field_(field), arity_(arity), degree_bound_(degree_bound), eval_(std::move(eval)) {}

  /// Degree bound = syntactic degree.
  static Oracle from_circuit(Circuit c);
  static Oracle from_poly(MultiPoly p);
  /// Evaluates a·O1 + b·O2; the degree bound is the max of the two.
  static Oracle linear_combination(const Scalar& a, Oracle o1, const Scalar& b, Oracle o2);

  const Field& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  std::uint64_t degree_bound() const noexcept { return degree_bound_; }

  /// Throws ArityMismatch for a point of the wrong length.
  Scalar operator()(std::span<const Scalar> point) const;

 private:
  Field field_;
  std::size_t arity_;
  std::uint64_t degree_bound_;
  EvalFn eval_;
};

/// Interpolation guard for dense expansion: (d+1)^n evaluations at most.
constexpr std::uint64_t kDenseExpandLimit = 10'000'000;

/// The unique polynomial of individual degree ≤ d that agrees with O on
/// {0, ..., d}^n. Throws TooLarge or CharTooSmall.
MultiPoly dense_expand(const Oracle& o);

}  // namespace conepit
