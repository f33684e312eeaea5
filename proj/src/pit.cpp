#include "conepit/pit.hpp"

#include <vector>

#include "conepit/coeff_extract.hpp"

namespace conepit {

std::string PitVerdict::render() const {
  if (!nonzero) return "ZERO";
  std::string out = "NONZERO witness=";
  out += witness ? witness->to_string() : "none";
  out += " coeff=" + (coefficient ? coefficient->to_string() : std::string("none"));
  out += " tested=" + std::to_string(stats.monomials_tested);
  out += " calls=" + std::to_string(stats.oracle_calls);
  return out;
}

PitVerdict low_cone_pit(const Oracle& o, std::uint64_t k) {
  const std::uint64_t d = o.degree_bound();
  o.field().require_size_exceeds(d, "low-cone PIT");
  PitVerdict verdict;
  if (o.arity() == 0) {
    const Scalar value = o(std::vector<Scalar>{});
    verdict.stats = {1, 1};
    if (!value.is_zero()) {
      verdict.nonzero = true;
      verdict.witness = ExponentVector(0);
      verdict.coefficient = value;
    }
    return verdict;
  }
  for (const auto& e : enumerate_low_cone(o.arity(), k, d)) {
    const Extraction x = extract_coefficient_counted(o, e);
    verdict.stats.oracle_calls += x.oracle_calls;
    ++verdict.stats.monomials_tested;
    if (!x.coefficient.is_zero()) {
      verdict.nonzero = true;
      verdict.witness = e;
      verdict.coefficient = x.coefficient;
      break;
    }
  }
  return verdict;
}

PitVerdict brute_force_pit(const Oracle& o) {
  const MultiPoly p = dense_expand(o);
  PitVerdict verdict;
  std::uint64_t grid = 1;
  for (std::size_t i = 0; i < o.arity(); ++i) grid *= o.degree_bound() + 1;
  verdict.stats = {grid, grid};
  if (!p.is_zero()) {
    verdict.nonzero = true;
    verdict.witness = p.terms().begin()->first;
    verdict.coefficient = p.terms().begin()->second;
  }
  return verdict;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PitVerdict sz_pit(const Oracle& o, std::uint64_t trials, std::uint64_t seed) {
  const Field& f = o.field();
  std::uint64_t state = seed;
  PitVerdict verdict;
  std::vector<Scalar> point(o.arity());
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (auto& x : point) {
      const std::uint64_t r = splitmix64(state);
      x = f.is_rational() ? f.from_int(static_cast<std::int64_t>(r & 0x7FFFFFFFULL))
                          : f.from_int(static_cast<std::int64_t>(r % f.modulus()));
    }
    const Scalar value = o(point);
    ++verdict.stats.oracle_calls;
    if (!value.is_zero()) {
      verdict.nonzero = true;
      verdict.coefficient = value;
      break;
    }
  }
  return verdict;
}

}  // namespace conepit
