#pragma once

// Zero tests for blackbox polynomials: the low-cone coefficient scan, the
// dense-expansion ground truth, and a seeded random-evaluation tester.

#include <cstdint>
#include <optional>
#include <string>

#include "conepit/circuit.hpp"
#include "conepit/exponent.hpp"

namespace conepit {

struct PitStats {
  std::uint64_t oracle_calls = 0;
  std::uint64_t monomials_tested = 0;

  friend bool operator==(const PitStats&, const PitStats&) = default;
};

struct PitVerdict {
  bool nonzero = false;
  std::optional<ExponentVector> witness;  // unset for random evaluation
  std::optional<Scalar> coefficient;      // or the nonzero value seen
  PitStats stats;

  /// `ZERO` or `NONZERO witness=<monomial> coeff=<scalar> tested=<int> calls=<int>`.
  std::string render() const;

  friend bool operator==(const PitVerdict&, const PitVerdict&) = default;
};

/// Tests every coefficient of cone-size ≤ k and degree ≤ d in deg-lex
/// order, stopping at the first nonzero one. Sound for NONZERO; ZERO is
/// correct when the partial derivative space of O has dimension ≤ k.
PitVerdict low_cone_pit(const Oracle& o, std::uint64_t k);

/// Dense expansion; the witness is the deg-lex-least term. Throws TooLarge.
PitVerdict brute_force_pit(const Oracle& o);

/// Evaluates at `trials` points drawn from a splitmix64 stream. Over a
/// prime field values are reduced mod p; over Q they are taken mod 2^31.
PitVerdict sz_pit(const Oracle& o, std::uint64_t trials, std::uint64_t seed);

/// splitmix64 step.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace conepit
