#pragma once

// JSON documents for exponent sets, vector polynomials, product lists and
// single polynomials.
//
//   set:        {"arity": 2, "set": [[2,1],[0,3]]}
//   vectorpoly: {"field": "q", "arity": 2, "dim": 2,
//                "terms": [{"monomial": "x1*x2", "coeffs": ["1","1"]}]}
//   products:   {"field": "q", "arity": 2, "terms": [["x1","x2"], ["x1+1","x2"]]}
//   poly:       {"field": "q", "arity": 2, "poly": "x1*x2 - 3/2*x2^2 + 5"}
//
// A monomial may also be given as an exponent array such as [1,1].

#include <string>
#include <string_view>
#include <vector>

#include "conepit/exponent.hpp"
#include "conepit/multipoly.hpp"

namespace conepit {

std::vector<ExponentVector> parse_exponent_set(std::string_view text);
std::string serialize_exponent_set(const std::vector<ExponentVector>& set);

VectorPoly parse_vectorpoly(std::string_view text);
std::string serialize(const VectorPoly& f);

std::vector<std::vector<MultiPoly>> parse_products(std::string_view text);

MultiPoly parse_poly_document(std::string_view text);
std::string serialize_poly_document(const MultiPoly& p);

/// `{(0,0),(1,0)}`.
std::string render_set(const std::vector<ExponentVector>& set);

}  // namespace conepit
