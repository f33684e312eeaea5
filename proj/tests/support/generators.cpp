#include "generators.hpp"

#include <algorithm>
#include <set>

namespace conepit::gen {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

Scalar small_scalar(const Field& f, Rng& rng, std::int64_t bound) {
  return f.from_int(std::uniform_int_distribution<std::int64_t>(-bound, bound)(rng));
}

Scalar random_scalar(const Field& f, Rng& rng, std::int64_t bound) {
  if (f.is_rational()) return small_scalar(f, rng, bound);
  return f.from_int(static_cast<std::int64_t>(uniform(rng, 0, f.modulus() - 1)));
}

std::vector<Scalar> random_point(const Field& f, std::size_t n, Rng& rng) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_scalar(f, rng));
  return out;
}

Circuit random_circuit(const Field& f, std::size_t n, std::size_t max_gates, std::uint64_t max_degree, Rng& rng) {
  CircuitBuilder b(f, n);
  std::vector<std::size_t> nodes;
  std::vector<std::uint64_t> degree;
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back(b.input(i));
    degree.push_back(1);
  }
  nodes.push_back(b.constant(small_scalar(f, rng, 5)));
  degree.push_back(0);
  const std::size_t budget = std::max<std::size_t>(max_gates, nodes.size() + 1);
  while (nodes.size() < budget) {
    const auto kind = uniform(rng, 0, 5);
    const std::size_t a = uniform(rng, 0, nodes.size() - 1);
    const std::size_t c = uniform(rng, 0, nodes.size() - 1);
    if (kind <= 2) {
      nodes.push_back(b.add({nodes[a], nodes[c]}, {small_scalar(f, rng, 4), small_scalar(f, rng, 4)}));
      degree.push_back(std::max(degree[a], degree[c]));
    } else if (kind <= 4) {
      if (degree[a] + degree[c] > max_degree) continue;
      nodes.push_back(b.mul({nodes[a], nodes[c]}));
      degree.push_back(degree[a] + degree[c]);
    } else {
      if (degree[a] == 0 || 2 * degree[a] > max_degree) continue;
      const std::uint64_t e = uniform(rng, 2, max_degree / degree[a]);
      nodes.push_back(b.pow(nodes[a], e));
      degree.push_back(degree[a] * e);
    }
  }
  return std::move(b).build(nodes.back());
}

namespace {

DiagonalTerm random_term(const Field& f, std::size_t n, std::uint64_t max_degree, Rng& rng) {
  DiagonalTerm t;
  t.c = small_scalar(f, rng, 6);
  if (t.c.is_zero()) t.c = f.one();
  t.constant = small_scalar(f, rng, 4);
  const std::uint64_t sparsity = uniform(rng, 0, 2);
  for (std::size_t j = 0; j < n; ++j)
    t.coeffs.push_back(uniform(rng, 0, 2) < sparsity ? f.zero() : small_scalar(f, rng, 4));
  t.d = uniform(rng, 0, max_degree);
  return t;
}

}  // namespace

DiagonalCircuit random_diagonal(const Field& f, std::size_t n, std::size_t terms, std::uint64_t max_degree, Rng& rng) {
  std::vector<DiagonalTerm> out;
  for (std::size_t i = 0; i < terms; ++i) out.push_back(random_term(f, n, max_degree, rng));
  return DiagonalCircuit(f, n, std::move(out));
}

DiagonalCircuit zero_diagonal(const Field& f, std::size_t n, std::size_t max_terms, std::uint64_t max_degree, Rng& rng) {
  std::vector<DiagonalTerm> out;
  const auto style = uniform(rng, 0, max_terms >= 4 ? 2 : 1);
  if (style == 0) {
    // Terms and their negations.
    const std::size_t pairs = uniform(rng, 1, max_terms / 2);
    for (std::size_t i = 0; i < pairs; ++i) {
      DiagonalTerm t = random_term(f, n, max_degree, rng);
      DiagonalTerm u = t;
      u.c = -t.c;
      out.push_back(t);
      out.push_back(u);
    }
  } else if (style == 1) {
    // c·(λℓ)^d − c·λ^d·ℓ^d
    DiagonalTerm t = random_term(f, n, max_degree, rng);
    Scalar lambda = small_scalar(f, rng, 3);
    if (lambda.is_zero()) lambda = f.from_int(2);
    DiagonalTerm u = t;
    u.constant *= lambda;
    for (auto& a : u.coeffs) a *= lambda;
    t.c = -(t.c * lambda.pow(t.d));
    out.push_back(u);
    out.push_back(t);
  } else {
    // (a + b)^2 + (a − b)^2 − 2a^2 − 2b^2
    const DiagonalTerm a = random_term(f, n, 2, rng);
    const DiagonalTerm b = random_term(f, n, 2, rng);
    auto combo = [&](int sign) {
      DiagonalTerm t{f.one(), a.constant + (sign > 0 ? b.constant : -b.constant), {}, 2};
      for (std::size_t j = 0; j < n; ++j) t.coeffs.push_back(a.coeffs[j] + (sign > 0 ? b.coeffs[j] : -b.coeffs[j]));
      return t;
    };
    out.push_back(combo(1));
    out.push_back(combo(-1));
    out.push_back({f.from_int(-2), a.constant, a.coeffs, 2});
    out.push_back({f.from_int(-2), b.constant, b.coeffs, 2});
  }
  std::shuffle(out.begin(), out.end(), rng);
  return DiagonalCircuit(f, n, std::move(out));
}

MultiPoly random_sparse_poly(const Field& f, std::size_t n, std::uint64_t max_degree, std::size_t terms, Rng& rng) {
  MultiPoly p(f, n);
  for (std::size_t t = 0; t < terms; ++t) {
    ExponentVector e(n);
    const std::uint64_t deg = uniform(rng, 0, max_degree);
    for (std::uint64_t s = 0; s < deg; ++s) ++e[uniform(rng, 0, n - 1)];
    p.add_term(e, small_scalar(f, rng, 9));
  }
  return p;
}

VectorPoly random_vectorpoly(const Field& f, std::size_t n, std::size_t k, std::uint64_t d, std::size_t terms, Rng& rng) {
  VectorPoly out(f, n, k);
  for (std::size_t t = 0; t < terms; ++t) {
    ExponentVector e(n);
    const std::uint64_t deg = uniform(rng, 0, d);
    for (std::uint64_t s = 0; s < deg; ++s) ++e[uniform(rng, 0, n - 1)];
    std::vector<Scalar> v;
    for (std::size_t c = 0; c < k; ++c) v.push_back(small_scalar(f, rng, 3));
    out.add_term(e, v);
  }
  return out;
}

std::vector<ExponentVector> random_exponent_set(std::size_t n, std::uint32_t max_entry, std::size_t size, Rng& rng) {
  std::set<ExponentVector> s;
  std::uint64_t grid = 1;
  for (std::size_t i = 0; i < n; ++i) grid *= max_entry + 1;
  size = std::min<std::size_t>(size, grid);
  while (s.size() < size) {
    ExponentVector e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint32_t>(uniform(rng, 0, max_entry));
    s.insert(e);
  }
  return {s.begin(), s.end()};
}

HsgTuple random_hsg(const Field& f, std::size_t n, std::uint64_t d, Rng& rng) {
  HsgTuple out{f, {}};
  const std::size_t top = uniform(rng, 0, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t deg = i == top ? d : uniform(rng, 0, d);
    std::vector<Scalar> c;
    for (std::uint64_t j = 0; j <= deg; ++j) c.push_back(small_scalar(f, rng, 5));
    if (c.back().is_zero()) c.back() = f.one();
    out.polys.emplace_back(f, std::move(c));
  }
  return out;
}

}  // namespace conepit::gen
