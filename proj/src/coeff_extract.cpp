#include "conepit/coeff_extract.hpp"

#include <algorithm>

#include "conepit/error.hpp"
#include "conepit/matrix.hpp"

namespace conepit {

std::vector<Scalar> vandermonde_row(const std::vector<Scalar>& nodes, std::size_t target) {
  const std::size_t m = nodes.size();
  if (m == 0 || target >= m) raise(ErrorKind::InvalidArgument, "target power must be below the node count");
  const Field f = nodes.front().field();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (nodes[i] == nodes[j]) raise(ErrorKind::DuplicateNodes, "interpolation nodes must be distinct");
  // a·M = u  <=>  M^T a = u^T, with (M^T)_{p,j} = nodes[j]^p.
  Matrix mt(f, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Scalar power = f.one();
    for (std::size_t p = 0; p < m; ++p) {
      mt(p, j) = power;
      power *= nodes[j];
    }
  }
  std::vector<Scalar> rhs(m, f.zero());
  rhs[target] = f.one();
  auto a = solve(mt, rhs);
  if (!a) raise(ErrorKind::DuplicateNodes, "singular Vandermonde system");
  return *a;
}

FilteredOracle::FilteredOracle(Oracle base, ExponentVector target, std::size_t stage)
    : base_(std::move(base)), target_(std::move(target)), stage_(stage) {
  if (target_.arity() != base_.arity()) raise(ErrorKind::ArityMismatch, "target exponent arity differs from oracle");
  if (stage_ > target_.arity()) raise(ErrorKind::InvalidArgument, "stage beyond arity");
  const Field& f = base_.field();
  for (std::size_t i = 0; i < stage_; ++i) {
    const std::uint32_t ei = target_[i];
    if (ei == 0) {
      nodes_.push_back({f.one()});
      weights_.push_back({f.one()});
      continue;
    }
    f.require_size_exceeds(ei, "coefficient extraction nodes");
    std::vector<Scalar> nodes;
    for (std::uint32_t j = 0; j <= ei; ++j) nodes.push_back(f.from_int(j));
    weights_.push_back(vandermonde_row(nodes, ei));
    nodes_.push_back(std::move(nodes));
    calls_per_eval_ *= std::uint64_t{ei} + 1;
  }
}

Scalar FilteredOracle::operator()(std::span<const Scalar> point) const {
  if (point.size() != base_.arity()) raise(ErrorKind::ArityMismatch, "oracle point has wrong length");
  const Field& f = base_.field();
  std::vector<Scalar> scaled(point.begin(), point.end());
  std::vector<std::size_t> pick(stage_, 0);
  Scalar acc = f.zero();
  while (true) {
    Scalar weight = f.one();
    for (std::size_t i = 0; i < stage_; ++i) {
      scaled[i] = nodes_[i][pick[i]] * point[i];
      weight *= weights_[i][pick[i]];
    }
    acc += weight * base_(scaled);
    std::size_t i = 0;
    while (i < stage_ && ++pick[i] == nodes_[i].size()) pick[i++] = 0;
    if (i == stage_) break;
  }
  return acc;
}

Oracle FilteredOracle::as_oracle() const {
  return Oracle(base_.field(), base_.arity(), base_.degree_bound(),
                [self = *this](std::span<const Scalar> x) { return self(x); });
}

Extraction extract_coefficient_counted(const Oracle& o, const ExponentVector& e) {
  if (e.arity() != o.arity()) raise(ErrorKind::ArityMismatch, "exponent arity differs from oracle arity");
  const Field& f = o.field();
  const std::uint64_t d = o.degree_bound();
  f.require_size_exceeds(d, "coefficient extraction");
  const std::uint64_t total = e.degree();
  // Nothing above the degree bound can carry a coefficient.
  if (total > d) return {f.zero(), 0};

  const FilteredOracle filtered(o, e, e.arity());
  std::vector<Scalar> t_nodes;
  for (std::uint64_t j = 0; j <= d; ++j) t_nodes.push_back(f.from_int(static_cast<std::int64_t>(j)));
  const std::vector<Scalar> t_weights = vandermonde_row(t_nodes, total);

  Scalar coefficient = f.zero();
  std::vector<Scalar> diagonal(o.arity());
  for (std::uint64_t j = 0; j <= d; ++j) {
    std::fill(diagonal.begin(), diagonal.end(), t_nodes[j]);
    coefficient += t_weights[j] * filtered(diagonal);
  }
  return {coefficient, filtered.calls_per_evaluation() * (d + 1)};
}

Scalar extract_coefficient(const Oracle& o, const ExponentVector& e) {
  return extract_coefficient_counted(o, e).coefficient;
}

}  // namespace conepit
