#include "conepit/cone_basis.hpp"

#include <algorithm>
#include <set>

#include <gmpxx.h>

#include "conepit/error.hpp"

namespace conepit {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) raise(ErrorKind::Overflow, "weight overflows 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) raise(ErrorKind::Overflow, "weight overflows 64 bits");
  return out;
}

Scalar binomial_product(const Field& field, const ExponentVector& b, const ExponentVector& a) {
  mpz_class acc = 1;
  mpz_class c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] > b[i]) return field.zero();
    mpz_bin_uiui(c.get_mpz_t(), b[i], a[i]);
    acc *= c;
  }
  return field.from_mpz(acc);
}

std::vector<ExponentVector> sorted_unique(std::vector<ExponentVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<ExponentVector> by_weight(const VectorPoly& f, const WeightAssignment& w) {
  if (f.is_zero()) raise(ErrorKind::ZeroPolynomial, "least basis of the zero polynomial");
  if (w.arity() != f.arity()) raise(ErrorKind::ArityMismatch, "weight vector length differs from arity");
  std::vector<std::pair<std::uint64_t, ExponentVector>> keyed;
  for (const auto& [e, v] : f.terms()) keyed.emplace_back(w.weight(e), e);
  std::sort(keyed.begin(), keyed.end());
  std::vector<ExponentVector> out;
  out.reserve(keyed.size());
  for (auto& [wt, e] : keyed) out.push_back(std::move(e));
  return out;
}

}  // namespace

std::uint64_t WeightAssignment::weight(const ExponentVector& e) const {
  if (e.arity() != w.size()) raise(ErrorKind::ArityMismatch, "weight vector length differs from arity");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) acc = checked_add(acc, checked_mul(e[i], w[i]));
  return acc;
}

WeightAssignment parse_weights(std::string_view text) {
  WeightAssignment out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos)
      raise(ErrorKind::ParseError, "weights must be comma-separated naturals, got '" + std::string(text) + "'");
    try {
      out.w.push_back(std::stoull(std::string(item)));
    } catch (const std::out_of_range&) {
      raise(ErrorKind::ParseError, "weight out of range: " + std::string(item));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

WeightAssignment kronecker_weights(std::size_t n, std::uint64_t d) {
  WeightAssignment out;
  std::uint64_t w = 1;
  for (std::size_t i = 0; i < n; ++i) {
    out.w.push_back(w);
    if (i + 1 < n) w = checked_mul(w, d + 1);
  }
  return out;
}

std::vector<ExponentVector> least_basis(const VectorPoly& f, const WeightAssignment& w) {
  IncrementalBasis span(f.field(), f.dim());
  std::vector<ExponentVector> out;
  for (const auto& e : by_weight(f, w)) {
    if (span.insert(f.coeff(e))) out.push_back(e);
    if (span.size() == f.dim()) break;
  }
  return out;
}

std::vector<ExponentVector> greedy_basis(const VectorPoly& f) {
  return least_basis(f, WeightAssignment{std::vector<std::uint64_t>(f.arity(), 0)});
}

BasisReport is_basis_isolating(const VectorPoly& f, const WeightAssignment& w) {
  BasisReport report;
  report.basis = least_basis(f, w);
  std::vector<std::uint64_t> weights;
  for (const auto& b : report.basis) weights.push_back(w.weight(b));
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weights[i] == weights[i - 1]) {
      report.reason = "basis monomials " + report.basis[i - 1].to_string() + " and " + report.basis[i].to_string() +
                      " share weight " + std::to_string(weights[i]);
      return report;
    }
  }
  const std::set<ExponentVector> in_basis(report.basis.begin(), report.basis.end());
  for (const auto& [m, v] : f.terms()) {
    if (in_basis.count(m)) continue;
    const std::uint64_t wm = w.weight(m);
    std::size_t lighter = 0;
    while (lighter < weights.size() && weights[lighter] < wm) ++lighter;
    std::vector<Scalar> combo(report.basis.size(), f.field().zero());
    bool ok = false;
    if (lighter > 0) {
      Matrix cols(f.field(), f.dim(), lighter);
      for (std::size_t j = 0; j < lighter; ++j) {
        const auto c = f.coeff(report.basis[j]);
        for (std::size_t r = 0; r < f.dim(); ++r) cols(r, j) = c[r];
      }
      if (auto x = solve(cols, v)) {
        std::copy(x->begin(), x->end(), combo.begin());
        ok = true;
      }
    }
    if (!ok) {
      report.reason = "coefficient of " + m.to_string() + " is not spanned by lighter basis monomials";
      report.certificate.clear();
      return report;
    }
    report.certificate.emplace(m, std::move(combo));
  }
  report.isolating = true;
  return report;
}

std::vector<ExponentVector> find_cone_closed(const std::vector<ExponentVector>& b, std::size_t n) {
  if (b.empty()) raise(ErrorKind::EmptyInput, "cone-closed recursion needs a nonempty set");
  if (n == 0) raise(ErrorKind::ArityMismatch, "arity must be positive");
  for (const auto& e : b)
    if (e.arity() != n) raise(ErrorKind::ArityMismatch, "set element " + e.to_tuple_string() + " has wrong arity");
  const std::vector<ExponentVector> set = sorted_unique(b);
  std::vector<ExponentVector> out;
  if (n == 1) {
    for (std::uint32_t i = 0; i < set.size(); ++i) out.push_back(ExponentVector{i});
    return out;
  }
  std::map<ExponentVector, std::size_t> multiplicity;
  for (const auto& e : set) ++multiplicity[e.truncated()];
  std::size_t layers = 0;
  for (const auto& [img, count] : multiplicity) layers = std::max(layers, count);
  for (std::size_t i = 1; i <= layers; ++i) {
    std::vector<ExponentVector> level;
    for (const auto& [img, count] : multiplicity)
      if (count >= i) level.push_back(img);
    for (const auto& s : find_cone_closed(level, n - 1)) out.push_back(s.extended(static_cast<std::uint32_t>(i - 1)));
  }
  return sorted_unique(std::move(out));
}

Matrix transfer_submatrix(const std::vector<ExponentVector>& a, const std::vector<ExponentVector>& b,
                          const Field& field) {
  const auto rows = sorted_unique(a);
  const auto cols = sorted_unique(b);
  const std::size_t n = rows.empty() ? (cols.empty() ? 0 : cols.front().arity()) : rows.front().arity();
  for (const auto& e : rows)
    if (e.arity() != n) raise(ErrorKind::ArityMismatch, "transfer matrix row index has wrong arity");
  for (const auto& e : cols)
    if (e.arity() != n) raise(ErrorKind::ArityMismatch, "transfer matrix column index has wrong arity");
  Matrix t(field, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) t(i, j) = binomial_product(field, cols[j], rows[i]);
  return t;
}

std::vector<UnivariatePoly> ShiftedVectorPoly::coeff(const ExponentVector& a) const {
  const auto it = terms_.find(a);
  if (it != terms_.end()) return it->second;
  return std::vector<UnivariatePoly>(dim_, UnivariatePoly(field_));
}

PolyMatrix ShiftedVectorPoly::rows(const std::vector<ExponentVector>& index) const {
  PolyMatrix out;
  out.reserve(index.size());
  for (const auto& a : index) out.push_back(coeff(a));
  return out;
}

void ShiftedVectorPoly::add_term(const ExponentVector& a, std::size_t component, const UnivariatePoly& p) {
  if (a.arity() != arity_) raise(ErrorKind::ArityMismatch, "term arity differs from polynomial arity");
  if (component >= dim_) raise(ErrorKind::ArityMismatch, "component index outside dimension");
  auto [it, inserted] = terms_.try_emplace(a, std::vector<UnivariatePoly>(dim_, UnivariatePoly(field_)));
  it->second[component] += p;
  if (std::all_of(it->second.begin(), it->second.end(), [](const UnivariatePoly& q) { return q.is_zero(); }))
    terms_.erase(it);
}

ShiftedVectorPoly shift_by_weight(const VectorPoly& f, const WeightAssignment& w) {
  if (w.arity() != f.arity()) raise(ErrorKind::ArityMismatch, "weight vector length differs from arity");
  const Field& field = f.field();
  // Accumulate per (a, component) as sparse t-power maps, then densify.
  std::map<ExponentVector, std::vector<std::map<std::uint64_t, Scalar>>> acc;
  for (const auto& [b, v] : f.terms()) {
    const std::uint64_t wb = w.weight(b);
    for (const auto& a : cone_of(b)) {
      const Scalar binom = binomial_product(field, b, a);
      if (binom.is_zero()) continue;
      const std::uint64_t power = wb - w.weight(a);
      auto& slot = acc.try_emplace(a, f.dim()).first->second;
      for (std::size_t c = 0; c < f.dim(); ++c) {
        if (v[c].is_zero()) continue;
        auto [it, fresh] = slot[c].try_emplace(power, field.zero());
        it->second += binom * v[c];
      }
    }
  }
  ShiftedVectorPoly out(field, f.arity(), f.dim());
  for (const auto& [a, comps] : acc) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (comps[c].empty()) continue;
      std::vector<Scalar> dense(comps[c].rbegin()->first + 1, field.zero());
      for (const auto& [power, s] : comps[c]) dense[power] = s;
      out.add_term(a, c, UnivariatePoly(field, std::move(dense)));
    }
  }
  return out;
}

ShiftBasis cone_closed_basis_after_shift(const VectorPoly& f, const WeightAssignment& w) {
  const BasisReport report = is_basis_isolating(f, w);
  if (!report.isolating) raise(ErrorKind::NotIsolating, "weight assignment is not basis isolating: " + report.reason);
  ShiftBasis out;
  out.least = report.basis;
  out.cone = find_cone_closed(report.basis, f.arity());
  const ShiftedVectorPoly shifted = shift_by_weight(f, w);
  out.rank = rank_over_ft(shifted.rows(out.cone));
  const std::size_t target = coeff_rank(f);
  if (out.rank != target)
    raise(ErrorKind::VerificationFailed, "shifted rows of the cone-closed set have rank " + std::to_string(out.rank) +
                                             ", expected " + std::to_string(target));
  return out;
}

}  // namespace conepit
