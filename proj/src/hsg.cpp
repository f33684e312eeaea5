#include "conepit/hsg.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <gmpxx.h>

#include "conepit/error.hpp"
#include "conepit/matrix.hpp"
#include "json_io.hpp"

namespace conepit {

using detail::json;

std::uint64_t HsgTuple::degree() const {
  long d = 0;
  for (const auto& p : polys) d = std::max(d, p.degree());
  return static_cast<std::uint64_t>(d);
}

HsgTuple parse_hsg(std::string_view text) {
  const json doc = detail::parse_json_text(text);
  if (!doc.is_object()) raise(ErrorKind::ParseError, "tuple document must be a JSON object");
  HsgTuple out{Field::parse(detail::require<std::string>(doc, "field", "tuple")), {}};
  const json& polys = detail::require_array(doc, "polys", "tuple");
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const std::string where = "poly #" + std::to_string(i);
    if (!polys[i].is_array()) raise(ErrorKind::ParseError, where + " must be an array of coefficients");
    std::vector<Scalar> coeffs;
    for (const json& c : polys[i]) coeffs.push_back(detail::json_scalar(c, out.field, where));
    out.polys.emplace_back(out.field, std::move(coeffs));
  }
  if (doc.contains("degree")) {
    const auto declared = detail::require<std::uint64_t>(doc, "degree", "tuple");
    if (declared != out.degree())
      raise(ErrorKind::ValidationError, "declared degree " + std::to_string(declared) + " differs from actual " +
                                            std::to_string(out.degree()));
  }
  return out;
}

std::string serialize(const HsgTuple& h) {
  json polys = json::array();
  for (const auto& p : h.polys) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
    polys.push_back(std::move(coeffs));
  }
  json doc;
  doc["field"] = h.field.spec();
  doc["degree"] = h.degree();
  doc["polys"] = std::move(polys);
  return doc.dump(2) + "\n";
}

std::uint64_t annihilator_delta(std::size_t n, std::uint64_t d) {
  if (n < 2) raise(ErrorKind::ArityTooSmall, "annihilator needs at least two polynomials");
  std::uint64_t target;
  if (__builtin_mul_overflow(d, static_cast<std::uint64_t>(n), &target)) raise(ErrorKind::Overflow, "d*n overflows");
  for (std::uint64_t delta = 1;; ++delta) {
    std::uint64_t p = 1;
    bool big = false;
    for (std::size_t i = 0; i + 1 < n && !big; ++i) big = __builtin_mul_overflow(p, delta, &p) || p > target;
    if (big || p > target) return delta;
  }
}

namespace {

// Vectors with entries < bound and total degree `degree`, lexicographically
// increasing (x1 most significant), appended until `out` reaches `limit`.
void vectors_of_degree(std::vector<std::uint32_t>& prefix, std::size_t n, std::uint64_t bound, std::uint64_t degree,
                       std::vector<ExponentVector>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  const std::size_t i = prefix.size();
  if (i + 1 == n) {
    if (degree < bound) {
      prefix.push_back(static_cast<std::uint32_t>(degree));
      out.emplace_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  const std::uint64_t rest_cap = (bound - 1) * (n - i - 1);
  for (std::uint64_t x = 0; x < bound && x <= degree; ++x) {
    if (degree - x > rest_cap) continue;
    prefix.push_back(static_cast<std::uint32_t>(x));
    vectors_of_degree(prefix, n, bound, degree - x, out, limit);
    prefix.pop_back();
    if (out.size() >= limit) return;
  }
}

}  // namespace

Annihilator build_annihilator(const HsgTuple& f) {
  const std::size_t n = f.arity();
  if (n < 2) raise(ErrorKind::ArityTooSmall, "annihilator needs at least two polynomials");
  for (const auto& p : f.polys) {
    if (!(p.field() == f.field)) detail::throw_mixed_fields(p.field(), f.field);
    if (p.is_zero()) raise(ErrorKind::ValidationError, "tuple entries must be nonzero");
  }
  const std::uint64_t d = f.degree();
  if (d == 0) raise(ErrorKind::BadParameters, "annihilator needs a non-constant tuple (d >= 1)");
  const std::uint64_t delta = annihilator_delta(n, d);
  const std::size_t unknowns = static_cast<std::size_t>(d * n * delta + 1);

  std::vector<ExponentVector> support;
  std::vector<std::uint32_t> prefix;
  for (std::uint64_t deg = 0; support.size() < unknowns && deg <= (delta - 1) * n; ++deg)
    vectors_of_degree(prefix, n, delta, deg, support, unknowns);

  // powers[i][j] = f_i^j
  std::vector<std::vector<UnivariatePoly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].push_back(UnivariatePoly(f.field, {f.field.one()}));
    for (std::uint64_t j = 1; j < delta; ++j) powers[i].push_back(powers[i].back() * f.polys[i]);
  }
  std::vector<UnivariatePoly> columns;
  long top = 0;
  for (const auto& a : support) {
    UnivariatePoly col(f.field, {f.field.one()});
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != 0) col = col * powers[i][a[i]];
    top = std::max(top, col.degree());
    columns.push_back(std::move(col));
  }
  Matrix system(f.field, static_cast<std::size_t>(top) + 1, support.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < columns[c].coeffs().size(); ++r) system(r, c) = columns[c].coeffs()[r];
  const auto kernel = nullspace(system);
  if (kernel.empty()) raise(ErrorKind::VerificationFailed, "annihilator system has a trivial kernel");
  std::vector<Scalar> v = kernel.front();

  if (f.field.is_rational()) {
    mpz_class lcm = 1;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.rational().get_den_mpz_t());
    mpz_class content = 0;
    for (auto& x : v) {
      const mpq_class scaled = x.rational() * lcm;
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_num_mpz_t());
    }
    const Scalar factor = f.field.from_mpq(mpq_class(lcm, content));
    for (auto& x : v) x *= factor;
  }

  Annihilator out{MultiPoly(f.field, n), MultiPoly(f.field, n), ExponentVector(n), delta};
  for (std::size_t c = 0; c < support.size(); ++c) out.kernel.add_term(support[c], v[c]);

  std::uint64_t deficit = delta * n - out.kernel.degree();
  for (std::size_t i = n; i-- > 0 && deficit > 0;) {
    std::uint32_t own = 0;
    for (const auto& [e, c] : out.kernel.terms()) own = std::max(own, e[i]);
    const std::uint64_t room = 2 * delta - 1 - own;
    const std::uint64_t take = std::min(room, deficit);
    out.padding[i] = static_cast<std::uint32_t>(take);
    deficit -= take;
  }
  out.g = out.kernel * MultiPoly::monomial(f.field, out.padding, f.field.one());
  return out;
}

namespace {

std::uint64_t binomial_u64_or_max(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c.fits_ulong_p() ? c.get_ui() : UINT64_MAX;
}

std::size_t intersection_size(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                              std::size_t stop_above) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      if (++count > stop_above) return count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t l) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (c[i] < l - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Ranks of (d+1)-subsets of [l] in the combinatorial number system.
class SubsetRanker {
 public:
  SubsetRanker(std::size_t l, std::size_t size) : size_(size), table_(l + 1, std::vector<std::uint64_t>(size + 1, 0)) {
    ok_ = binomial_u64_or_max(l, size) != UINT64_MAX;
    if (!ok_) return;
    for (std::size_t x = 0; x <= l; ++x)
      for (std::size_t j = 1; j <= size; ++j) table_[x][j] = binomial_u64_or_max(x, j);
  }
  bool ok() const noexcept { return ok_; }

  // Calls fn(rank) for every size_-subset of the sorted set s.
  template <typename Fn>
  bool for_each_subset(const std::vector<std::size_t>& s, Fn&& fn) const {
    std::vector<std::size_t> pick(size_);
    for (std::size_t i = 0; i < size_; ++i) pick[i] = i;
    do {
      std::uint64_t r = 0;
      for (std::size_t i = 0; i < size_; ++i) r += table_[s[pick[i]]][i + 1];
      if (!fn(r)) return false;
    } while (next_combination(pick, s.size()));
    return true;
  }

 private:
  std::size_t size_;
  std::vector<std::vector<std::uint64_t>> table_;
  bool ok_ = false;
};

constexpr std::uint64_t kIndexSubsetLimit = 100'000;

}  // namespace

DesignFamily greedy_design(std::size_t l, std::size_t n, std::size_t d) {
  if (!(l > n && n > d && d >= 1))
    raise(ErrorKind::BadParameters, "design parameters need l > n > d >= 1, got (" + std::to_string(l) + "," +
                                        std::to_string(n) + "," + std::to_string(d) + ")");
  if (binomial_u64_or_max(l, n) > kDesignEnumerationLimit)
    raise(ErrorKind::TooLarge, "C(l, n) exceeds the design enumeration limit");
  DesignFamily out{l, n, d, {}};

  const std::uint64_t per_member = binomial_u64_or_max(n, d + 1);
  const SubsetRanker ranker(l, d + 1);
  const bool indexed = ranker.ok() && per_member <= kIndexSubsetLimit;
  std::unordered_set<std::uint64_t> covered;

  std::vector<std::size_t> candidate(n);
  for (std::size_t i = 0; i < n; ++i) candidate[i] = i;
  do {
    bool admit;
    if (indexed && per_member < out.subsets.size()) {
      admit = ranker.for_each_subset(candidate, [&](std::uint64_t r) { return !covered.count(r); });
    } else {
      admit = std::none_of(out.subsets.begin(), out.subsets.end(), [&](const std::vector<std::size_t>& s) {
        return intersection_size(s, candidate, d) > d;
      });
    }
    if (!admit) continue;
    if (indexed) ranker.for_each_subset(candidate, [&](std::uint64_t r) { return covered.insert(r), true; });
    out.subsets.push_back(candidate);
  } while (next_combination(candidate, l));
  return out;
}

bool verify_design(const DesignFamily& f, DesignCheck method) {
  for (const auto& s : f.subsets) {
    if (s.size() != f.n) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= f.l) return false;
      if (i > 0 && s[i] <= s[i - 1]) return false;
    }
  }
  if (method == DesignCheck::Pairwise) {
    for (std::size_t i = 0; i < f.subsets.size(); ++i)
      for (std::size_t j = i + 1; j < f.subsets.size(); ++j)
        if (intersection_size(f.subsets[i], f.subsets[j], f.d) > f.d) return false;
    return true;
  }
  if (f.n <= f.d) return f.subsets.size() <= 1;
  const SubsetRanker ranker(f.l, f.d + 1);
  if (!ranker.ok()) raise(ErrorKind::TooLarge, "subset index does not fit 64-bit ranks");
  std::unordered_set<std::uint64_t> seen;
  for (const auto& s : f.subsets)
    if (!ranker.for_each_subset(s, [&](std::uint64_t r) { return seen.insert(r).second; })) return false;
  return true;
}

std::string render_design(const DesignFamily& f) {
  std::string out;
  for (const auto& s : f.subsets) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(s[i] + 1);
    }
    out += '\n';
  }
  return out;
}

Circuit hard_map_substitution(const Circuit& c, const MultiPoly& q, const DesignFamily& design) {
  if (c.arity() > design.subsets.size())
    raise(ErrorKind::DesignTooSmall, "design has " + std::to_string(design.subsets.size()) + " subsets for " +
                                         std::to_string(c.arity()) + " variables");
  if (q.arity() != design.n) raise(ErrorKind::ArityMismatch, "hard polynomial arity differs from design subset size");
  if (!(q.field() == c.field())) raise(ErrorKind::FieldMismatch, "hard polynomial over a different field");
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < c.arity(); ++i) {
    std::vector<MultiPoly> vars;
    for (auto y : design.subsets[i]) vars.push_back(MultiPoly::variable(q.field(), design.l, y));
    images.push_back(q.compose(vars));
  }
  if (images.empty()) {
    // No variables to replace; only the arity changes.
    std::vector<Gate> gates = c.gates();
    return Circuit(c.field(), design.l, std::move(gates), c.output());
  }
  return substitute(c, images);
}

std::vector<std::pair<Scalar, MultiPoly>> fischer_rewrite(const std::vector<std::vector<MultiPoly>>& terms) {
  if (terms.empty() || terms.front().empty()) raise(ErrorKind::EmptyInput, "no products to rewrite");
  const std::size_t r = terms.front().size();
  const Field field = terms.front().front().field();
  const std::size_t arity = terms.front().front().arity();
  for (const auto& t : terms) {
    if (t.size() != r) raise(ErrorKind::RaggedInput, "all products need the same number of factors");
    for (const auto& g : t) {
      if (!(g.field() == field)) detail::throw_mixed_fields(g.field(), field);
      if (g.arity() != arity) raise(ErrorKind::ArityMismatch, "factors differ in arity");
    }
  }
  field.require_char_exceeds(r, "Fischer rewriting");
  Scalar norm = field.one();
  for (std::size_t i = 1; i <= r; ++i) norm *= field.from_int(static_cast<std::int64_t>(i));
  for (std::size_t i = 1; i < r; ++i) norm *= field.from_int(2);
  const Scalar unit = norm.inverse();

  std::vector<std::pair<Scalar, MultiPoly>> out;
  for (const auto& t : terms) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (r - 1)); ++mask) {
      MultiPoly h = t[0];
      bool negative = false;
      for (std::size_t j = 1; j < r; ++j) {
        if (mask >> (j - 1) & 1) {
          h -= t[j];
          negative = !negative;
        } else {
          h += t[j];
        }
      }
      out.emplace_back(negative ? -unit : unit, std::move(h));
    }
  }
  return out;
}

Circuit local_kronecker(const Circuit& c, std::size_t beta) {
  if (beta == 0 || beta > 30) raise(ErrorKind::BadParameters, "block size must lie in 1..30");
  const std::size_t blocks = (c.arity() + beta - 1) / beta;
  std::vector<MultiPoly> images;
  for (std::size_t v = 0; v < c.arity(); ++v) {
    ExponentVector e(blocks);
    e[v / beta] = std::uint32_t{2} << (v % beta);
    images.push_back(MultiPoly::monomial(c.field(), e, c.field().one()));
  }
  if (images.empty()) return c;
  return substitute(c, images);
}

ExponentVector kronecker_image(const ExponentVector& e, std::size_t beta) {
  if (beta == 0 || beta > 30) raise(ErrorKind::BadParameters, "block size must lie in 1..30");
  ExponentVector out((e.arity() + beta - 1) / beta);
  for (std::size_t v = 0; v < e.arity(); ++v) {
    const std::uint64_t add = static_cast<std::uint64_t>(e[v]) << (v % beta + 1);
    const std::uint64_t total = out[v / beta] + add;
    if (total > UINT32_MAX) raise(ErrorKind::Overflow, "Kronecker image exponent overflows");
    out[v / beta] = static_cast<std::uint32_t>(total);
  }
  return out;
}

}  // namespace conepit
