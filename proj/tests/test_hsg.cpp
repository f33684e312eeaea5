#include <gtest/gtest.h>

#include <set>

#include "conepit/error.hpp"
#include "conepit/hsg.hpp"
#include "conepit/pit.hpp"
#include "support/generators.hpp"

using namespace conepit;
using conepit::gen::Rng;

namespace {

UnivariatePoly upoly(const Field& f, std::vector<std::int64_t> c) {
  std::vector<Scalar> s;
  for (auto x : c) s.push_back(f.from_int(x));
  return UnivariatePoly(f, s);
}

// g(f_1(y), ..., f_n(y)) as a univariate.
UnivariatePoly substitute_tuple(const MultiPoly& g, const HsgTuple& f) {
  std::vector<MultiPoly> images;
  for (const auto& p : f.polys) {
    MultiPoly m(f.field, 1);
    for (std::size_t j = 0; j < p.coeffs().size(); ++j)
      m.add_term(ExponentVector{static_cast<std::uint32_t>(j)}, p.coeffs()[j]);
    images.push_back(m);
  }
  const MultiPoly out = g.compose(images);
  std::vector<Scalar> dense(out.degree() + 1, f.field.zero());
  for (const auto& [e, c] : out.terms()) dense[e[0]] = c;
  return UnivariatePoly(f.field, dense);
}

void check_annihilator(const HsgTuple& f) {
  const auto res = build_annihilator(f);
  const std::uint64_t delta = annihilator_delta(f.arity(), f.degree());
  EXPECT_EQ(res.delta, delta);
  EXPECT_FALSE(res.g.is_zero());
  EXPECT_TRUE(substitute_tuple(res.g, f).is_zero());
  EXPECT_LT(res.g.individual_degree(), 2 * delta);
  EXPECT_LT(res.kernel.individual_degree(), delta);
  EXPECT_EQ(res.g.degree(), delta * f.arity()) << res.g.to_string();
  if (f.field.is_rational())
    for (const auto& [e, c] : res.g.terms()) EXPECT_TRUE(c.is_integral());
}

}  // namespace

TEST(Annihilator, Delta) {
  EXPECT_EQ(annihilator_delta(2, 2), 5u);  // δ > 4
  EXPECT_EQ(annihilator_delta(3, 1), 2u);  // δ^2 > 3
  EXPECT_EQ(annihilator_delta(4, 6), 3u);  // δ^3 > 24
  EXPECT_THROW(annihilator_delta(1, 3), Error);
}

TEST(Annihilator, YAndYSquared) {
  const Field q = Field::rationals();
  const HsgTuple f{q, {upoly(q, {0, 1}), upoly(q, {0, 0, 1})}};
  check_annihilator(f);
  const auto res = build_annihilator(f);
  // x1^2 - x2 divides the kernel polynomial here: the kernel is its first vector.
  EXPECT_EQ(res.kernel, parse_poly("x1^2 - x2", q, 2));
  EXPECT_EQ(res.g, parse_poly("x1^2*x2^8 - x2^9", q, 2));
}

TEST(Annihilator, YAndY) {
  const Field q = Field::rationals();
  const HsgTuple f{q, {upoly(q, {0, 1}), upoly(q, {0, 1})}};
  check_annihilator(f);
  EXPECT_EQ(build_annihilator(f).kernel, parse_poly("x1 - x2", q, 2));
}

TEST(Annihilator, Errors) {
  const Field q = Field::rationals();
  try {
    build_annihilator({q, {upoly(q, {0, 1})}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityTooSmall);
  }
  EXPECT_THROW(build_annihilator({q, {upoly(q, {1}), upoly(q, {2})}}), Error);
  EXPECT_THROW(build_annihilator({q, {upoly(q, {0, 1}), upoly(q, {})}}), Error);
}

TEST(Annihilator, RandomTuples) {
  Rng rng(19);
  for (const Field f : {Field::rationals(), Field()}) {
    for (int i = 0; i < 25; ++i) {
      const std::size_t n = gen::uniform(rng, 2, 4);
      const std::uint64_t d = gen::uniform(rng, 1, n == 2 ? 4 : 3);
      check_annihilator(gen::random_hsg(f, n, d, rng));
    }
  }
}

TEST(Annihilator, JsonRoundTrip) {
  const Field q = Field::rationals();
  const HsgTuple f{q, {upoly(q, {0, 1}), upoly(q, {3, 0, -2})}};
  const auto back = parse_hsg(serialize(f));
  EXPECT_EQ(back.polys, f.polys);
  EXPECT_THROW(parse_hsg(R"({"field":"q","degree":3,"polys":[["0","1"]]})"), Error);
}

TEST(GreedyDesign, Examples) {
  const auto pairs = greedy_design(5, 2, 1);
  EXPECT_EQ(pairs.subsets.size(), 10u);
  const auto triples = greedy_design(4, 3, 2);
  EXPECT_EQ(triples.subsets.size(), 4u);
  try {
    greedy_design(3, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParameters);
  }
  EXPECT_THROW(greedy_design(5, 3, 0), Error);
  EXPECT_THROW(greedy_design(200, 6, 2), Error);
}

TEST(GreedyDesign, Rendering) {
  EXPECT_EQ(render_design(greedy_design(4, 3, 2)), "1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
}

TEST(GreedyDesign, GreedyOrderIsLexicographic) {
  // (7,3,1): the lexicographic greedy yields the Fano-like family starting at {1,2,3}.
  const auto f = greedy_design(7, 3, 1);
  ASSERT_FALSE(f.subsets.empty());
  EXPECT_EQ(f.subsets.front(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(f.subsets[1], (std::vector<std::size_t>{0, 3, 4}));
  EXPECT_TRUE(verify_design(f));
}

TEST(GreedyDesign, VerificationMethodsAgree) {
  for (std::size_t l = 3; l <= 11; ++l)
    for (std::size_t n = 2; n < l; ++n)
      for (std::size_t d = 1; d < n; ++d) {
        const auto f = greedy_design(l, n, d);
        EXPECT_TRUE(verify_design(f, DesignCheck::Pairwise));
        EXPECT_TRUE(verify_design(f, DesignCheck::SubsetIndex));
      }
  DesignFamily bad{6, 3, 1, {{0, 1, 2}, {0, 1, 3}}};
  EXPECT_FALSE(verify_design(bad, DesignCheck::Pairwise));
  EXPECT_FALSE(verify_design(bad, DesignCheck::SubsetIndex));
  DesignFamily ragged{6, 3, 1, {{0, 1}}};
  EXPECT_FALSE(verify_design(ragged));
}

TEST(GreedyDesign, MaximalFamily) {
  // Greedy output is maximal: every rejected subset meets some member in > d points.
  const auto f = greedy_design(9, 4, 2);
  std::set<std::vector<std::size_t>> members(f.subsets.begin(), f.subsets.end());
  std::vector<std::size_t> c{0, 1, 2, 3};
  auto meet = [](const auto& a, const auto& b) {
    std::size_t k = 0;
    for (auto x : a) k += std::count(b.begin(), b.end(), x);
    return k;
  };
  do {
    if (members.count(c)) continue;
    EXPECT_TRUE(std::any_of(f.subsets.begin(), f.subsets.end(), [&](const auto& s) { return meet(s, c) > 2; }));
  } while ([&] {
    std::size_t i = 4;
    while (i-- > 0) {
      if (c[i] < 9 - 4 + i) {
        ++c[i];
        for (std::size_t j = i + 1; j < 4; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  }());
}

TEST(HardMap, DisjointDesignSums) {
  const Field q = Field::rationals();
  const DesignFamily design{4, 2, 1, {{0, 1}, {2, 3}}};
  const auto sum = parse_poly("x1 + x2", q, 2);
  CircuitBuilder b(q, 2);
  const auto x = b.input(0), y = b.input(1);
  const Circuit c = std::move(b).build(b.mul({x, y}));
  const Circuit out = hard_map_substitution(c, sum, design);
  EXPECT_EQ(out.arity(), 4u);
  EXPECT_EQ(dense_expand(Oracle::from_circuit(out)), parse_poly("x1*x3 + x1*x4 + x2*x3 + x2*x4", q, 4));
}

TEST(HardMap, ZeroStaysZeroAndNonzeroOnRandom) {
  Rng rng(20);
  const Field f;
  const auto design = greedy_design(5, 2, 1);
  const auto qpoly = parse_poly("x1*x2 + x1 + 3", f, 2);
  CircuitBuilder z(f, 3);
  const Circuit zero = std::move(z).build(z.constant(0));
  EXPECT_FALSE(brute_force_pit(Oracle::from_circuit(hard_map_substitution(zero, qpoly, design))).nonzero);
  for (int i = 0; i < 20; ++i) {
    const Circuit c = gen::random_circuit(f, 3, 8, 2, rng);
    const bool nz = brute_force_pit(Oracle::from_circuit(c)).nonzero;
    const auto img = hard_map_substitution(c, qpoly, design);
    if (nz) EXPECT_TRUE(sz_pit(Oracle::from_circuit(img), 5, i).nonzero);
  }
}

TEST(HardMap, Errors) {
  const Field f;
  CircuitBuilder b(f, 3);
  const Circuit c = std::move(b).build(b.input(2));
  const DesignFamily small{4, 2, 1, {{0, 1}}};
  try {
    hard_map_substitution(c, parse_poly("x1", f, 2), small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DesignTooSmall);
  }
  EXPECT_THROW(hard_map_substitution(c, parse_poly("x1", f, 3), greedy_design(5, 2, 1)), Error);
}

TEST(Fischer, TwoFactors) {
  const Field q = Field::rationals();
  const auto out = fischer_rewrite({{parse_poly("x1", q, 2), parse_poly("x2", q, 2)}});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].first, q.parse_scalar("1/4"));
  EXPECT_EQ(out[0].second, parse_poly("x1 + x2", q, 2));
  EXPECT_EQ(out[1].first, q.parse_scalar("-1/4"));
  EXPECT_EQ(out[1].second, parse_poly("x1 - x2", q, 2));
}

TEST(Fischer, SingleFactor) {
  const Field q = Field::rationals();
  const auto g = parse_poly("x1^2 + 3", q, 1);
  const auto out = fischer_rewrite({{g}});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].first, q.one());
  EXPECT_EQ(out[0].second, g);
}

TEST(Fischer, RandomProductsUpToFive) {
  Rng rng(21);
  const Field q = Field::rationals();
  for (std::size_t r = 1; r <= 5; ++r) {
    for (int i = 0; i < 8; ++i) {
      const std::size_t k = gen::uniform(rng, 1, 3);
      std::vector<std::vector<MultiPoly>> terms(k);
      MultiPoly target(q, 3);
      for (auto& t : terms) {
        MultiPoly prod = MultiPoly::constant(q, 3, q.one());
        for (std::size_t j = 0; j < r; ++j) {
          t.push_back(gen::random_sparse_poly(q, 3, 1, 3, rng));
          prod = prod * t.back();
        }
        target += prod;
      }
      const auto out = fischer_rewrite(terms);
      EXPECT_LE(out.size(), k << r);
      MultiPoly sum(q, 3);
      for (const auto& [c, h] : out) sum += h.pow(r) * c;
      EXPECT_EQ(sum, target);
    }
  }
}

TEST(Fischer, Errors) {
  const Field q = Field::rationals();
  const auto x = parse_poly("x1", q, 1);
  EXPECT_THROW(fischer_rewrite({{x, x}, {x}}), Error);
  EXPECT_THROW(fischer_rewrite({}), Error);
  const Field p3 = Field::prime(3);
  const auto y = parse_poly("x1", p3, 1);
  try {
    fischer_rewrite({{y, y, y}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CharTooSmall);
  }
}

TEST(LocalKronecker, Examples) {
  const Field q = Field::rationals();
  CircuitBuilder b(q, 4);
  std::vector<std::size_t> in;
  for (std::size_t i = 0; i < 4; ++i) in.push_back(b.input(i));
  const Circuit c = std::move(b).build(b.mul({in[0], in[2]}));
  const Circuit k = local_kronecker(c, 2);
  EXPECT_EQ(k.arity(), 2u);
  EXPECT_EQ(dense_expand(Oracle::from_circuit(k)), parse_poly("x1^2*x2^2", q, 2));
  EXPECT_EQ(kronecker_image({1, 0, 0, 0}, 2), ExponentVector({2, 0}));
  EXPECT_EQ(kronecker_image({0, 1, 0, 0}, 2), ExponentVector({4, 0}));
  EXPECT_EQ(kronecker_image({0, 0, 1, 1}, 2), ExponentVector({0, 6}));
  EXPECT_EQ(kronecker_image({1, 1, 1}, 1), ExponentVector({2, 2, 2}));
  EXPECT_EQ(kronecker_image({1, 1, 1}, 2), ExponentVector({6, 2}));  // padded block
}

TEST(LocalKronecker, InjectiveOnMultilinear) {
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t beta = 1; beta <= 4; ++beta) {
      std::set<ExponentVector> images;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        ExponentVector e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = mask >> i & 1;
        images.insert(kronecker_image(e, beta));
      }
      EXPECT_EQ(images.size(), std::size_t{1} << n) << "n=" << n << " beta=" << beta;
    }
}

TEST(LocalKronecker, PreservesNonzeroMultilinear) {
  Rng rng(22);
  const Field f;
  for (int i = 0; i < 200; ++i) {
    MultiPoly p(f, 4);
    for (int t = 0, terms = static_cast<int>(gen::uniform(rng, 1, 5)); t < terms; ++t) {
      ExponentVector e(4);
      for (std::size_t j = 0; j < 4; ++j) e[j] = static_cast<std::uint32_t>(gen::uniform(rng, 0, 1));
      p.add_term(e, gen::small_scalar(f, rng, 5));
    }
    if (p.is_zero()) continue;
    const Circuit img = local_kronecker(circuit_from_poly(p), 2);
    EXPECT_TRUE(brute_force_pit(Oracle::from_circuit(img)).nonzero);
  }
}
