#include <gtest/gtest.h>

#include "conepit/cone_basis.hpp"
#include "conepit/diag3.hpp"
#include "conepit/error.hpp"
#include "support/generators.hpp"

using namespace conepit;
using conepit::gen::Rng;

namespace {

DiagonalTerm term(const Field& f, std::int64_t c, std::int64_t k, std::vector<std::int64_t> a, std::uint64_t d) {
  DiagonalTerm t{f.from_int(c), f.from_int(k), {}, d};
  for (auto x : a) t.coeffs.push_back(f.from_int(x));
  return t;
}

}  // namespace

TEST(RankOfForms, Examples) {
  const Field f;
  const DiagonalCircuit a(f, 2, {term(f, 1, 1, {1, 0}, 1), term(f, 1, 2, {1, 0}, 1), term(f, 1, 0, {0, 1}, 1)});
  const auto ra = rank_of_forms(a);
  EXPECT_EQ(ra.rank, 2u);
  EXPECT_EQ(ra.basis_rows, (std::vector<std::size_t>{0, 2}));
  const DiagonalCircuit b(f, 2, {term(f, 1, 1, {0, 0}, 2), term(f, 1, 3, {0, 0}, 1)});
  EXPECT_EQ(rank_of_forms(b).rank, 0u);
  const DiagonalCircuit c(f, 3, {term(f, 1, 0, {1, 0, 0}, 1), term(f, 1, 0, {0, 1, 0}, 1), term(f, 1, 0, {0, 0, 1}, 1)});
  EXPECT_EQ(rank_of_forms(c).rank, 3u);
}

TEST(BuildPsi, Examples) {
  const Field f;
  const DiagonalCircuit a(f, 3, {term(f, 1, 0, {1, 0, 0}, 1), term(f, 1, 0, {0, 1, 0}, 1)});
  const auto pa = build_psi(a);
  EXPECT_EQ(pa.columns, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(pa.image[0], std::optional<std::size_t>(0));
  EXPECT_EQ(pa.image[1], std::optional<std::size_t>(1));
  EXPECT_FALSE(pa.image[2].has_value());

  const DiagonalCircuit b(f, 2, {term(f, 1, 0, {1, 1}, 1)});
  const auto pb = build_psi(b);
  EXPECT_EQ(pb.columns, (std::vector<std::size_t>{0}));
  EXPECT_FALSE(pb.apply(b).terms()[0].coeffs[0].is_zero());

  const DiagonalCircuit c(f, 2, {term(f, 1, 1, {0, 0}, 2)});
  try {
    build_psi(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankZero);
  }
}

TEST(BuildPsi, BasisImagesStayIndependent) {
  Rng rng(23);
  const Field f;
  for (int i = 0; i < 100; ++i) {
    // Six forms in six variables spanning a random 3-dimensional space.
    std::vector<std::vector<Scalar>> gens(3);
    for (auto& g : gens)
      for (int j = 0; j < 6; ++j) g.push_back(gen::small_scalar(f, rng, 3));
    std::vector<DiagonalTerm> terms;
    for (int t = 0; t < 6; ++t) {
      DiagonalTerm dt{f.one(), gen::small_scalar(f, rng, 2), std::vector<Scalar>(6, f.zero()), 2};
      for (const auto& g : gens) {
        const Scalar c = gen::small_scalar(f, rng, 2);
        for (int j = 0; j < 6; ++j) dt.coeffs[j] += c * g[j];
      }
      terms.push_back(dt);
    }
    const DiagonalCircuit d(f, 6, terms);
    const auto fr = rank_of_forms(d);
    if (fr.rank == 0) continue;
    const auto psi = build_psi(d);
    const auto reduced = psi.apply(d);
    EXPECT_EQ(rank_of_forms(reduced).rank, fr.rank);
  }
}

TEST(DiagPit, Examples) {
  const Field f;
  const DiagonalCircuit zero(f, 2, {term(f, 1, 1, {1, 1}, 2), term(f, -1, 1, {1, 1}, 2)});
  EXPECT_FALSE(diag_pit(zero).nonzero);
  const DiagonalCircuit two(f, 2, {term(f, 1, 1, {1, 0}, 2), term(f, 1, 1, {0, 1}, 2)});
  const auto v = diag_pit(two);
  ASSERT_TRUE(v.nonzero);
  EXPECT_EQ(*v.coefficient, f.from_int(2));
  const DiagonalCircuit constant(f, 3, {term(f, 2, 3, {0, 0, 0}, 2)});
  EXPECT_TRUE(diag_pit(constant).nonzero);
  const DiagonalCircuit p5(Field::prime(5), 1, {term(Field::prime(5), 1, 0, {1}, 5)});
  EXPECT_THROW(diag_pit(p5), Error);
}

TEST(DiagPit, AgreesWithBruteForce) {
  Rng rng(24);
  const Field f;
  for (int i = 0; i < 120; ++i) {
    const std::size_t n = gen::uniform(rng, 1, 4);
    const DiagonalCircuit d = i % 3 == 0 ? gen::zero_diagonal(f, n, 5, 5, rng)
                                         : gen::random_diagonal(f, n, gen::uniform(rng, 1, 5), 5, rng);
    const auto v = diag_pit(d);
    EXPECT_EQ(v.nonzero, brute_force_pit(d.oracle()).nonzero);
    if (i % 3 == 0) EXPECT_FALSE(v.nonzero);
  }
}

TEST(DiagPit, PsiPreservesNonzero) {
  Rng rng(25);
  const Field f;
  for (int i = 0; i < 100; ++i) {
    const DiagonalCircuit d = gen::random_diagonal(f, gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 4), 4, rng);
    if (!brute_force_pit(d.oracle()).nonzero || rank_of_forms(d).rank == 0) continue;
    EXPECT_TRUE(brute_force_pit(build_psi(d).apply(d).oracle()).nonzero);
  }
}

TEST(DiagonalCircuit, CircuitAndExpansionAgree) {
  Rng rng(26);
  const Field f;
  for (int i = 0; i < 50; ++i) {
    const DiagonalCircuit d = gen::random_diagonal(f, 3, 3, 4, rng);
    const auto via_circuit = dense_expand(Oracle::from_circuit(d.to_circuit()));
    EXPECT_EQ(via_circuit, d.expand());
    EXPECT_EQ(syntactic_degree(d.to_circuit()) <= d.max_degree(), true);
  }
}

TEST(DiagonalCircuit, JsonRoundTrip) {
  const Field q = Field::rationals();
  const DiagonalCircuit d(q, 2, {term(q, 3, -1, {2, 0}, 4), {q.parse_scalar("1/2"), q.zero(), {q.one(), q.one()}, 1}});
  const auto back = parse_diagonal(serialize(d));
  EXPECT_EQ(back.expand(), d.expand());
  EXPECT_THROW(parse_diagonal(R"({"field":"q","arity":2,"terms":[{"c":"1","const":"0","coeffs":["1"],"d":1}]})"), Error);
}

TEST(DiagPowerVectorPoly, Examples) {
  const Field q = Field::rationals();
  const auto one = diag_power_vectorpoly(Matrix::from_rows(q, {{q.one()}}), 2);
  EXPECT_EQ(one.coeff({0}), std::vector<Scalar>{q.one()});
  EXPECT_EQ(one.coeff({1}), std::vector<Scalar>{q.from_int(2)});
  EXPECT_EQ(one.coeff({2}), std::vector<Scalar>{q.one()});

  const auto a = Matrix::from_rows(q, {{q.one(), q.one()}, {q.one(), q.from_int(2)}});
  const auto two = diag_power_vectorpoly(a, 2);
  auto v = [&](std::int64_t x, std::int64_t y) { return std::vector<Scalar>{q.from_int(x), q.from_int(y)}; };
  EXPECT_EQ(two.coeff({0, 0}), v(1, 1));
  EXPECT_EQ(two.coeff({1, 0}), v(2, 2));
  EXPECT_EQ(two.coeff({0, 1}), v(2, 4));
  EXPECT_EQ(two.coeff({1, 1}), v(2, 4));
  EXPECT_EQ(two.coeff({2, 0}), v(1, 1));
  EXPECT_EQ(two.coeff({0, 2}), v(1, 4));
  EXPECT_EQ(greedy_basis(two), (std::vector<ExponentVector>{{0, 0}, {0, 1}}));

  const auto zero_deg = diag_power_vectorpoly(a, 0);
  EXPECT_EQ(zero_deg.support(), (std::vector<ExponentVector>{{0, 0}}));
  EXPECT_EQ(zero_deg.coeff({0, 0}), v(1, 1));
  EXPECT_THROW(diag_power_vectorpoly(Matrix::from_rows(Field::prime(3), {{Field::prime(3).one()}}), 3), Error);
}

TEST(DiagPowerVectorPoly, MatchesComponentExpansion) {
  Rng rng(27);
  const Field f;
  for (int i = 0; i < 30; ++i) {
    Matrix a(f, 3, 2);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 2; ++c) a(r, c) = gen::small_scalar(f, rng, 4);
    const auto vp = diag_power_vectorpoly(a, 3);
    for (std::size_t t = 0; t < 3; ++t) {
      MultiPoly form = MultiPoly::constant(f, 2, f.one());
      for (std::size_t j = 0; j < 2; ++j) form += MultiPoly::variable(f, 2, j) * a(t, j);
      EXPECT_EQ(vp.component(t), form.pow(3));
    }
  }
}

TEST(DiagPowerVectorPoly, GreedyBasisIsConeClosed) {
  Rng rng(28);
  const Field f;
  for (int i = 0; i < 60; ++i) {
    const std::size_t k = gen::uniform(rng, 1, 4), n = gen::uniform(rng, 1, 4);
    Matrix a(f, k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = gen::small_scalar(f, rng, 5);
    EXPECT_TRUE(is_cone_closed(greedy_basis(diag_power_vectorpoly(a, gen::uniform(rng, 0, 5)))));
  }
}
