#include <gtest/gtest.h>

#include <random>

#include "ledc/poly.hpp"

using namespace ledc;

namespace {

PolyGF random_poly(const PrimeField& f, int max_deg, std::mt19937& rng) {
  std::vector<long long> c(static_cast<std::size_t>(rng() % static_cast<unsigned>(max_deg + 2)));
  for (auto& x : c) x = static_cast<long long>(rng() % f.order());
  return PolyGF::from_ints(f, c);
}

}  // namespace

TEST(Poly, NormalizesTrailingZeros) {
  const auto f = make_field(7);
  const auto p = PolyGF::from_ints(f, {1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.to_ints(), (std::vector<long long>{1, 2}));
  EXPECT_TRUE(PolyGF::from_ints(f, {0, 0}).is_zero());
  EXPECT_EQ(PolyGF(f).degree(), PolyGF::kZeroDegree);
  EXPECT_EQ(PolyGF::from_ints(f, {-1, 8}).to_ints(), (std::vector<long long>{6, 1}));
}

TEST(Poly, SquareOfOnePlusXOverF2) {
  const auto f = make_field(2);
  const auto p = PolyGF::from_ints(f, {1, 1});
  EXPECT_EQ(poly_mul(p, p).to_ints(), (std::vector<long long>{1, 0, 1}));
}

TEST(Poly, LinearFactorProducts) {
  const auto f13 = make_field(13);
  const std::vector<Felt> roots{Felt{1}, Felt{2}, Felt{4}, Felt{8}};
  const auto u = linear_factor_product(f13, roots);
  EXPECT_EQ(u.to_ints(), (std::vector<long long>{12, 10, 5, 11, 1}));
  for (Felt z : roots) EXPECT_TRUE(poly_eval(u, z).is_zero());

  const auto f7 = make_field(7);
  EXPECT_EQ(linear_factor_product(f7, std::vector<Felt>{}).to_ints(), (std::vector<long long>{1}));
  const auto g = linear_factor_product(f7, std::vector<Felt>{Felt{1}, Felt{3}});
  EXPECT_EQ(g.to_ints(), (std::vector<long long>{3, 3, 1}));
  EXPECT_TRUE(poly_eval(g, Felt{1}).is_zero());
  EXPECT_TRUE(poly_eval(g, Felt{3}).is_zero());
}

TEST(Poly, ExactDivision) {
  const auto f = make_field(13);
  const auto g1 = linear_factor_product(f, std::vector<Felt>{Felt{1}, Felt{2}, Felt{4}});
  const auto h = PolyGF::from_ints(f, {3, 0, 7, 1});
  const auto [quot, rem] = poly_divrem(poly_mul(g1, h), g1);
  EXPECT_EQ(quot, h);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_TRUE(poly_divides(g1, poly_mul(g1, h)));
  EXPECT_FALSE(poly_divides(g1, poly_add(poly_mul(g1, h), PolyGF::constant(f, Felt{1}))));
  EXPECT_THROW(poly_divrem(h, PolyGF(f)), Error);
}

TEST(Poly, CoefficientRows) {
  const auto f = make_field(13);
  const auto u = PolyGF::from_ints(f, {12, 10, 5, 11, 1});
  const auto row = coeffs_to_row(u, 0, 5);
  EXPECT_EQ(row_to_poly(f, row), u);
  EXPECT_EQ(row, (std::vector<Felt>{Felt{12}, Felt{10}, Felt{5}, Felt{11}, Felt{1}}));
  EXPECT_EQ(coeffs_to_row(PolyGF::constant(f, f.one()), 3, 5),
            (std::vector<Felt>{Felt{0}, Felt{0}, Felt{0}, Felt{1}, Felt{0}}));
  try {
    coeffs_to_row(u, 1, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Overflow);
  }
  EXPECT_EQ(coeffs_to_row(PolyGF(f), 9, 3), std::vector<Felt>(3, Felt{0}));
}

TEST(PolyProperty, RootsAreExactlyTheGivenOnes) {
  std::mt19937 rng(23);
  for (std::uint64_t q : {2, 3, 5, 7, 13, 31, 101}) {
    const auto f = make_field(q);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Felt> roots;
      std::vector<bool> is_root(q, false);
      for (std::uint32_t z = 0; z < q; ++z)
        if (rng() % 3 == 0) {
          roots.push_back(Felt{z});
          is_root[z] = true;
        }
      const auto p = linear_factor_product(f, roots);
      ASSERT_EQ(p.degree(), static_cast<int>(roots.size()));
      for (std::uint32_t z = 0; z < q; ++z) ASSERT_EQ(poly_eval(p, Felt{z}).is_zero(), is_root[z]);
    }
  }
}

TEST(PolyProperty, EvaluationIsMultiplicativeAndAdditive) {
  std::mt19937 rng(29);
  const auto f = make_field(101);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_poly(f, 8, rng), r = random_poly(f, 8, rng);
    const Felt z{static_cast<std::uint32_t>(rng() % 101)};
    ASSERT_EQ(poly_eval(poly_mul(p, r), z), f.mul(poly_eval(p, z), poly_eval(r, z)));
    ASSERT_EQ(poly_eval(poly_add(p, r), z), f.add(poly_eval(p, z), poly_eval(r, z)));
    if (!p.is_zero() && !r.is_zero()) {
      ASSERT_EQ(poly_mul(p, r).degree(), p.degree() + r.degree());
    }
    if (!r.is_zero()) {
      const auto [quot, rem] = poly_divrem(p, r);
      ASSERT_EQ(poly_add(poly_mul(quot, r), rem), p);
      ASSERT_TRUE(rem.is_zero() || rem.degree() < r.degree());
    }
  }
}

TEST(PolyProperty, RowsAreInjectiveAndStripShift) {
  std::mt19937 rng(31);
  const auto f = make_field(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(f, 5, rng);
    const std::size_t shift = rng() % 4;
    const auto row = coeffs_to_row(p, shift, 12);
    for (std::size_t j = 0; j < shift; ++j) ASSERT_TRUE(row[j].is_zero());
    const std::vector<Felt> tail(row.begin() + static_cast<long>(shift), row.end());
    ASSERT_EQ(row_to_poly(f, tail), p);
    ASSERT_EQ(row_to_poly(f, row), poly_shift(p, shift));
  }
}
