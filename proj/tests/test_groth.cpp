#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vpoly/error.hpp"
#include "vpoly/ffcount.hpp"
#include "vpoly/groth.hpp"
#include "vpoly/vpolynomial.hpp"

using namespace vpoly;

namespace {

const TorusPoly T = TorusPoly::t();
const TorusPoly one = TorusPoly::constant(1);

TorusPoly random_torus(std::mt19937_64& rng) {
  std::vector<BigInt> c(rng() % 5);
  for (auto& v : c) v = static_cast<long>(rng() % 13) - 6;
  return TorusPoly(std::move(c));
}

BigInt ipow(long b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST(TorusPoly, CanonicalAndText) {
  EXPECT_TRUE(TorusPoly({0, 0}).is_zero());
  EXPECT_EQ(TorusPoly({1, 2, 0}).degree(), 1);
  EXPECT_EQ(TorusPoly().to_string(), "0");
  EXPECT_EQ(TorusPoly({-1, 0, 3}).to_string(), "3*T^2 - 1");
  EXPECT_EQ(TorusPoly({0, -1}).to_string(), "-T");
}

TEST(TorusPoly, SubstitutionIsAHomomorphism) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    auto a = random_torus(rng), b = random_torus(rng);
    for (long v : {-2, 1, 4}) {
      EXPECT_EQ((a * b).evaluate(v), a.evaluate(v) * b.evaluate(v));
      EXPECT_EQ((a + b).evaluate(v), a.evaluate(v) + b.evaluate(v));
    }
  }
}

TEST(BananaBase, Expansions) {
  EXPECT_EQ(banana_base(0).to_string(), "T^4 + 3*T^3 + 2*T^2");
  EXPECT_EQ(banana_base(0), T * T * (T + one) * (T + TorusPoly::constant(2)));
  EXPECT_EQ(banana_base(1), T * (T + one) * (T.pow(3) + TorusPoly({1, 2, 3})));
  EXPECT_EQ(banana_base(0).evaluate(1), 6);
  EXPECT_THROW(banana_base(2), InputError);
}

TEST(BananaRecursion, AnchorsAndStepTwo) {
  EXPECT_EQ(banana_recursion(0), banana_base(0));
  EXPECT_EQ(banana_recursion(1), banana_base(1));
  EXPECT_EQ(banana_recursion(2),
            TorusPoly({1, 2}) * banana_base(1) - T * (T + one) * banana_base(0));
}

TEST(BananaClosed, MatchesRecursion) {
  EXPECT_EQ(banana_closed(0), banana_base(0));
  EXPECT_EQ(banana_closed(1), banana_base(1));
  for (std::size_t m = 0; m <= 20; ++m) EXPECT_EQ(banana_closed(m), banana_recursion(m)) << m;
}

TEST(ClosedFromBases, Examples) {
  EXPECT_EQ(closed_from_bases(banana_base(0), banana_base(1), 5), banana_closed(5));
  for (std::size_t m = 0; m < 6; ++m) {
    EXPECT_TRUE(closed_from_bases({}, {}, m).is_zero());
    EXPECT_EQ(closed_from_bases(one, T + one, m), (T + one).pow(static_cast<unsigned>(m)));
  }
}

TEST(ClosedFromBases, SatisfiesTheRecursionForRandomAnchors) {
  std::mt19937_64 rng(2);
  const TorusPoly a = TorusPoly({1, 2});
  const TorusPoly b = T * (T + one);
  for (int i = 0; i < 50; ++i) {
    auto b0 = random_torus(rng), b1 = random_torus(rng);
    EXPECT_EQ(closed_from_bases(b0, b1, 0), b0);
    EXPECT_EQ(closed_from_bases(b0, b1, 1), b1);
    for (std::size_t m = 2; m <= 10; ++m)
      EXPECT_EQ(closed_from_bases(b0, b1, m),
                a * closed_from_bases(b0, b1, m - 1) - b * closed_from_bases(b0, b1, m - 2));
  }
}

TEST(NoFieldBanana, Examples) {
  EXPECT_EQ(no_field_banana(0), T * T);
  EXPECT_EQ(no_field_banana(1), T + (T - one) * (T + one).pow(2));
  for (std::size_t m = 0; m <= 20; ++m) EXPECT_NE(no_field_banana(m), banana_closed(m));
}

TEST(EulerChar, ClosedForm) {
  EXPECT_EQ(euler_char_c(banana_closed(1)), 2);
  EXPECT_EQ(euler_char_c(banana_closed(2)), -6);
  EXPECT_EQ(euler_char_c(TorusPoly()), 0);
  for (unsigned m = 0; m <= 20; ++m)
    EXPECT_EQ(euler_char_c(banana_closed(m)), ipow(-2, m + 1) + ipow(-1, m) * 2) << m;
}

TEST(ClassToCount, Examples) {
  EXPECT_EQ(class_to_count(banana_closed(0), 2), 6);
  EXPECT_EQ(class_to_count(banana_closed(1), 2), 14);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto c = random_torus(rng);
    EXPECT_EQ(class_to_count(c, 2), c.evaluate(1));
  }
  EXPECT_THROW(class_to_count(banana_closed(0), 4), InputError);
}

TEST(ClassToCount, BridgeToPointCounts) {
  for (std::size_t m = 0; m <= 2; ++m) {
    auto poly = fk_polynomial(make_banana(m, 1, 2));
    auto amb = variables_of(poly);
    ASSERT_EQ(amb.size(), m + 4);
    for (std::uint64_t p : {2, 3, 5}) {
      const BigInt zeros = oracle::count_zeros(poly, amb, p);
      EXPECT_EQ(class_to_count(banana_closed(m), p), ipow(static_cast<long>(p), m + 4) - zeros)
          << "m=" << m << " p=" << p;
    }
  }
}
