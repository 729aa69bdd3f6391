#include <gtest/gtest.h>

#include <random>

#include "vpoly/assignment.hpp"
#include "vpoly/error.hpp"
#include "vpoly/multipoly.hpp"

using namespace vpoly;

namespace {

MultiPoly t(const std::string& e) { return MultiPoly::variable(VarKey::t(e)); }
MultiPoly x(std::uint64_t s) { return MultiPoly::variable(VarKey::x(Weight{s})); }
MultiPoly c(long v) { return MultiPoly::constant(v); }

MultiPoly random_poly(std::mt19937_64& rng, int max_terms = 5) {
  const std::vector<VarKey> vars{VarKey::t("e1"), VarKey::t("e2"), VarKey::x(Weight{0}), VarKey::x(Weight{3})};
  MultiPoly p;
  const int n = static_cast<int>(rng() % (max_terms + 1));
  for (int i = 0; i < n; ++i) {
    std::vector<Monomial::Factor> f;
    for (const auto& v : vars)
      if (auto e = rng() % 3) f.emplace_back(v, static_cast<std::uint32_t>(e));
    p.add_term(Monomial(std::move(f)), BigInt(static_cast<long>(rng() % 11) - 5));
  }
  return p;
}

}  // namespace

TEST(VarKey, Order) {
  EXPECT_LT(VarKey::t("e2"), VarKey::x(Weight{0}));
  EXPECT_LT(VarKey::t("e1"), VarKey::t("e2"));
  EXPECT_LT(VarKey::t("e10"), VarKey::t("e2"));
  EXPECT_LT(VarKey::x(Weight{1, 0}), VarKey::x(Weight{1, 2}));
  EXPECT_EQ(VarKey::x(Weight{1, 0, 2}).to_string(), "x[1,0,2]");
  EXPECT_EQ(VarKey::t("e1").to_string(), "t[e1]");
}

TEST(MultiPoly, Distributivity) {
  auto p = (t("e1") + c(1)) * x(1);
  EXPECT_EQ(p.to_string(), "t[e1]*x[1] + x[1]");
  EXPECT_EQ(p, t("e1") * x(1) + x(1));
}

TEST(MultiPoly, AdditiveInverseIsEmpty) {
  auto p = t("e1") * x(1) + x(2) * x(2);
  auto z = p + BigInt(-1) * p;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.term_count(), 0u);
  EXPECT_EQ(z.to_string(), "0");
  EXPECT_TRUE((p - p).is_zero());
}

TEST(MultiPoly, ChangeOfVariablesIdentity) {
  // t_e + t_f + t_e t_f = (1 + t_e)(1 + t_f) - 1.
  auto lhs = t("e1") + t("e2") + t("e1") * t("e2");
  auto rhs = (c(1) + t("e1")) * (c(1) + t("e2")) - c(1);
  EXPECT_EQ(lhs, rhs);
}

TEST(MultiPoly, RenderingAndSigns) {
  auto p = c(3) * t("e1") * t("e1") - x(2) + c(-7);
  EXPECT_EQ(p.to_string(), "3*t[e1]^2 - x[2] - 7");
  EXPECT_EQ((c(0) - x(1)).to_string(), "-x[1]");
  EXPECT_EQ(c(5).to_string(), "5");
}

TEST(MultiPoly, GrlexOrder) {
  auto p = x(1) * x(1) * x(1) + t("e1") * x(3) + t("e1") * t("e2") * x(3) + t("e2") * x(1) * x(2);
  EXPECT_EQ(p.to_string(), "t[e1]*t[e2]*x[3] + t[e2]*x[1]*x[2] + x[1]^3 + t[e1]*x[3]");
}

TEST(MultiPoly, ArbitraryPrecision) {
  auto p = c(1) + t("e1");
  auto q = c(1);
  for (int i = 0; i < 80; ++i) q *= p;
  // Coefficient of t^40 in (1 + t)^80 exceeds 2^64.
  BigInt binom = 1;
  for (int k = 0; k < 40; ++k) binom = binom * (80 - k) / (k + 1);
  EXPECT_GT(binom, BigInt(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_EQ(q.coefficient(Monomial::of(VarKey::t("e1"), 40)), binom);
}

TEST(MultiPoly, ParseRoundTrip) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    auto p = random_poly(rng);
    EXPECT_EQ(MultiPoly::parse(p.to_string()), p) << p.to_string();
  }
  auto q = MultiPoly::parse("t[e1]*x[1,0,2]^2 - 4");
  EXPECT_EQ(q.to_string(), "t[e1]*x[1,0,2]^2 - 4");
  EXPECT_THROW(MultiPoly::parse("t[e1]*"), InputError);
  EXPECT_THROW(MultiPoly::parse("y[3]"), InputError);
}

TEST(MultiPoly, RingLaws) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng), b = random_poly(rng), d = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + d, a + (b + d));
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * (b + d), a * b + a * d);
  }
}

TEST(MultiPoly, CanonicalFormHasNoZeros) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(rng) * random_poly(rng) - random_poly(rng);
    for (const auto& [m, coeff] : p.terms()) {
      EXPECT_NE(coeff, 0);
      for (const auto& [v, e] : m.factors()) EXPECT_GT(e, 0u);
    }
  }
}

TEST(VariablesOf, Examples) {
  EXPECT_TRUE(variables_of(MultiPoly{}).empty());
  auto p = x(3) * t("e2") + x(1) + t("e1");
  EXPECT_EQ(variables_of(p),
            (std::vector<VarKey>{VarKey::t("e1"), VarKey::t("e2"), VarKey::x(Weight{1}), VarKey::x(Weight{3})}));
}

TEST(Evaluate, Examples) {
  Assignment<PrimeField> a(PrimeField(5));
  a.set_x(Weight{1}, 2);
  EXPECT_EQ(evaluate(x(1) * x(1) * x(1), a), 3u);

  Assignment<IntegerRing> zero;
  EXPECT_EQ(evaluate(t("e1") * x(2) + x(1), zero), 0);

  Assignment<RationalRing> r;
  r.set_t("e1", Rational(1, 2));
  r.set_default_x(Rational(3));
  EXPECT_EQ(evaluate(t("e1") * x(7) + c(1), r), Rational(5, 2));
}

TEST(Evaluate, FloatOverflowRaises) {
  Assignment<FloatRing> a;
  a.set_default_x(1e200);
  EXPECT_THROW(evaluate(x(1) * x(2), a), EvaluationError);
}

TEST(Evaluate, IsARingHomomorphism) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(rng), q = random_poly(rng);
    Assignment<IntegerRing> zi;
    Assignment<PrimeField> fp(PrimeField(101));
    for (const auto& v : {VarKey::t("e1"), VarKey::t("e2"), VarKey::x(Weight{0}), VarKey::x(Weight{3})}) {
      const long val = static_cast<long>(rng() % 41) - 20;
      zi.set(v, val);
      fp.set(v, fp.ring().from_integer(val));
    }
    EXPECT_EQ(evaluate(p * q, zi), evaluate(p, zi) * evaluate(q, zi));
    EXPECT_EQ(evaluate(p + q, zi), evaluate(p, zi) + evaluate(q, zi));
    EXPECT_EQ(evaluate(p * q, fp), fp.ring().mul(evaluate(p, fp), evaluate(q, fp)));
    EXPECT_EQ(evaluate(p + q, fp), fp.ring().add(evaluate(p, fp), evaluate(q, fp)));
  }
}

TEST(Rings, PrimeFieldValidation) {
  EXPECT_THROW(PrimeField(1), InputError);
  EXPECT_THROW(PrimeField(15), InputError);
  EXPECT_THROW(PrimeField(std::uint64_t{1} << 33), InputError);
  EXPECT_EQ(PrimeField(7).from_integer(-1), 6u);
  EXPECT_TRUE(is_prime(4294967291ull));
  EXPECT_FALSE(is_prime(4294967297ull));
}

TEST(Rings, CountingRingSharesCounters) {
  CountingRing<IntegerRing> ring;
  auto copy = ring;
  copy.mul(2, 3);
  copy.add(2, 3);
  EXPECT_EQ(ring.counts().multiplications, 1u);
  EXPECT_EQ(ring.counts().additions, 1u);
  ring.reset();
  EXPECT_EQ(copy.counts().multiplications, 0u);
}
