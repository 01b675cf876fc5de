// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "frey/weierstrass.hpp"
#include "oracles.hpp"

namespace frey {
namespace {

const WeierstrassCurve kCaseOne{0, 4, 0, 3, 0};   // Y² = X³ + 4X² + 3X
const WeierstrassCurve kCaseFive{1, -4, 0, 2, 0};  // Y² + XY = X³ − 4X² + 2X

TEST(Invariants, WorkedExamples) {
  auto one = compute_invariants(kCaseOne);
  EXPECT_EQ(one.disc, 576);
  EXPECT_EQ(one.c4, 112);
  EXPECT_EQ(oracle::discriminant_via_cubic(0, 4, 0, 3, 0), 576);

  auto five = compute_invariants(kCaseFive);
  EXPECT_EQ(five.disc, 388);
  EXPECT_EQ(five.c4, 129);
  EXPECT_EQ(oracle::discriminant_via_cubic(1, -4, 0, 2, 0), 388);

  ASSERT_TRUE(five.j);
  EXPECT_EQ(five.j->num, Integer(129) * 129 * 129);
  EXPECT_EQ(five.j->den, 388);
}

TEST(Invariants, SingularModel) {
  auto inv = compute_invariants({0, 0, 0, 0, 0});
  EXPECT_EQ(inv.disc, 0);
  EXPECT_TRUE(inv.singular());
  EXPECT_THROW(inv.j_invariant(), SingularModel);
  EXPECT_THROW(reduction_type(WeierstrassCurve{0, 0, 0, 0, 0}, 5), SingularModel);
}

TEST(Invariants, JInvariantIsReduced) {
  // Y² = X³ + X: j = 1728, c4 = −48, Δ = −64.
  auto inv = compute_invariants({0, 0, 0, 1, 0});
  EXPECT_EQ(inv.j_invariant().num, 1728);
  EXPECT_EQ(inv.j_invariant().den, 1);
}

TEST(Invariants, IdentitiesOnRandomModels) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  for (int i = 0; i < 3000; ++i) {
    WeierstrassCurve e{coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
    auto inv = compute_invariants(e);
    ASSERT_EQ(4 * inv.b8, inv.b2 * inv.b6 - inv.b4 * inv.b4);
    ASSERT_EQ(1728 * inv.disc, inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6);
    ASSERT_EQ(inv.disc, oracle::discriminant_via_cubic(e.a1, e.a2, e.a3, e.a4, e.a6));
  }
}

TEST(Minimality, Examples) {
  EXPECT_TRUE(is_minimal_at(kCaseFive, 97));
  EXPECT_TRUE(is_minimal_at(kCaseOne, 3));
  // Y² + Y = X³ − X has Δ = 37.
  EXPECT_TRUE(is_minimal_at(WeierstrassCurve{0, 0, 1, -1, 0}, 7));
  // Y² = X³ + 5⁶: Δ = −27·16·5¹², c4 = 0, so the criterion cannot vouch for it.
  EXPECT_FALSE(is_minimal_at(WeierstrassCurve{0, 0, 0, 0, 15625}, 5));
  EXPECT_THROW(is_minimal_at(kCaseOne, 2), PreconditionError);
}

TEST(Reduction, OddPrimes) {
  auto r3 = reduction_type(kCaseOne, 3);
  EXPECT_EQ(r3.kind, ReductionKind::Multiplicative);
  EXPECT_EQ(r3.conductor_exponent, 1u);

  auto r5 = reduction_type(WeierstrassCurve{0, 0, 0, 0, 5}, 5);  // Δ = −10800
  EXPECT_EQ(compute_invariants(WeierstrassCurve{0, 0, 0, 0, 5}).disc, -10800);
  EXPECT_EQ(r5.kind, ReductionKind::Additive);
  EXPECT_EQ(r5.conductor_exponent, 2u);

  auto r7 = reduction_type(kCaseFive, 7);
  EXPECT_EQ(r7.kind, ReductionKind::Good);
  EXPECT_EQ(r7.conductor_exponent, 0u);

  // Additive at 3: exponent left unknown.
  auto add3 = reduction_type(WeierstrassCurve{0, 0, 0, 0, 3}, 3);
  EXPECT_EQ(add3.kind, ReductionKind::Additive);
  EXPECT_FALSE(add3.conductor_exponent);

  EXPECT_THROW(reduction_type(WeierstrassCurve{0, 0, 0, 0, 15625}, 5), NonMinimalModel);
}

TEST(Reduction, AtTwo) {
  auto r = reduction_type_at_2(kCaseFive);
  EXPECT_EQ(r.kind, ReductionKind::Multiplicative);
  EXPECT_EQ(r.conductor_exponent, 1u);

  // Y² + Y = X³ − X: Δ = 37 is odd.
  auto good = reduction_type_at_2(WeierstrassCurve{0, 0, 1, -1, 0});
  EXPECT_EQ(good.kind, ReductionKind::Good);
  EXPECT_EQ(good.conductor_exponent, 0u);

  // Y² + XY = X³ + X: ord₂(BCbⁿ) = 6 shape, Δ odd.
  auto six = reduction_type_at_2(WeierstrassCurve{1, 0, 0, 1, 0});
  EXPECT_EQ(padic_valuation(compute_invariants(WeierstrassCurve{1, 0, 0, 1, 0}).disc, 2), 0u);
  EXPECT_EQ(six.kind, ReductionKind::Good);

  // c4 even and Δ even: falls back to unknown.
  auto unknown = reduction_type_at_2(kCaseOne);
  EXPECT_EQ(unknown.kind, ReductionKind::Additive);
  EXPECT_FALSE(unknown.conductor_exponent);
  EXPECT_FALSE(unknown.minimal_model_checked);
}

TEST(Trace, Examples) {
  EXPECT_EQ(ap_trace({0, 0, 0, 1, 0}, 3), 0);
  EXPECT_EQ(oracle::point_count(0, 0, 0, 1, 0, 3), 4);
  const long a3 = ap_trace(kCaseFive, 3);
  EXPECT_EQ(a3, 3 + 1 - oracle::point_count(1, -4, 0, 2, 0, 3));
  EXPECT_LE(std::abs(a3), 3);
  // 11a3: Y² + Y = X³ − X² has a_2 = −2, a_3 = −1, a_5 = 1, a_7 = −2.
  WeierstrassCurve e11{0, -1, 1, 0, 0};
  EXPECT_EQ(ap_trace(e11, 2), -2);
  EXPECT_EQ(ap_trace(e11, 3), -1);
  EXPECT_EQ(ap_trace(e11, 5), 1);
  EXPECT_EQ(ap_trace(e11, 7), -2);
}

TEST(Trace, Errors) {
  EXPECT_THROW(ap_trace(kCaseFive, 97), PreconditionError);  // 97 | Δ
  EXPECT_THROW(ap_trace(kCaseFive, 2), PreconditionError);   // 2 | Δ
  EXPECT_THROW(ap_trace(kCaseFive, 9), PreconditionError);
  EXPECT_THROW(ap_trace(kCaseFive, 10007), PreconditionError);
}

TEST(Trace, MatchesBruteForceAndHasse) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> coeff(-50, 50);
  const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67};
  for (int i = 0; i < 200; ++i) {
    WeierstrassCurve e{coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
    const auto disc = compute_invariants(e).disc;
    if (disc == 0) continue;
    for (long p : primes) {
      if (disc % p == 0) continue;
      const long ap = ap_trace(e, static_cast<unsigned long>(p));
      ASSERT_EQ(ap, p + 1 - oracle::point_count(e.a1, e.a2, e.a3, e.a4, e.a6, p));
      ASSERT_LE(static_cast<double>(ap * ap), 4.0 * static_cast<double>(p));
    }
  }
}

TEST(Torsion, OriginOnFreyShapes) {
  EXPECT_TRUE(kCaseOne.is_two_torsion(0, 0));
  EXPECT_TRUE(kCaseFive.is_two_torsion(0, 0));
  EXPECT_FALSE(WeierstrassCurve({0, 0, 1, -1, 0}).is_two_torsion(0, 0));
}

}  // namespace
}  // namespace frey
