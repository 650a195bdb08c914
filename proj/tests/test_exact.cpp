#include <gtest/gtest.h>

#include <random>

#include "kummer/exact/irreducible.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"
#include "kummer/exact/polyfp.hpp"
#include "kummer/exact/realroots.hpp"
#include "kummer/exact/resultant.hpp"
#include "oracles.hpp"

using namespace kummer;
using namespace kummer::exact;

namespace {

const UniPolyQ kQuintic({-1, -1, 0, 0, 0, 1});  // x^5 - x - 1

}  // namespace

TEST(Number, ParseAndPrint) {
    EXPECT_EQ(parse_rational("6/-4"), Rational(-3, 2));
    EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
    EXPECT_EQ(to_string(Rational(7)), "7");
    EXPECT_THROW(parse_rational("1.5"), InputError);
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_bigint(""), InputError);
}

TEST(Number, Valuations) {
    EXPECT_EQ(valuation(BigInt(2869), 19), 1);
    EXPECT_EQ(valuation(BigInt(2869), 151), 1);
    EXPECT_EQ(valuation(Rational(9, 250), 5), -3);
    EXPECT_EQ(valuation(Rational(9, 250), 3), 2);
    EXPECT_EQ(valuation(BigInt(0), 3), kInfiniteValuation);
}

TEST(Number, ModularHelpers) {
    EXPECT_EQ(legendre(2, 7), 1);
    EXPECT_EQ(legendre(3, 7), -1);
    EXPECT_EQ(legendre(14, 7), 0);
    for (std::uint64_t p : {3ull, 5ull, 13ull, 17ull, 97ull, 1000003ull}) {
        for (std::uint64_t a = 1; a < 40; ++a) {
            if (legendre(a, p) != 1) continue;
            std::uint64_t r = sqrt_mod(a % p, p);
            EXPECT_EQ(mulmod(r, r, p), a % p);
        }
    }
    EXPECT_TRUE(is_prime_u64(1000003));
    EXPECT_FALSE(is_prime_u64(561));
    auto fac = factor_integer(BigInt(2869));
    EXPECT_TRUE(fac.complete);
    EXPECT_EQ(fac.primes.size(), 2u);
    EXPECT_EQ(fac.primes.at(BigInt(19)), 1);
    EXPECT_EQ(fac.primes.at(BigInt(151)), 1);
}

TEST(Number, FactorIntegerReconstructs) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        BigInt n = BigInt(rng() % 1000000007ull + 2) * BigInt(rng() % 100000 + 1);
        auto fac = factor_integer(n);
        ASSERT_TRUE(fac.complete);
        BigInt prod = 1;
        for (const auto& [p, e] : fac.primes) {
            EXPECT_TRUE(is_probable_prime(p));
            prod *= pow(p, static_cast<unsigned>(e));
        }
        EXPECT_EQ(prod, n);
    }
}

TEST(Discriminant, SpecExamples) {
    EXPECT_EQ(discriminant(UniPolyQ({1, 0, 1})), Rational(-4));
    EXPECT_EQ(discriminant(kQuintic), Rational(2869));
    EXPECT_EQ(discriminant(UniPolyQ({1, 0, 0, 0, 1})), Rational(256));
    EXPECT_THROW(discriminant(UniPolyQ({1, 1})), InputError);
}

TEST(Discriminant, TrinomialFormulaOracle) {
    // disc(x^5 + a x + b) = 4^4 a^5 + 5^5 b^4.
    for (int a = -4; a <= 4; ++a) {
        for (int b = -4; b <= 4; ++b) {
            UniPolyQ f({b, a, 0, 0, 0, 1});
            BigInt expect = 256 * pow(BigInt(a), 5) + 3125 * pow(BigInt(b), 4);
            EXPECT_EQ(discriminant(f), Rational(expect)) << f.to_string();
        }
    }
    // disc(x^4 + a x + b) = -27 a^4 + 256 b^3.
    EXPECT_EQ(discriminant(UniPolyQ({-1, -1, 0, 0, 1})), Rational(-283));
    EXPECT_EQ(discriminant(UniPolyQ({1, 1, 0, 0, 1})), Rational(229));
}

TEST(Discriminant, AgreesWithTraceFormDeterminant) {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 60; ++it) {
        int deg = 2 + static_cast<int>(rng() % 4);
        UniPolyQ f = oracle::random_poly(rng, deg, 6, true);
        if (oracle::discriminant_by_trace_form(f) == 0) continue;
        EXPECT_EQ(discriminant(f), oracle::discriminant_by_trace_form(f)) << f.to_string();
    }
}

TEST(Discriminant, NonMonicScaling) {
    // disc(c f) = c^{2n-2} disc(f).
    UniPolyQ f = kQuintic * Rational(3);
    EXPECT_EQ(discriminant(f), Rational(2869) * pow(Rational(3), 8));
}

TEST(Resultant, SpecExamples) {
    EXPECT_EQ(resultant(UniPolyQ({-2, 1}), UniPolyQ({-3, 1})), Rational(-1));
    EXPECT_EQ(resultant(UniPolyQ({1, 0, 1}), UniPolyQ({0, 1})), Rational(1));
    // Res(f, f') equals disc up to the sign (-1)^{n(n-1)/2} = +1 for n = 5 and lc = 1.
    EXPECT_EQ(resultant(kQuintic, kQuintic.derivative()), Rational(2869));
    EXPECT_THROW(resultant(UniPolyQ(), kQuintic), InputError);
}

TEST(Resultant, ProductOfEvaluationsAtRoots) {
    // For f split over Z with roots r_i: Res(f, g) = lc(f)^{deg g} prod g(r_i).
    std::mt19937_64 rng(3);
    for (int it = 0; it < 40; ++it) {
        std::vector<int> roots;
        UniPolyQ f = UniPolyQ::constant(1);
        int n = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) {
            roots.push_back(static_cast<int>(rng() % 11) - 5);
            f = f * UniPolyQ({-roots.back(), 1});
        }
        UniPolyQ g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 5, false);
        Rational expect = 1;
        for (int r : roots) expect *= g.eval(Rational(r));
        if (expect == 0) continue;
        EXPECT_EQ(resultant(f, g), expect);
    }
}

TEST(Resultant, DiscriminantOfProductProperty) {
    std::mt19937_64 rng(4);
    int checked = 0;
    while (checked < 100) {
        UniPolyQ f = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 3), 5, true);
        UniPolyQ g = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 3), 5, true);
        if (oracle::discriminant_by_trace_form(f) == 0 || oracle::discriminant_by_trace_form(g) == 0) continue;
        if (!gcd(f, g).is_zero() && gcd(f, g).degree() > 0) continue;
        Rational r = resultant(f, g);
        EXPECT_EQ(discriminant(f * g), discriminant(f) * discriminant(g) * r * r);
        ++checked;
    }
}

TEST(FactorModP, QuinticModTwo) {
    auto fac = factor_mod_p(kQuintic, 2);
    ASSERT_EQ(fac.factors.size(), 2u);
    EXPECT_EQ(fac.factors[0].first, UniPolyFp(2, {1, 1, 1}));
    EXPECT_EQ(fac.factors[1].first, UniPolyFp(2, {1, 0, 1, 1}));
    EXPECT_EQ(fac.factors[0].second, 1);
    EXPECT_EQ(fac.factors[1].second, 1);
    // Oracle: exhaustive search over monic degree-(2, 3) pairs.
    int hits = 0;
    for (const auto& a : oracle::all_monic(2, 2))
        for (const auto& b : oracle::all_monic(3, 2))
            if (oracle::fp_mul(a, b, 2) == oracle::FpVec({1, 1, 0, 0, 0, 1})) {
                EXPECT_EQ(a, oracle::FpVec({1, 1, 1}));
                EXPECT_EQ(b, oracle::FpVec({1, 0, 1, 1}));
                ++hits;
            }
    EXPECT_EQ(hits, 1);
}

TEST(FactorModP, QuinticModFiveIrreducible) {
    auto fac = factor_mod_p(kQuintic, 5);
    ASSERT_EQ(fac.factors.size(), 1u);
    EXPECT_EQ(fac.factors[0].first.degree(), 5);
    EXPECT_FALSE(oracle::has_small_factor({4, 4, 0, 0, 0, 1}, 5));
}

TEST(FactorModP, RepeatedRoot) {
    auto fac = factor_mod_p(UniPolyQ({0, 0, 1}), 3);
    ASSERT_EQ(fac.factors.size(), 1u);
    EXPECT_EQ(fac.factors[0].first, UniPolyFp(3, {0, 1}));
    EXPECT_EQ(fac.factors[0].second, 2);
}

TEST(FactorModP, Errors) {
    EXPECT_THROW(factor_mod_p(UniPolyQ(std::vector<Rational>{Rational(1, 3), Rational(1)}), 3), InputError);
    EXPECT_THROW(factor_mod_p(UniPolyQ({1, 0, 3}), 3), InputError);
    EXPECT_THROW(factor_mod_p(kQuintic, 9), InputError);
}

TEST(FactorModP, RoundTripAndIrreducibility) {
    std::mt19937_64 rng(5);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
    for (int it = 0; it < 200; ++it) {
        std::uint64_t p = primes[rng() % 6];
        int deg = 1 + static_cast<int>(rng() % 8);
        UniPolyQ f = oracle::random_poly(rng, deg, 20, false);
        if (numer(f.leading()) % p == 0) continue;
        auto fac = factor_mod_p(f, p, rng());
        EXPECT_EQ(fac.expand(p), UniPolyFp::reduce(f, p)) << f.to_string() << " mod " << p;
        for (const auto& [g, e] : fac.factors) {
            EXPECT_EQ(g.leading(), 1u);
            EXPECT_GE(e, 1);
            if (g.degree() <= 3) {
                for (std::uint64_t a = 0; a < p && g.degree() > 1; ++a) EXPECT_NE(g.eval(a), 0u);
            }
            std::uint64_t span = 1;
            for (int i = 0; i < g.degree() / 2; ++i) span *= p;
            if (g.degree() >= 4 && span <= 10000) {
                oracle::FpVec v(g.coeffs().begin(), g.coeffs().end());
                EXPECT_FALSE(oracle::has_small_factor(v, p)) << g.to_string();
            }
        }
    }
}

TEST(FactorModP, SeedDoesNotChangeResult) {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 30; ++it) {
        UniPolyQ f = oracle::random_poly(rng, 6, 9, true);
        auto a = factor_mod_p(f, 7, 1);
        auto b = factor_mod_p(f, 7, 987654321);
        ASSERT_EQ(a.factors.size(), b.factors.size());
        for (std::size_t i = 0; i < a.factors.size(); ++i) EXPECT_EQ(a.factors[i], b.factors[i]);
    }
}

TEST(RealRoots, SpecExamples) {
    EXPECT_TRUE(isolate_real_roots(UniPolyQ({1, 0, 1})).empty());
    auto r2 = isolate_real_roots(UniPolyQ({-2, 0, 1}));
    ASSERT_EQ(r2.size(), 2u);
    EXPECT_GT(r2[0].lo, Rational(-2));
    EXPECT_LT(r2[0].hi, Rational(-1));
    EXPECT_GT(r2[1].lo, Rational(1));
    EXPECT_LT(r2[1].hi, Rational(2));
    auto r5 = isolate_real_roots(kQuintic);
    ASSERT_EQ(r5.size(), 1u);
    EXPECT_GT(r5[0].lo, Rational(1));
    EXPECT_LT(r5[0].hi, Rational(2));
}

TEST(RealRoots, ExactRootsReported) {
    auto r = isolate_real_roots(UniPolyQ({0, -1, 0, 1}));  // x^3 - x
    ASSERT_EQ(r.size(), 3u);
    EXPECT_TRUE(r[0].exact());
    EXPECT_EQ(r[0].lo, Rational(-1));
    EXPECT_TRUE(r[1].exact());
    EXPECT_EQ(r[1].lo, Rational(0));
    EXPECT_EQ(r[2].lo, Rational(1));
}

TEST(RealRoots, IntervalsCertifyRoots) {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 80; ++it) {
        UniPolyQ f = squarefree_part(oracle::random_poly(rng, 1 + static_cast<int>(rng() % 6), 8, false));
        auto seq = sturm_sequence(f);
        auto ivs = isolate_real_roots(f);
        Rational b = root_bound(f);
        EXPECT_EQ(static_cast<int>(ivs.size()), count_roots(seq, -b, b));
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            const auto& iv = ivs[i];
            if (iv.exact()) {
                EXPECT_EQ(f.eval(iv.lo), 0);
            } else {
                EXPECT_LE(sign(f.eval(iv.lo)) * sign(f.eval(iv.hi)), 0);
                EXPECT_LT(iv.width(), kRootTolerance);
                EXPECT_EQ(count_roots(seq, iv.lo, iv.hi), 1);
            }
            if (i > 0) EXPECT_LT(ivs[i - 1].hi, iv.lo);
        }
    }
}

TEST(TracePowers, SpecExamples) {
    auto t = trace_powers(UniPolyQ({2, -3, 1}), 5);
    EXPECT_EQ(t, (std::vector<Rational>{2, 3, 5, 9, 17}));
    EXPECT_EQ(trace_powers(kQuintic, 5), (std::vector<Rational>{5, 0, 0, 0, 4}));
    EXPECT_THROW(trace_powers(UniPolyQ({1, 2}), 3), InputError);
}

TEST(TracePowers, MatchesMultiplicationOperatorTrace) {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 50; ++it) {
        UniPolyQ f = oracle::random_poly(rng, 5, 7, true);
        EXPECT_EQ(trace_powers(f, 12), oracle::power_sums_by_matrix(f, 12)) << f.to_string();
        EXPECT_EQ(trace_powers(f, 1)[0], Rational(5));
    }
}

TEST(Irreducibility, Examples) {
    EXPECT_TRUE(irreducibility_over_q(kQuintic).irreducible);
    EXPECT_TRUE(irreducibility_over_q(UniPolyQ({-1, -1, 0, 0, 1})).irreducible);
    EXPECT_TRUE(irreducibility_over_q(UniPolyQ({1, 0, 0, 0, 1})).irreducible);  // reducible mod every prime
    EXPECT_TRUE(irreducibility_over_q(UniPolyQ({-2, 0, 0, 0, 0, 1})).irreducible);
    auto r = irreducibility_over_q(UniPolyQ({1, 0, 2, 0, 1}) + UniPolyQ({0, 0, 0, 0, 0}));  // (x^2+1)^2
    EXPECT_TRUE(r.decided);
    EXPECT_FALSE(r.irreducible);
    auto q = irreducibility_over_q(UniPolyQ({1, 1, 1}) * UniPolyQ({2, 0, 3}));
    EXPECT_TRUE(q.decided);
    EXPECT_FALSE(q.irreducible);
    ASSERT_TRUE(q.factor.has_value());
    EXPECT_TRUE(((UniPolyQ({1, 1, 1}) * UniPolyQ({2, 0, 3})) % *q.factor).is_zero());
    auto l = irreducibility_over_q(UniPolyQ({-3, 0, 2}) * UniPolyQ({1, -2, 0, 1}) * UniPolyQ({-1, 3}));
    EXPECT_FALSE(l.irreducible);
}

TEST(Irreducibility, RandomProductsAreReducible) {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 40; ++it) {
        UniPolyQ a = oracle::random_poly(rng, 2, 6, false);
        UniPolyQ b = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 6, false);
        auto r = irreducibility_over_q(a * b);
        EXPECT_TRUE(r.decided);
        EXPECT_FALSE(r.irreducible) << (a * b).to_string();
    }
}

TEST(Irreducibility, RationalRoots) {
    auto roots = rational_roots(UniPolyQ({-3, 0, 2}) * UniPolyQ({1, -3}) * UniPolyQ({5, 7}));
    EXPECT_EQ(roots, (std::vector<Rational>{Rational(-5, 7), Rational(1, 3)}));
}
