#include <gtest/gtest.h>

#include <boost/numeric/interval.hpp>
#include <functional>
#include <random>
#include <set>

#include "kummer/exact/poly.hpp"
#include "kummer/kumgeo/quadrics.hpp"
#include "kummer/kumgeo/surface_a.hpp"
#include "kummer/locsol/everywhere.hpp"
#include "oracles.hpp"

using namespace kummer;
using namespace kummer::locsol;
using kumgeo::KummerSurfaceA;
using kumgeo::KummerSurfaceB;
using kumgeo::QuadricSystem;

namespace {

KummerSurfaceA surface(const UniPolyQ& g1, const UniPolyQ& g2) { return kumgeo::theorem_a_surface(g1, g2); }

/// Does g change sign on a grid of the Cauchy interval after removing repeated factors.
bool has_real_root_by_grid(const UniPolyQ& g) {
    UniPolyQ h = exact::squarefree_part(g);
    Rational b = 1;
    for (int i = 0; i < h.degree(); ++i) b = std::max(b, 1 + exact::abs(h[i] / h.leading()));
    const int n = 4000;
    int prev = 0;
    for (int k = 0; k <= n; ++k) {
        Rational x = -b + 2 * b * Rational(k, n);
        int s = exact::sign(h.eval(x));
        if (s == 0) return true;
        if (prev != 0 && s != prev) return true;
        prev = s;
    }
    return false;
}

/// Real solubility of z^2 = G1 G2 on P^1 x P^1: some pair of values with product >= 0.
bool real_oracle(const UniPolyQ& g1, const UniPolyQ& g2) {
    bool r1 = has_real_root_by_grid(g1), r2 = has_real_root_by_grid(g2);
    bool pos1 = r1 || g1.leading() > 0, neg1 = r1 || g1.leading() < 0;
    bool pos2 = r2 || g2.leading() > 0, neg2 = r2 || g2.leading() < 0;
    return (pos1 && pos2) || (neg1 && neg2);
}

/// Square classes of G(u, v) over primitive (u, v) mod p^3 whose class is determined (valuation <= 1).
/// undetermined is set if some value has valuation >= 2.
std::set<int> brute_classes(const std::vector<BigInt>& g, std::uint64_t p, bool& undetermined) {
    const BigInt bp(p), m = exact::pow(bp, 3);
    const std::uint64_t n = p * p * p;
    std::set<int> out;
    undetermined = false;
    for (std::uint64_t u = 0; u < n; ++u)
        for (std::uint64_t v = 0; v < n; ++v) {
            if (u % p == 0 && v % p == 0) continue;
            BigInt val = exact::mod(eval_binary(g, BigInt(u), BigInt(v)), m);
            if (val == 0 || exact::valuation(val, bp) >= 2) {
                undetermined = true;
                continue;
            }
            int e = exact::valuation(val, bp);
            BigInt unit = val / exact::pow(bp, static_cast<unsigned>(e));
            out.insert(2 * e + (exact::legendre(unit, p) == 1 ? 0 : 1));
        }
    return out;
}

QuadricSystem diagonal_system(const std::array<std::array<int, 6>, 3>& diag) {
    QuadricSystem qs;
    for (int r = 0; r < 3; ++r)
        for (int i = 0; i < 6; ++i) qs[static_cast<std::size_t>(r)].gram[i][i] = diag[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
    return qs;
}

KummerSurfaceB custom_surface(const QuadricSystem& qs) {
    KummerSurfaceB s;
    s.f = UniPolyQ{-1, -1, 0, 0, 0, 1};
    s.lambda = localarith::LambdaElement::one();
    s.quadrics = qs;
    s.norm = 1;
    return s;
}

/// Naive lift search: primitive solutions of the system mod p^k, lifting each one over all p^6 digit
/// vectors. Forms are x^T (2G) x with denominators cleared and the p-content removed, in 64-bit
/// arithmetic. Returns nullopt if the node cap is hit.
std::optional<bool> has_primitive_solution(const QuadricSystem& qs, std::uint64_t p, int k, std::uint64_t cap = 20000000) {
    using Mat = std::array<std::array<long long, 6>, 6>;
    std::array<Mat, 3> forms{};
    const BigInt bp(p);
    for (int r = 0; r < 3; ++r) {
        const auto& g = qs[static_cast<std::size_t>(r)].gram;
        BigInt d = 1;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) d = exact::lcm(d, exact::denom(2 * g[i][j]));
        BigInt content = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) content = exact::gcd(content, exact::numer(2 * g[i][j] * d));
        BigInt pc = 1;
        while (content != 0 && content % (pc * bp) == 0) pc *= bp;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                forms[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<long long>(exact::numer(2 * g[i][j] * d) / pc);
    }
    using Pt = std::array<long long, 6>;
    auto zero_mod = [&](const Pt& x, long long m) {
        for (const auto& f : forms) {
            long long s = 0;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) s = (s + f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % m * x[static_cast<std::size_t>(i)] % m * x[static_cast<std::size_t>(j)]) % m;
            if (s != 0) return false;
        }
        return true;
    };
    std::uint64_t total = 1;
    for (int i = 0; i < 6; ++i) total *= p;
    std::uint64_t nodes = 0;
    bool unknown = false;
    std::function<std::optional<bool>(const Pt&, int, long long)> rec = [&](const Pt& x, int j, long long pj) -> std::optional<bool> {
        if (!zero_mod(x, pj)) return false;
        if (j == k) return true;
        bool local_unknown = false;
        for (std::uint64_t t = 0; t < total; ++t) {
            if (++nodes > cap) return std::nullopt;
            Pt y = x;
            std::uint64_t r = t;
            for (int i = 0; i < 6; ++i) {
                y[static_cast<std::size_t>(i)] += pj * static_cast<long long>(r % p);
                r /= p;
            }
            auto sub = rec(y, j + 1, pj * static_cast<long long>(p));
            if (!sub) local_unknown = true;
            else if (*sub) return true;
        }
        if (local_unknown) return std::nullopt;
        return false;
    };
    for (std::uint64_t t = 1; t < total; ++t) {
        Pt x{};
        std::uint64_t r = t;
        for (int i = 0; i < 6; ++i) {
            x[static_cast<std::size_t>(i)] = static_cast<long long>(r % p);
            r /= p;
        }
        auto sub = rec(x, 1, static_cast<long long>(p));
        if (!sub) unknown = true;
        else if (*sub) return true;
    }
    if (unknown) return std::nullopt;
    return false;
}

const UniPolyQ kF{-1, -1, 0, 0, 0, 1};

}  // namespace

TEST(RealA, Examples) {
    EXPECT_EQ(real_solubility_A(surface(UniPolyQ{1, 0, 0, 0, 1}, UniPolyQ{1, 0, 0, 0, 1})).outcome, Outcome::soluble);
    EXPECT_EQ(real_solubility_A(surface(UniPolyQ{-1, 0, 0, 0, -1}, UniPolyQ{1, 0, 0, 0, 1})).outcome, Outcome::insoluble);
    EXPECT_EQ(real_solubility_A(surface(UniPolyQ{-2, 0, 0, 0, 1}, UniPolyQ{-1, 0, 0, 0, -1})).outcome, Outcome::soluble);
    EXPECT_EQ(real_solubility_A(surface(UniPolyQ{-1, 0, 0, 0, -1}, UniPolyQ{-1, 0, 0, 0, -1})).outcome, Outcome::soluble);
    // -(x^2 - 2)^2 is nonpositive and vanishes only at irrational points
    auto v = real_solubility_A(surface(UniPolyQ{-1, 0, 0, 0, -1}, UniPolyQ{4, 0, -4, 0, 1} * Rational(-1)));
    EXPECT_EQ(v.outcome, Outcome::soluble);
}

TEST(RealA, AgreesWithGridOracle) {
    std::mt19937_64 rng(31);
    int insoluble = 0;
    for (int trial = 0; trial < 100; ++trial) {
        UniPolyQ g1 = oracle::random_poly(rng, 4, 9, false), g2 = oracle::random_poly(rng, 4, 9, false);
        if (g1.degree() != 4 || g2.degree() != 4) continue;
        auto v = real_solubility_A(surface(g1, g2));
        bool expect = real_oracle(g1, g2);
        EXPECT_EQ(v.outcome, expect ? Outcome::soluble : Outcome::insoluble) << g1.to_string() << " ; " << g2.to_string();
        if (!expect) ++insoluble;
        if (v.witness && v.witness->kind == Witness::Kind::rational) {
            const auto& c = v.witness->coords;
            EXPECT_GE(surface(g1, g2).eval(c[0], c[2]), 0);
        }
    }
    EXPECT_GT(insoluble, 0);
}

TEST(PadicA, Examples) {
    auto s = surface(UniPolyQ{1, 0, 0, 0, 1}, UniPolyQ{1, 0, 0, 0, 1});
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
        auto v = padic_solubility_A(s, p);
        ASSERT_EQ(v.outcome, Outcome::soluble) << p;
        ASSERT_TRUE(v.witness);
        EXPECT_TRUE(verify_padic_witness_A(s, *v.witness));
    }
    EXPECT_THROW(padic_solubility_A(s, 2), InputError);
}

TEST(PadicA, DisjointClassesAreInsoluble) {
    UniPolyQ g{1, 0, 0, 0, 1};
    auto s = surface(g, 3 * g);
    auto v = padic_solubility_A(s, 3);
    EXPECT_EQ(v.outcome, Outcome::insoluble) << v.certificate;
    bool und1 = false, und2 = false;
    auto c1 = brute_classes(integral_binary_quartic(s.g1), 3, und1);
    auto c2 = brute_classes(integral_binary_quartic(s.g2), 3, und2);
    EXPECT_FALSE(und1);
    EXPECT_FALSE(und2);
    EXPECT_EQ(c1, (std::set<int>{0, 1}));
    EXPECT_EQ(c2, (std::set<int>{2, 3}));
    // mod 5 the classes of x^4 + 1 are {1, 2} and 3 * 2 = 1
    EXPECT_EQ(padic_solubility_A(s, 5).outcome, Outcome::soluble);
}

TEST(PadicA, AgreesWithBruteForceClasses) {
    std::mt19937_64 rng(32);
    int decided = 0, insoluble = 0;
    for (int trial = 0; trial < 120; ++trial) {
        UniPolyQ g1 = oracle::random_poly(rng, 4, 6, false), g2 = oracle::random_poly(rng, 4, 6, false);
        if (g1.degree() != 4 || g2.degree() != 4) continue;
        if (rng() % 2) g2 = g2 * Rational(3);
        auto s = surface(g1, g2);
        for (std::uint64_t p : {3, 5}) {
            bool u1 = false, u2 = false;
            auto c1 = brute_classes(integral_binary_quartic(g1), p, u1);
            auto c2 = brute_classes(integral_binary_quartic(g2), p, u2);
            bool meet = false;
            for (int c : c1) meet = meet || c2.count(c);
            auto v = padic_solubility_A(s, p);
            if (meet) {
                ++decided;
                EXPECT_EQ(v.outcome, Outcome::soluble) << g1.to_string() << " ; " << g2.to_string() << " p=" << p;
            } else if (!u1 && !u2) {
                ++decided;
                ++insoluble;
                EXPECT_EQ(v.outcome, Outcome::insoluble) << g1.to_string() << " ; " << g2.to_string() << " p=" << p;
            }
            EXPECT_NE(v.outcome, Outcome::undecided) << g1.to_string() << " ; " << g2.to_string() << " p=" << p;
            if (v.witness && v.witness->kind == Witness::Kind::padic) EXPECT_TRUE(verify_padic_witness_A(s, *v.witness));
        }
    }
    EXPECT_GT(decided, 100);
    EXPECT_GT(insoluble, 0);
}

TEST(PadicA, RootWitnessWithContent) {
    // 9(x^4 - 10): the scan sees x^4 - 10 = x^4 - 1 mod 3 after dividing out 9
    auto s = surface(UniPolyQ{-90, 0, 0, 0, 9}, UniPolyQ{3, 0, 0, 0, 3});
    auto v = padic_solubility_A(s, 3);
    ASSERT_EQ(v.outcome, Outcome::soluble);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->kind, Witness::Kind::padic);
    EXPECT_EQ(v.witness->root_of, 1);
    EXPECT_TRUE(verify_padic_witness_A(s, *v.witness));

    // a rational root is reported as a rational witness
    auto r = padic_solubility_A(surface(UniPolyQ{-1, 1} * UniPolyQ{2, 0, 0, 1} * Rational(9), UniPolyQ{3, 0, 0, 0, 3}), 3);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->kind, Witness::Kind::rational);
    EXPECT_EQ(r.witness->root_of, 1);
}

TEST(PadicA, GlobalPointMeansLocallySoluble) {
    auto s = surface(UniPolyQ{-1, -1, 0, 0, 1}, UniPolyQ{1, 1, 0, 0, 1});
    auto w = find_rational_point_A(s, 6);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_rational_point_A(s, *w));
    EXPECT_EQ(real_solubility_A(s).outcome, Outcome::soluble);
    for (std::uint64_t p : {3, 5, 7, 229, 283}) {
        auto v = padic_solubility_A(s, p);
        EXPECT_EQ(v.outcome, Outcome::soluble) << p;
        if (v.witness) EXPECT_TRUE(verify_padic_witness_A(s, *v.witness));
    }
}

TEST(SurfaceB, LambdaOneHasRationalPoint) {
    auto s = kumgeo::kummer_quadrics(kF, localarith::LambdaElement::one());
    auto w = find_rational_point_B(s.quadrics, 1);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_rational_point_B(s.quadrics, *w));
    auto r = everywhere_local(s);
    EXPECT_EQ(r.overall, Tristate::yes);
    EXPECT_TRUE(r.undecided_places.empty());
    EXPECT_EQ(r.bad_primes, (std::vector<std::uint64_t>{19, 151}));
}

TEST(SurfaceB, EmptyReductionIsInsoluble) {
    auto qs = diagonal_system({{{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}}});
    auto v = padic_solubility_B(custom_surface(qs), 3);
    EXPECT_EQ(v.outcome, Outcome::insoluble) << v.certificate;
    EXPECT_EQ(has_primitive_solution(qs, 3, 1), false);
    // at 5, -1 is a square
    auto w = padic_solubility_B(custom_surface(qs), 5);
    ASSERT_EQ(w.outcome, Outcome::soluble);
    EXPECT_TRUE(verify_padic_witness_B(qs, *w.witness));
}

TEST(SurfaceB, SingularReductionWithoutLiftsIsInsoluble) {
    // mod 3 the points are (0, 0, 0, 0, x4, x5), all singular; Q1 = 3(x4^2 + x5^2) != 0 mod 9 there
    QuadricSystem qs = diagonal_system({{{1, 1, 3, 3, 3, 3}, {3, 3, 1, 1, 0, 0}, {0, 0, 0, 0, 3, 3}}});
    qs[2].gram[0][2] = qs[2].gram[2][0] = Rational(1, 2);
    auto v = padic_solubility_B(custom_surface(qs), 3);
    EXPECT_EQ(v.outcome, Outcome::insoluble) << v.certificate;
    EXPECT_EQ(has_primitive_solution(qs, 3, 1), true);
    EXPECT_EQ(has_primitive_solution(qs, 3, 2), false);
}

TEST(SurfaceB, RandomSystemsAgreeWithNaiveLifting) {
    // sparse diagonal systems with 3-adic coefficients, so that both outcomes occur
    std::mt19937_64 rng(33);
    const int choices[] = {0, 0, 1, -1, 3, -3, 9};
    Effort effort;
    effort.node_budget = 20000;
    int insoluble = 0, soluble = 0;
    for (int trial = 0; trial < 40; ++trial) {
        QuadricSystem qs;
        for (auto& q : qs)
            for (int i = 0; i < 6; ++i) q.gram[i][i] = choices[rng() % 7];
        if (rng() % 3 == 0) qs[rng() % 3].gram[0][1] = qs[rng() % 3].gram[1][0] = Rational(1, 2);
        for (auto& q : qs) {
            q.gram[1][0] = q.gram[0][1];
        }
        auto v = padic_solubility_B(custom_surface(qs), 3, effort);
        auto shallow = has_primitive_solution(qs, 3, 2);
        ASSERT_TRUE(shallow);
        if (v.outcome == Outcome::soluble) {
            ++soluble;
            ASSERT_TRUE(v.witness);
            if (v.witness->kind == Witness::Kind::padic) EXPECT_TRUE(verify_padic_witness_B(qs, *v.witness));
            EXPECT_TRUE(*shallow);
        } else if (v.outcome == Outcome::insoluble) {
            ++insoluble;
            bool dies = !*shallow;
            for (int k = 3; k <= 4 && !dies; ++k) {
                auto deeper = has_primitive_solution(qs, 3, k);
                dies = deeper && !*deeper;
            }
            EXPECT_TRUE(dies) << v.certificate;
        }
    }
    EXPECT_GT(soluble, 5);
    EXPECT_GT(insoluble, 5);
}

TEST(SurfaceB, WitnessesVerifyAndEncloseZero) {
    auto s = kumgeo::kummer_quadrics(kF, localarith::LambdaElement{UniPolyQ{3, 0, 2}});
    EXPECT_FALSE(find_rational_point_B(s.quadrics, 1));
    for (std::uint64_t p : {3, 5, 7, 11, 13, 19, 151}) {
        auto v = padic_solubility_B(s, p);
        ASSERT_EQ(v.outcome, Outcome::soluble) << p << " " << v.certificate;
        EXPECT_TRUE(verify_padic_witness_B(s.quadrics, *v.witness));
        EXPECT_EQ(v.witness->p, p);
    }
    auto r = real_solubility_B(s, 64, 1);
    ASSERT_EQ(r.outcome, Outcome::soluble);
    ASSERT_EQ(r.witness->kind, Witness::Kind::real_interval);
    EXPECT_TRUE(verify_real_witness_B(s.quadrics, *r.witness));

    using I = boost::numeric::interval<double>;
    auto encl = [](const Rational& q) {
        double d = q.convert_to<double>();
        return I(std::nextafter(std::nextafter(d, -1e308), -1e308), std::nextafter(std::nextafter(d, 1e308), 1e308));
    };
    std::array<I, 6> x;
    for (int i = 0; i < 6; ++i) x[static_cast<std::size_t>(i)] = encl(r.witness->coords[static_cast<std::size_t>(i)]);
    for (int k = 0; k < 3; ++k) {
        const auto& [lo, hi] = r.witness->boxes[static_cast<std::size_t>(k)];
        x[static_cast<std::size_t>(r.witness->pivots[static_cast<std::size_t>(k)])] = I(encl(lo).lower(), encl(hi).upper());
    }
    for (const auto& q : s.quadrics) {
        I acc(0.0);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) acc += encl(q.gram[i][j]) * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
        EXPECT_TRUE(boost::numeric::in_zero(acc)) << acc.lower() << " " << acc.upper();
    }

    // a corrupted box no longer certifies
    Witness bad = *r.witness;
    bad.boxes[0].first += 1;
    bad.boxes[0].second += 1;
    EXPECT_FALSE(verify_real_witness_B(s.quadrics, bad));
}

TEST(SurfaceB, NoSamplesMeansUndecided) {
    auto s = kumgeo::kummer_quadrics(kF, localarith::LambdaElement{UniPolyQ{3, 0, 2}});
    auto r = real_solubility_B(s, 0, 1);
    EXPECT_EQ(r.outcome, Outcome::undecided);
    EXPECT_FALSE(r.witness);
}

TEST(Effort, MoreEffortNeverFlipsADecision) {
    auto conflict = [](Outcome a, Outcome b) {
        return (a == Outcome::soluble && b == Outcome::insoluble) || (a == Outcome::insoluble && b == Outcome::soluble);
    };
    std::vector<KummerSurfaceA> as{surface(UniPolyQ{1, 0, 0, 0, 1}, UniPolyQ{3, 0, 0, 0, 3}),
                                   surface(UniPolyQ{-1, -1, 0, 0, 1}, UniPolyQ{1, 1, 0, 0, 1}),
                                   surface(UniPolyQ{5, 0, 1, 0, 7}, UniPolyQ{-3, 2, 0, 0, 9})};
    for (const auto& s : as)
        for (std::uint64_t p : {3, 5, 7})
            EXPECT_FALSE(conflict(padic_solubility_A(s, p, Effort::low()).outcome, padic_solubility_A(s, p, Effort::high()).outcome));
    auto b = kumgeo::kummer_quadrics(kF, localarith::LambdaElement{UniPolyQ{-1, 1, 0, 1}});
    for (std::uint64_t p : {3, 5, 7, 17, 19})
        EXPECT_FALSE(conflict(padic_solubility_B(b, p, Effort::low()).outcome, padic_solubility_B(b, p, Effort::standard()).outcome));
    EXPECT_THROW(Effort::named("extreme"), InputError);
    EXPECT_EQ(Effort::named("high").padic_depth, Effort::high().padic_depth);
}

TEST(Effort, SquareMultipleGivesSameVerdicts) {
    UniPolyQ lam{3, 0, 2};
    UniPolyQ c{1, 1};
    UniPolyQ lam2 = (lam * c * c) % kF;
    auto s1 = kumgeo::kummer_quadrics(kF, localarith::LambdaElement{lam});
    auto s2 = kumgeo::kummer_quadrics(kF, localarith::LambdaElement{lam2});
    for (std::uint64_t p : {3, 5, 7, 11, 13, 19}) {
        auto v1 = padic_solubility_B(s1, p), v2 = padic_solubility_B(s2, p);
        if (v1.outcome != Outcome::undecided && v2.outcome != Outcome::undecided) EXPECT_EQ(v1.outcome, v2.outcome) << p;
    }
    EXPECT_EQ(real_solubility_B(s1, 64).outcome, real_solubility_B(s2, 64).outcome);
}

TEST(EverywhereLocal, SurfaceAExamples) {
    auto r = everywhere_local(surface(UniPolyQ{-1, -1, 0, 0, 1}, UniPolyQ{1, 1, 0, 0, 1}));
    EXPECT_EQ(r.overall, Tristate::yes);
    EXPECT_TRUE(r.global_point);
    EXPECT_EQ(r.bad_primes, (std::vector<std::uint64_t>{229, 283}));
    EXPECT_EQ(r.verdicts.front().place, Place::real());
    EXPECT_EQ(r.verdicts.back().place, Place::good_above(13));

    UniPolyQ g{1, 0, 0, 0, 1};
    auto q = everywhere_local(surface(g, 3 * g));
    EXPECT_EQ(q.overall, Tristate::no);
    EXPECT_FALSE(q.global_point);
    bool found = false;
    for (const auto& v : q.verdicts)
        if (v.place == Place::prime(3)) found = v.outcome == Outcome::insoluble;
    EXPECT_TRUE(found);

    auto n = everywhere_local(surface(UniPolyQ{-1, 0, 0, 0, -1}, g));
    EXPECT_EQ(n.overall, Tristate::no);
    EXPECT_EQ(n.verdicts.front().outcome, Outcome::insoluble);
}

TEST(EverywhereLocal, UndecidedPlacesAreListed) {
    auto s = kumgeo::kummer_quadrics(kF, localarith::LambdaElement{UniPolyQ{3, 0, 2}});
    auto r = everywhere_local(s);
    EXPECT_FALSE(r.global_point);
    EXPECT_EQ(r.overall, Tristate::undecided);
    ASSERT_FALSE(r.undecided_places.empty());
    EXPECT_EQ(r.undecided_places.front(), "2");
    for (const auto& v : r.verdicts) {
        bool listed = std::find(r.undecided_places.begin(), r.undecided_places.end(), v.place.name()) != r.undecided_places.end();
        EXPECT_EQ(listed, v.outcome == Outcome::undecided) << v.place.name();
        if (v.place.kind == Place::Kind::good_primes_above) EXPECT_TRUE(v.heuristic);
    }
}
