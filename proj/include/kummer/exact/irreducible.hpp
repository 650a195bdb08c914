#ifndef KUMMER_EXACT_IRREDUCIBLE_HPP
#define KUMMER_EXACT_IRREDUCIBLE_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"
#include "kummer/exact/polyfp.hpp"
#include "kummer/exact/realroots.hpp"
#include "kummer/exact/resultant.hpp"

namespace kummer::exact {

/// Rational roots of f (f != 0), ascending, without multiplicity.
inline std::vector<Rational> rational_roots(const UniPolyQ& f) {
    std::vector<Rational> out;
    if (f.degree() <= 0) return out;
    UniPolyQ sf = squarefree_part(f);
    UniPolyQ prim = UniPolyQ::from_integers(sf.primitive_integer());
    BigInt lc = abs(numer(prim.leading()));
    Rational tol = Rational(1, lc * lc + 1);
    std::vector<BigInt> dens = divisors(lc);
    for (const auto& iv : isolate_real_roots(prim)) {
        if (iv.exact()) {
            out.push_back(iv.lo);
            continue;
        }
        RootInterval r = refine_root(prim, iv, tol);
        if (r.exact()) {
            out.push_back(r.lo);
            continue;
        }
        Rational mid = (r.lo + r.hi) / 2;
        for (const auto& b : dens) {
            Rational scaled = mid * b;
            BigInt a = numer(scaled) / denom(scaled);
            for (BigInt cand = a - 1; cand <= a + 1; ++cand) {
                Rational q(cand, b);
                if (q >= r.lo && q <= r.hi && prim.eval(q) == 0) out.push_back(q);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Outcome of an irreducibility test over Q.
struct IrreducibilityResult {
    bool decided = false;
    bool irreducible = false;
    std::string method;                                           // how the verdict was reached
    std::optional<UniPolyQ> factor;                               // a proper factor when reducible
    std::vector<std::pair<std::uint64_t, std::vector<int>>> patterns;  // mod-p degree patterns used
};

namespace detail {

/// Subset sums of a degree pattern.
inline std::set<int> subset_sums(const std::vector<int>& degs) {
    std::set<int> s{0};
    for (int d : degs) {
        std::set<int> next = s;
        for (int v : s) next.insert(v + d);
        s = std::move(next);
    }
    return s;
}

/// Searches integer quadratic factors a x^2 + b x + c of a primitive integer polynomial.
inline std::optional<UniPolyQ> find_quadratic_factor(const UniPolyQ& prim) {
    BigInt lc = abs(numer(prim.leading()));
    BigInt c0 = numer(prim[0]);
    if (c0 == 0) return UniPolyQ::x();
    BigInt norm2 = 0;
    for (const auto& a : prim.coeffs()) norm2 += numer(a) * numer(a);
    // Mignotte: a degree-2 factor has middle coefficient at most 2 * ||f||_2 in absolute value.
    BigInt bound = 2 * (isqrt(norm2) + 1);
    for (const auto& a : divisors(lc)) {
        for (const auto& cabs : divisors(c0)) {
            for (int sgn : {1, -1}) {
                BigInt c = sgn * cabs;
                for (BigInt b = -bound; b <= bound; ++b) {
                    UniPolyQ g(std::vector<Rational>{Rational(c), Rational(b), Rational(a)});
                    if ((prim % g).is_zero()) return g;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Irreducibility over Q. Degree <= 5 is always decided: mod-p degree patterns give a fast
/// certificate, otherwise a rational-root test plus an exhaustive bounded quadratic-factor
/// search settles it. Higher degrees are decided only by a degree-pattern certificate.
inline IrreducibilityResult irreducibility_over_q(const UniPolyQ& f, std::uint64_t prime_limit = 600) {
    IrreducibilityResult res;
    const int n = f.degree();
    if (n < 1) {
        res.decided = true;
        res.method = "constant";
        return res;
    }
    if (n == 1) {
        res.decided = res.irreducible = true;
        res.method = "linear";
        return res;
    }
    UniPolyQ prim = UniPolyQ::from_integers(f.primitive_integer());
    Rational disc = discriminant(prim);
    if (disc == 0) {
        res.decided = true;
        res.method = "repeated factor";
        res.factor = gcd(prim, prim.derivative());
        return res;
    }
    // Intersect achievable factor-degree sums across unramified primes.
    std::set<int> possible;
    for (int d = 0; d <= n; ++d) possible.insert(d);
    for (std::uint64_t p : primes_up_to(prime_limit)) {
        if (numer(prim.leading()) % p == 0 || numer(disc) % p == 0) continue;
        auto pat = factor_mod_p(prim, p).degree_pattern();
        auto sums = detail::subset_sums(pat);
        std::set<int> keep;
        for (int d : possible)
            if (sums.count(d)) keep.insert(d);
        if (keep.size() < possible.size()) res.patterns.emplace_back(p, pat);
        possible = std::move(keep);
        if (possible.size() == 2) {
            res.decided = res.irreducible = true;
            res.method = "mod-p degree patterns";
            return res;
        }
    }
    if (n > 5) return res;
    auto roots = rational_roots(prim);
    if (!roots.empty()) {
        res.decided = true;
        res.method = "rational root";
        res.factor = UniPolyQ(std::vector<Rational>{-roots.front(), Rational(1)});
        return res;
    }
    if (n >= 4) {
        if (auto q = detail::find_quadratic_factor(prim)) {
            res.decided = true;
            res.method = "quadratic factor";
            res.factor = *q;
            return res;
        }
    }
    res.decided = res.irreducible = true;
    res.method = n <= 3 ? "no rational root" : "no rational root and no quadratic factor";
    return res;
}

}  // namespace kummer::exact

#endif
