#ifndef KUMMER_PERM_GALOIS_HPP
#define KUMMER_PERM_GALOIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/exact/algebra.hpp"
#include "kummer/exact/irreducible.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"
#include "kummer/exact/polyfp.hpp"
#include "kummer/exact/resultant.hpp"
#include "kummer/kumgeo/resolvent.hpp"
#include "kummer/perm/group.hpp"
#include "kummer/perm/permutation.hpp"

namespace kummer::perm {

using exact::BigInt;
using exact::Rational;
using exact::UniPolyQ;

/// Thrown when a Frobenius cycle type is requested at a prime dividing the discriminant.
class RamifiedPrimeError : public InputError {
public:
    explicit RamifiedPrimeError(const std::string& what) : InputError(what) {}
};

/// Degrees of the irreducible factors of f mod p, descending.
inline Partition frobenius_cycle_type(const UniPolyQ& f, std::uint64_t p) {
    if (f.degree() < 1) throw InputError("cycle type of a constant polynomial");
    auto fp = exact::UniPolyFp::reduce(f, p);
    if (fp.degree() != f.degree()) throw InputError("leading coefficient vanishes modulo " + std::to_string(p));
    if (f.degree() >= 2) {
        Rational d = exact::discriminant(f);
        if (exact::valuation(d, p) > 0) throw RamifiedPrimeError(std::to_string(p) + " divides the discriminant");
    }
    return exact::factor_mod_p(fp).degree_pattern();
}

enum class GaloisClass { symmetric, alternating_or_smaller, proper_subgroup, undecided };

inline std::string to_string(GaloisClass c) {
    switch (c) {
        case GaloisClass::symmetric: return "S_m";
        case GaloisClass::alternating_or_smaller: return "A_m-or-smaller";
        case GaloisClass::proper_subgroup: return "proper-subgroup";
        default: return "undecided";
    }
}

/// Classification of Gal(f) inside S_m with the evidence it rests on.
struct GaloisVerdict {
    int degree = 0;
    GaloisClass classification = GaloisClass::undecided;
    std::string method;
    Rational discriminant;
    bool discriminant_is_square = false;
    std::vector<std::pair<std::uint64_t, Partition>> witnesses;  // certifying (prime, cycle type)
    std::vector<std::pair<std::uint64_t, Partition>> observed;   // cycle types at the first unramified primes
    std::optional<UniPolyQ> resolvent;                            // cubic or sextic resolvent when used
    std::optional<bool> resolvent_irreducible;
    std::optional<Rational> resolvent_root;

    bool is_symmetric() const { return classification == GaloisClass::symmetric; }
};

namespace detail {

inline void require_integral_irreducible(const UniPolyQ& f, int n) {
    if (f.degree() != n) throw InputError("expected degree " + std::to_string(n) + ", got " + std::to_string(f.degree()));
    auto irr = exact::irreducibility_over_q(f);
    if (!irr.decided || !irr.irreducible) throw InputError("polynomial " + f.to_string() + " is not irreducible over Q");
}

/// Cycle types at the first `count` unramified primes.
inline std::vector<std::pair<std::uint64_t, Partition>> sample_cycle_types(const UniPolyQ& f, const Rational& disc, int count) {
    std::vector<std::pair<std::uint64_t, Partition>> out;
    for (std::uint64_t p : exact::primes_up_to(2000)) {
        if (static_cast<int>(out.size()) >= count) break;
        if (exact::valuation(disc, p) > 0 || !f.all_p_integral(p) || exact::valuation(f.leading(), p) > 0) continue;
        out.emplace_back(p, exact::factor_mod_p(f, p).degree_pattern());
    }
    return out;
}

/// Representatives of the six left cosets sigma*F20 in S_5.
inline std::vector<Permutation> f20_coset_representatives() {
    PermGroup s5 = symmetric_group(5);
    PermGroup f20 = affine_group_5();
    std::vector<Permutation> reps;
    std::vector<char> covered(s5.order(), 0);
    for (std::size_t i = 0; i < s5.order(); ++i) {
        if (covered[i]) continue;
        reps.push_back(s5.element(i));
        for (const auto& h : f20.elements()) covered[s5.index_of(s5.element(i) * h)] = 1;
    }
    return reps;
}

/// Theta(x) = (sum x_i x_{i+1} - sum x_i x_{i+2})^2, indices mod 5; its stabiliser is F20.
inline std::uint64_t theta_mod_q(const std::vector<std::uint64_t>& x, std::uint64_t q) {
    std::uint64_t s1 = 0, s2 = 0;
    for (int i = 0; i < 5; ++i) {
        s1 = (s1 + exact::mulmod(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>((i + 1) % 5)], q)) % q;
        s2 = (s2 + exact::mulmod(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>((i + 2) % 5)], q)) % q;
    }
    std::uint64_t d = (s1 + q - s2) % q;
    return exact::mulmod(d, d, q);
}

/// The sextic resolvent prod_{cosets} (y - Theta(x o sigma)) of a monic integral quintic,
/// reconstructed exactly by the Chinese remainder theorem from primes where f splits
/// completely. Coefficients are bounded through the Cauchy root bound B: |Theta| <= 100 B^4.
inline UniPolyQ sextic_resolvent(const UniPolyQ& f) {
    if (f.degree() != 5 || !f.is_monic() || !f.has_integer_coefficients())
        throw InputError("sextic resolvent needs a monic integral quintic");
    Rational b = exact::root_bound(f);
    BigInt bound_root = exact::numer(b) / exact::denom(b) + 1;
    BigInt theta_bound = 100 * exact::pow(bound_root, 4);
    BigInt coeff_bound = 20 * exact::pow(theta_bound, 6);
    const auto reps = f20_coset_representatives();
    Rational disc = exact::discriminant(f);

    std::vector<BigInt> residues(7, BigInt(0));
    BigInt modulus = 1;
    for (std::uint64_t q = 7; modulus <= 2 * coeff_bound; ++q) {
        if (q > 50000000) throw ResourceError("ran out of split primes for the sextic resolvent");
        if (!exact::is_prime_u64(q) || exact::valuation(disc, q) > 0) continue;
        auto roots = exact::roots_mod_p(exact::UniPolyFp::reduce(f, q));
        if (roots.size() != 5) continue;
        std::vector<std::uint64_t> poly{1};  // running product, lowest degree first
        for (const auto& s : reps) {
            std::vector<std::uint64_t> x(5);
            for (int i = 0; i < 5; ++i) x[static_cast<std::size_t>(i)] = roots[static_cast<std::size_t>(s(i))];
            std::uint64_t t = theta_mod_q(x, q);
            std::vector<std::uint64_t> next(poly.size() + 1, 0);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] = (next[k + 1] + poly[k]) % q;
                next[k] = (next[k] + q - exact::mulmod(poly[k], t, q)) % q;
            }
            poly = std::move(next);
        }
        // CRT step: r = r + modulus * ((c - r) * modulus^{-1} mod q).
        std::uint64_t inv = exact::invmod(exact::mod_u64(modulus, q), q);
        for (std::size_t k = 0; k < 7; ++k) {
            std::uint64_t cur = exact::mod_u64(residues[k], q);
            std::uint64_t delta = exact::mulmod((poly[k] + q - cur) % q, inv, q);
            residues[k] += modulus * delta;
        }
        modulus *= q;
    }
    std::vector<Rational> c;
    for (auto& r : residues) {
        BigInt v = r % modulus;
        if (v > modulus / 2) v -= modulus;
        c.emplace_back(v);
    }
    return UniPolyQ(std::move(c));
}

struct F20Test {
    bool decided = false;
    bool contained = false;  // Gal(f) lies in a conjugate of F20
    UniPolyQ resolvent;
    std::optional<Rational> root;
    UniPolyQ transformed;  // the quintic the resolvent was built from
};

/// Decides whether Gal(f) is contained in F20 via the sextic resolvent, applying the
/// Tschirnhaus transformations theta + c theta^2 until the resolvent is squarefree.
inline F20Test f20_containment(const UniPolyQ& f) {
    F20Test out;
    UniPolyQ monic_int = f;
    if (!f.is_monic() || !f.has_integer_coefficients()) {
        auto prim = f.primitive_integer();
        BigInt lc = prim.back();
        // lc^{n-1} f(y / lc) has coefficients a_i lc^{n-1-i}.
        std::vector<Rational> d(prim.size());
        for (std::size_t i = 0; i < prim.size(); ++i)
            d[i] = Rational(prim[i] * exact::pow(lc, static_cast<unsigned>(prim.size() - 1 - i))) / lc;
        monic_int = UniPolyQ(std::move(d));
    }
    for (int c = 0; c < 12; ++c) {
        UniPolyQ g = monic_int;
        if (c > 0) g = exact::characteristic_polynomial(monic_int, UniPolyQ({0, 1, c}));
        UniPolyQ r = sextic_resolvent(g);
        if (exact::gcd(r, r.derivative()).degree() > 0) continue;
        out.decided = true;
        out.resolvent = r;
        out.transformed = g;
        auto roots = exact::rational_roots(r);
        out.contained = !roots.empty();
        if (out.contained) out.root = roots.front();
        return out;
    }
    return out;
}

}  // namespace detail

/// S_3 iff irreducible with nonsquare discriminant.
inline GaloisVerdict galois_group_cubic(const UniPolyQ& f) {
    if (f.degree() != 3) throw InputError("expected a cubic");
    GaloisVerdict v;
    v.degree = 3;
    v.discriminant = exact::discriminant(f);
    v.discriminant_is_square = exact::is_square(v.discriminant);
    auto irr = exact::irreducibility_over_q(f);
    if (!irr.irreducible) {
        v.classification = GaloisClass::proper_subgroup;
        v.method = "reducible over Q";
    } else if (v.discriminant_is_square) {
        v.classification = GaloisClass::alternating_or_smaller;
        v.method = "square discriminant";
    } else {
        v.classification = GaloisClass::symmetric;
        v.method = "irreducible with nonsquare discriminant";
    }
    return v;
}

/// S_4 iff the resolvent cubic is irreducible and the discriminant is not a square.
inline GaloisVerdict galois_group_quartic(const UniPolyQ& g) {
    detail::require_integral_irreducible(g, 4);
    GaloisVerdict v;
    v.degree = 4;
    v.discriminant = exact::discriminant(g);
    v.discriminant_is_square = exact::is_square(v.discriminant);
    auto res = kumgeo::resolvent_cubic(g);
    v.resolvent = res.cubic;
    auto irr = exact::irreducibility_over_q(res.cubic);
    v.resolvent_irreducible = irr.decided && irr.irreducible;
    if (!*v.resolvent_irreducible) {
        auto roots = exact::rational_roots(res.cubic);
        if (!roots.empty()) v.resolvent_root = roots.front();
    }
    v.observed = detail::sample_cycle_types(g, v.discriminant, 8);
    if (v.discriminant_is_square) {
        v.classification = GaloisClass::alternating_or_smaller;
        v.method = "square discriminant";
    } else if (!*v.resolvent_irreducible) {
        v.classification = GaloisClass::proper_subgroup;
        v.method = "reducible resolvent cubic";
    } else {
        v.classification = GaloisClass::symmetric;
        v.method = "irreducible resolvent cubic and nonsquare discriminant";
    }
    return v;
}

/// S_5 is certified by a nonsquare discriminant together with an unramified prime of cycle
/// type (2,1,1,1) or (3,2); neither type occurs in F20 = Aff_5. When no witness turns up
/// among the small primes the sextic resolvent decides containment in F20 directly.
inline GaloisVerdict galois_group_quintic(const UniPolyQ& f, std::uint64_t prime_budget = 10000) {
    detail::require_integral_irreducible(f, 5);
    GaloisVerdict v;
    v.degree = 5;
    v.discriminant = exact::discriminant(f);
    v.discriminant_is_square = exact::is_square(v.discriminant);
    v.observed = detail::sample_cycle_types(f, v.discriminant, 8);
    if (v.discriminant_is_square) {
        v.classification = GaloisClass::alternating_or_smaller;
        v.method = "square discriminant";
        return v;
    }
    const Partition t211{2, 1, 1, 1}, t32{3, 2};
    bool resolvent_tried = false;
    for (std::uint64_t p : exact::primes_up_to(prime_budget)) {
        if (!resolvent_tried && p > 500) {
            resolvent_tried = true;
            auto test = detail::f20_containment(f);
            if (test.decided && test.contained) {
                v.classification = GaloisClass::proper_subgroup;
                v.method = "sextic resolvent has a rational root (Galois group inside F20)";
                v.resolvent = test.resolvent;
                v.resolvent_root = test.root;
                v.resolvent_irreducible = false;
                return v;
            }
        }
        if (exact::valuation(v.discriminant, p) > 0 || !f.all_p_integral(p) || exact::valuation(f.leading(), p) > 0)
            continue;
        Partition t = exact::factor_mod_p(f, p).degree_pattern();
        if (t == t211 || t == t32) {
            v.witnesses.emplace_back(p, t);
            v.classification = GaloisClass::symmetric;
            v.method = "nonsquare discriminant and a cycle type outside Aff_5";
            return v;
        }
    }
    if (!resolvent_tried) {
        auto test = detail::f20_containment(f);
        if (test.decided && test.contained) {
            v.classification = GaloisClass::proper_subgroup;
            v.method = "sextic resolvent has a rational root (Galois group inside F20)";
            v.resolvent = test.resolvent;
            v.resolvent_root = test.root;
            v.resolvent_irreducible = false;
            return v;
        }
    }
    v.method = "prime budget exhausted without a certifying cycle type";
    return v;
}

}  // namespace kummer::perm

#endif
