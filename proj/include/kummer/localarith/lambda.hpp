#ifndef KUMMER_LOCALARITH_LAMBDA_HPP
#define KUMMER_LOCALARITH_LAMBDA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"
#include "kummer/exact/polyfp.hpp"
#include "kummer/exact/resultant.hpp"
#include "kummer/localarith/padic.hpp"
#include "kummer/localarith/reduction.hpp"

// Conditions on lambda in L* = (Q[x]/(f))*.

namespace kummer::localarith {

/// lambda = a(theta) in L = Q[x]/(f), with deg a < deg f.
struct LambdaElement {
    UniPolyQ a;

    static LambdaElement one() { return {UniPolyQ::constant(1)}; }
    static LambdaElement theta() { return {UniPolyQ::x()}; }

    /// Representative reduced modulo f; InputError if it is zero.
    UniPolyQ reduced(const UniPolyQ& f) const {
        UniPolyQ r = a % f;
        if (r.is_zero()) throw InputError("lambda is zero in Q[x]/(f)");
        return r;
    }
};

/// Default precision ladder for valuations that are not determined at lower precision.
inline const std::vector<int> kPrecisionLadder = {4, 8, 16, 32};

/// One completion L_P of L above p.
struct Completion {
    int residue_degree = 1;
    int ramification = 1;
    int valuation = 0;  // normalized v_P(lambda)
};

struct LambdaParity {
    Tristate outcome = Tristate::undecided;
    std::vector<Completion> completions;
    int precision = 0;  // p-adic precision at which every valuation was determined
};

/// At a node prime p of f: whether some r in Q* makes v_P(lambda r) even at every completion.
/// The unramified completions come from the simple factors of f mod p and the ramified one
/// (e = 2, f = 1) from the lifted quadratic over the double root; v_P is read off
/// val_p(N_{L_P/Q_p}(lambda)) = f_P v_P(lambda).
inline LambdaParity lambda_parity_condition(const UniPolyQ& f, const LambdaElement& lambda, std::uint64_t p,
                                            const std::vector<int>& ladder = kPrecisionLadder) {
    require_odd_prime(p);
    auto red = reduction_type(f, p);
    if (red.kind != ReductionKind::node) throw PreconditionError("f does not have node reduction at " + std::to_string(p));
    UniPolyQ a = lambda.reduced(f);
    BigInt d = a.denominator_lcm();
    const int vd = exact::valuation(d, BigInt(p));
    std::vector<BigInt> a_int;
    for (const auto& c : a.coeffs()) a_int.push_back(exact::numer(c * d));

    LambdaParity out;
    for (int k : ladder) {
        auto factors = hensel_lift_factorization(f, p, k);
        const BigInt mk = exact::pow(BigInt(p), static_cast<unsigned>(k));
        std::vector<Completion> comps;
        bool determined = true;
        for (const auto& lf : factors) {
            auto v = residue_valuation(norm_mod(lf.lifted, a_int), p, mk);
            if (!v) {
                determined = false;
                break;
            }
            Completion c;
            if (lf.multiplicity == 1) {
                c.residue_degree = lf.base.degree();
                c.ramification = 1;
                if (*v % c.residue_degree != 0) throw ContractViolation("norm valuation not divisible by the residue degree");
                c.valuation = *v / c.residue_degree - vd;
            } else {
                c.residue_degree = 1;
                c.ramification = 2;
                c.valuation = *v - 2 * vd;
            }
            comps.push_back(c);
        }
        if (!determined) continue;
        out.completions = comps;
        out.precision = k;
        bool ram_even = true, have_parity = false, same = true;
        int parity = 0;
        for (const auto& c : comps) {
            if (c.ramification == 2) {
                if (c.valuation % 2 != 0) ram_even = false;
            } else {
                int par = ((c.valuation % 2) + 2) % 2;
                if (!have_parity) {
                    parity = par;
                    have_parity = true;
                } else if (par != parity) {
                    same = false;
                }
            }
        }
        out.outcome = ram_even && same ? Tristate::yes : Tristate::no;
        return out;
    }
    out.outcome = Tristate::undecided;
    return out;
}

enum class ClassVerdict { certified_nontrivial, undecided };

inline std::string to_string(ClassVerdict v) {
    return v == ClassVerdict::certified_nontrivial ? "certified_nontrivial" : "undecided";
}

struct LambdaClass {
    ClassVerdict verdict = ClassVerdict::undecided;
    std::optional<std::uint64_t> witness;  // prime q
    std::vector<int> degrees;              // residue degrees of the completions at q
    std::vector<int> characters;           // quadratic character of the norm of lambda at each
    int primes_used = 0;                   // primes at which the test could be applied
};

/// Searches odd primes q <= budget, unramified in L with lambda a unit above q. If lambda = r z^2
/// then chi(N_i(lambda)) = chi(r)^{f_i} at every completion of residue degree f_i; a prime where
/// neither sign of chi(r) fits certifies lambda not in k* L*^2.
inline LambdaClass lambda_nontrivial_class(const UniPolyQ& f, const LambdaElement& lambda, std::uint64_t prime_budget) {
    if (!f.is_monic()) throw InputError("lambda_nontrivial_class needs a monic polynomial");
    Rational disc = exact::discriminant(f);
    if (disc == 0) throw InputError("polynomial has a repeated root");
    UniPolyQ a = lambda.reduced(f);
    LambdaClass out;
    for (auto q : exact::primes_up_to(prime_budget)) {
        if (q == 2) continue;
        const BigInt bq(q);
        if (!f.all_p_integral(bq) || !a.all_p_integral(bq) || exact::valuation(disc, bq) != 0) continue;
        auto fac = exact::factor_mod_p(f, q);
        ZmPoly aq = ZmPoly::reduce(a, q, bq);
        std::vector<int> degs, chis;
        bool unit = true;
        for (const auto& [g, e] : fac.factors) {
            BigInt n = norm_mod(ZmPoly::from_fp(g, bq), aq.c);
            if (n == 0) {
                unit = false;
                break;
            }
            degs.push_back(g.degree());
            chis.push_back(exact::legendre(n, q));
        }
        if (!unit) continue;
        ++out.primes_used;
        bool plus = true, minus = true;
        for (std::size_t i = 0; i < degs.size(); ++i) {
            if (chis[i] != 1) plus = false;
            if (chis[i] != (degs[i] % 2 == 0 ? 1 : -1)) minus = false;
        }
        if (!plus && !minus) {
            out.verdict = ClassVerdict::certified_nontrivial;
            out.witness = q;
            out.degrees = degs;
            out.characters = chis;
            return out;
        }
    }
    return out;
}

}  // namespace kummer::localarith

#endif
