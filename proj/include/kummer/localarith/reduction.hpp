#ifndef KUMMER_LOCALARITH_REDUCTION_HPP
#define KUMMER_LOCALARITH_REDUCTION_HPP

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

namespace kummer::localarith {

enum class ReductionKind { good, node, other };

inline std::string to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::good: return "good";
        case ReductionKind::node: return "node";
        default: return "other";
    }
}

struct ReductionType {
    ReductionKind kind = ReductionKind::other;
    int disc_valuation = 0;
    std::optional<std::uint64_t> double_root;  // node only
    std::vector<std::uint64_t> simple_roots;   // roots of multiplicity one in F_p
    std::vector<std::pair<int, int>> pattern;  // (degree, multiplicity) of the factors mod p
};

/// Classifies the reduction of a monic p-integral f at an odd prime p by val_p(disc f):
/// good at 0, node at 1 (after checking the factor pattern), other above.
inline ReductionType reduction_type(const UniPolyQ& f, std::uint64_t p) {
    require_odd_prime(p);
    if (!f.is_monic()) throw InputError("reduction_type needs a monic polynomial");
    if (!f.all_p_integral(BigInt(p))) throw InputError("polynomial is not integral at " + std::to_string(p));
    Rational disc = exact::discriminant(f);
    if (disc == 0) throw InputError("polynomial has a repeated root over Q");
    ReductionType r;
    r.disc_valuation = exact::valuation(disc, BigInt(p));
    auto fac = exact::factor_mod_p(f, p);
    for (const auto& [g, e] : fac.factors) {
        r.pattern.emplace_back(g.degree(), e);
        if (g.degree() == 1 && e == 1) r.simple_roots.push_back((p - g[0]) % p);
    }
    std::sort(r.simple_roots.begin(), r.simple_roots.end());
    if (r.disc_valuation == 0) {
        r.kind = ReductionKind::good;
        if (!fac.squarefree()) throw ContractViolation("unit discriminant but a repeated factor mod p");
        return r;
    }
    if (r.disc_valuation == 1) {
        int doubles = 0;
        bool others_simple = true;
        for (const auto& [g, e] : fac.factors) {
            if (e == 2 && g.degree() == 1) {
                ++doubles;
                r.double_root = (p - g[0]) % p;
            } else if (e != 1) {
                others_simple = false;
            }
        }
        if (doubles != 1 || !others_simple)
            throw ContractViolation("val_p(disc) = 1 but the reduction is not one double root plus simple factors");
        r.kind = ReductionKind::node;
        return r;
    }
    r.kind = ReductionKind::other;
    return r;
}

struct ConditionF {
    std::vector<std::vector<int>> valuations;  // [i][j] = val_{w_i}(disc f_j)
    bool holds = false;
};

/// The matrix val_{w_i}(disc f_j) and whether it is the identity.
inline ConditionF check_condition_f(const std::vector<UniPolyQ>& polys, const std::vector<std::uint64_t>& primes) {
    if (polys.size() != primes.size()) throw InputError("need as many primes as polynomials");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        require_odd_prime(primes[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (primes[i] == primes[j]) throw InputError("the primes must be distinct");
    }
    std::vector<Rational> discs;
    for (const auto& f : polys) {
        for (auto p : primes)
            if (!f.all_p_integral(BigInt(p))) throw InputError(f.to_string() + " is not integral at " + std::to_string(p));
        discs.push_back(exact::discriminant(f));
        if (discs.back() == 0) throw InputError(f.to_string() + " has zero discriminant");
    }
    ConditionF out;
    out.holds = true;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::vector<int> row;
        for (std::size_t j = 0; j < polys.size(); ++j) {
            row.push_back(exact::valuation(discs[j], BigInt(primes[i])));
            if (row.back() != (i == j ? 1 : 0)) out.holds = false;
        }
        out.valuations.push_back(std::move(row));
    }
    return out;
}

struct TorsorRamification {
    Tristate unramified = Tristate::undecided;
    int disc_valuation = 0;
    std::string reason;
    std::vector<std::pair<int, int>> pattern;  // binary-form factor (degree, multiplicity), infinity as degree 1
};

/// Whether the torsor attached to the quartic g is unramified at p: yes when val_p(disc) = 0;
/// when val_p(disc) = 1, yes iff the binary quartic v^4 g(u/v) mod p is one double F_p-point
/// times a reduced quadratic; undecided when val_p(disc) >= 2.
inline TorsorRamification quartic_torsor_unramified(const UniPolyQ& g, std::uint64_t p) {
    require_odd_prime(p);
    if (g.degree() != 4) throw InputError("quartic_torsor_unramified needs a quartic");
    if (!g.all_p_integral(BigInt(p))) throw InputError("quartic is not integral at " + std::to_string(p));
    Rational disc = exact::discriminant(g);
    if (disc == 0) throw InputError("quartic has zero discriminant");
    TorsorRamification out;
    out.disc_valuation = exact::valuation(disc, BigInt(p));
    if (out.disc_valuation == 0) {
        out.unramified = Tristate::yes;
        out.reason = "discriminant is a unit";
        return out;
    }
    if (out.disc_valuation >= 2) {
        out.unramified = Tristate::undecided;
        out.reason = "val_p(disc) >= 2";
        return out;
    }
    UniPolyFp gp = UniPolyFp::reduce(g, p);
    if (gp.is_zero()) {
        out.unramified = Tristate::no;
        out.reason = "quartic vanishes mod p";
        return out;
    }
    int at_infinity = 4 - gp.degree();
    int double_points = 0, bad = 0;
    if (at_infinity > 0) out.pattern.emplace_back(1, at_infinity);
    if (at_infinity == 2) ++double_points;
    if (at_infinity > 2) ++bad;
    if (gp.degree() > 0) {
        auto fac = exact::factor_mod_p(gp.monic());
        for (const auto& [h, e] : fac.factors) {
            out.pattern.emplace_back(h.degree(), e);
            if (e == 2 && h.degree() == 1) ++double_points;
            else if (e != 1) ++bad;
        }
    }
    if (double_points == 1 && bad == 0) {
        out.unramified = Tristate::yes;
        out.reason = "one double F_p-point and a reduced degree-2 part";
    } else {
        out.unramified = Tristate::no;
        out.reason = "reduction is not a double point plus a reduced quadratic";
    }
    return out;
}

}  // namespace kummer::localarith

#endif
