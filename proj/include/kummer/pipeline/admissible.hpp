#ifndef KUMMER_PIPELINE_ADMISSIBLE_HPP
#define KUMMER_PIPELINE_ADMISSIBLE_HPP

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"
#include "kummer/exact/resultant.hpp"
#include "kummer/perm/galois.hpp"
#include "kummer/pipeline/report.hpp"

namespace kummer::pipeline {

struct AdmissiblePrimeQuery {
    std::vector<std::uint64_t> S;             // odd primes that must split in Q(sqrt q)
    bool real_place = true;                   // q > 0, always satisfied
    std::vector<perm::Partition> targets;     // one Frobenius cycle type per polynomial
    std::uint64_t bound = 100000;
};

struct AdmissiblePrime {
    std::optional<std::uint64_t> q;           // empty when the bound is exhausted
    std::uint64_t candidates_tested = 0;      // primes q = 1 mod 8 examined
    std::vector<std::string> warnings;
};

inline const std::string kSelmerConditionNote =
    "local conditions at q on specific Selmer classes are not implemented";

namespace detail {

inline perm::Partition sorted_desc(perm::Partition p) {
    std::sort(p.rbegin(), p.rend());
    return p;
}

}  // namespace detail

/// The four predicates, checked directly.
inline bool is_admissible(std::uint64_t q, const AdmissiblePrimeQuery& query, const std::vector<UniPolyQ>& polys) {
    if (!exact::is_prime_u64(q) || q % 8 != 1) return false;
    for (auto p : query.S)
        if (exact::legendre(q % p, p) != 1) return false;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto& f = polys[i];
        if (!f.all_p_integral(BigInt(q)) || exact::valuation(f.leading(), BigInt(q)) != 0) return false;
        if (exact::valuation(exact::discriminant(f), BigInt(q)) != 0) return false;
        if (detail::sorted_desc(perm::frobenius_cycle_type(f, q)) != detail::sorted_desc(query.targets[i])) return false;
    }
    return true;
}

/// Smallest prime q <= bound split at S and with the target Frobenius cycle types.
inline AdmissiblePrime find_admissible_prime(const AdmissiblePrimeQuery& query, const std::vector<UniPolyQ>& polys) {
    if (query.targets.size() != polys.size()) throw InputError("one target cycle type is needed per polynomial");
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto& t = query.targets[i];
        int sum = 0;
        for (int k : t) {
            if (k <= 0) throw InputError("cycle lengths must be positive");
            sum += k;
        }
        if (sum != polys[i].degree())
            throw InputError("target " + std::to_string(i + 1) + " is not a partition of " + std::to_string(polys[i].degree()));
    }
    for (auto p : query.S)
        if (p < 3 || !exact::is_prime_u64(p)) throw InputError("S must contain odd primes only");

    AdmissiblePrime out;
    std::vector<Rational> discs;
    for (const auto& f : polys) {
        discs.push_back(exact::discriminant(f));
        if (discs.back() == 0) throw InputError("polynomial with zero discriminant");
    }
    // the disc-valuation pattern between the polynomials only warns
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            BigInt a = exact::abs(exact::numer(discs[i])), b = exact::abs(exact::numer(discs[j]));
            if (exact::gcd(a, b) != 1)
                out.warnings.push_back("discriminants of polynomials " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) + " share a prime factor");
        }
    for (std::uint64_t q = 17; q <= query.bound; q += 8) {
        if (!exact::is_prime_u64(q)) continue;
        ++out.candidates_tested;
        if (is_admissible(q, query, polys)) {
            out.q = q;
            break;
        }
    }
    return out;
}

inline Json admissible_json(const AdmissiblePrimeQuery& query, const std::vector<UniPolyQ>& polys, const AdmissiblePrime& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    Json ps = Json::array();
    for (const auto& f : polys) ps.push_back(poly_json(f));
    j["inputs"] = Json{{"polys", ps}, {"S", query.S}, {"real_place", query.real_place}, {"targets", query.targets}, {"bound", query.bound}};
    j["found"] = r.q.has_value();
    if (r.q) j["q"] = *r.q;
    j["candidates_tested"] = r.candidates_tested;
    j["warnings"] = r.warnings;
    j["not_implemented"] = Json::array({kSelmerConditionNote});
    return j;
}

/// d^2 g with d the lcm of the denominators; z -> d z identifies z^2 = g(x) h(y) with z^2 = d^2 g(x) h(y).
inline UniPolyQ integral_normalization(const UniPolyQ& g) {
    BigInt d = g.denominator_lcm();
    return g * Rational(d * d);
}

}  // namespace kummer::pipeline

#endif
