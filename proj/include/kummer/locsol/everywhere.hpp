#ifndef KUMMER_LOCSOL_EVERYWHERE_HPP
#define KUMMER_LOCSOL_EVERYWHERE_HPP

#include <functional>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kummer/exact/number.hpp"
#include "kummer/exact/resultant.hpp"
#include "kummer/localarith/padic.hpp"
#include "kummer/locsol/solubility_a.hpp"
#include "kummer/locsol/solubility_b.hpp"
#include "kummer/locsol/verdict.hpp"

namespace kummer::locsol {

using localarith::Tristate;

struct EverywhereLocal {
    std::vector<LocalVerdict> verdicts;  // inf, 2, odd primes ascending, then the good primes above the bound
    Tristate overall = Tristate::undecided;
    std::vector<std::string> undecided_places;
    std::optional<Witness> global_point;
    std::vector<std::uint64_t> bad_primes;
    std::uint64_t good_prime_bound = 0;
    std::string unfactored;  // cofactor of the bad-prime product that could not be factored
};

namespace detail {

inline void add_prime_divisors(const BigInt& n, std::set<std::uint64_t>& out, std::string& unfactored) {
    if (n == 0) return;
    auto fac = exact::factor_integer(exact::abs(n));
    for (const auto& [q, e] : fac.primes) {
        if (q == 2) continue;
        if (q >= BigInt(1ull << 32)) {
            unfactored += (unfactored.empty() ? "" : ", ") + exact::to_string(q);
            continue;
        }
        out.insert(static_cast<std::uint64_t>(q));
    }
    if (!fac.complete) unfactored += (unfactored.empty() ? "" : ", ") + ("part of " + exact::to_string(n));
}

inline void finish(EverywhereLocal& r) {
    bool any_insoluble = false, all_soluble = true;
    for (const auto& v : r.verdicts) {
        if (v.outcome == Outcome::insoluble) any_insoluble = true;
        if (v.outcome != Outcome::soluble) {
            all_soluble = false;
            if (v.outcome == Outcome::undecided) r.undecided_places.push_back(v.place.name());
        }
    }
    if (!r.unfactored.empty()) {
        all_soluble = false;
        r.undecided_places.push_back("unfactored: " + r.unfactored);
    }
    r.overall = any_insoluble ? Tristate::no : all_soluble ? Tristate::yes : Tristate::undecided;
}

inline LocalVerdict from_global_point(const Place& place, const Witness& w) {
    LocalVerdict v;
    v.place = place;
    v.outcome = Outcome::soluble;
    v.witness = w;
    v.certificate = "global rational point";
    return v;
}

/// Runs the place checks concurrently and folds the results in place order.
inline std::vector<LocalVerdict> run_places(const std::vector<std::function<LocalVerdict()>>& jobs) {
    std::vector<std::future<LocalVerdict>> futures;
    for (const auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
    std::vector<LocalVerdict> out;
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

inline LocalVerdict two_adic_gap() {
    LocalVerdict v;
    v.place = Place::prime(2);
    v.certificate = "p = 2 is not attempted";
    return v;
}

}  // namespace detail

/// Real place, p = 2, every odd bad prime and every odd prime up to effort.good_prime_bound, plus one
/// entry for the good primes above the bound. For p >= 5 of good reduction some y has g2(y) a unit,
/// and z^2 = g2(y) g1(x) is then a smooth genus one curve with p + 1 - 2 sqrt(p) > 0 points over F_p.
inline EverywhereLocal everywhere_local(const KummerSurfaceA& s, const Effort& effort = {}) {
    EverywhereLocal r;
    r.good_prime_bound = effort.good_prime_bound;
    std::set<std::uint64_t> primes;
    for (const auto& g : {s.g1, s.g2}) {
        auto f = integral_binary_quartic(g);
        detail::add_prime_divisors(f[4], primes, r.unfactored);
        detail::add_prime_divisors(exact::numer(exact::discriminant(UniPolyQ::from_integers(f))), primes, r.unfactored);
    }
    r.bad_primes.assign(primes.begin(), primes.end());
    for (auto p : exact::primes_up_to(effort.good_prime_bound))
        if (p > 2) primes.insert(p);

    r.global_point = find_rational_point_A(s, effort.rational_height);
    std::vector<Place> places{Place::real(), Place::prime(2)};
    for (auto p : primes) places.push_back(Place::prime(p));
    places.push_back(Place::good_above(effort.good_prime_bound));
    if (r.global_point) {
        for (const auto& pl : places) r.verdicts.push_back(detail::from_global_point(pl, *r.global_point));
        detail::finish(r);
        return r;
    }
    std::vector<std::function<LocalVerdict()>> jobs;
    jobs.push_back([&s] { return real_solubility_A(s); });
    jobs.push_back([] { return detail::two_adic_gap(); });
    for (auto p : primes) jobs.push_back([&s, p, &effort] { return padic_solubility_A(s, p, effort); });
    r.verdicts = detail::run_places(jobs);
    LocalVerdict good;
    good.place = Place::good_above(effort.good_prime_bound);
    good.outcome = Outcome::soluble;
    good.heuristic = true;
    good.certificate = "good reduction: a smooth genus one fibre has F_p-points for p >= 5 (Hasse bound), which lift by Hensel";
    r.verdicts.push_back(good);
    detail::finish(r);
    return r;
}

/// As above for the three quadrics; bad primes divide disc(f), N(lambda) or the denominators of lambda.
/// Good primes above the bound are reported soluble by the Lang-Weil heuristic for smooth reduction.
inline EverywhereLocal everywhere_local(const KummerSurfaceB& s, const Effort& effort = {}) {
    EverywhereLocal r;
    r.good_prime_bound = effort.good_prime_bound;
    std::set<std::uint64_t> primes;
    Rational disc = exact::discriminant(s.f);
    detail::add_prime_divisors(exact::numer(disc), primes, r.unfactored);
    detail::add_prime_divisors(exact::denom(disc), primes, r.unfactored);
    detail::add_prime_divisors(exact::numer(s.norm), primes, r.unfactored);
    detail::add_prime_divisors(exact::denom(s.norm), primes, r.unfactored);
    detail::add_prime_divisors(s.lambda.a.denominator_lcm(), primes, r.unfactored);
    r.bad_primes.assign(primes.begin(), primes.end());
    for (auto p : exact::primes_up_to(effort.good_prime_bound))
        if (p > 2) primes.insert(p);

    const int bound = effort.rational_height >= 30 ? 2 : 1;
    r.global_point = find_rational_point_B(s.quadrics, bound);
    std::vector<Place> places{Place::real(), Place::prime(2)};
    for (auto p : primes) places.push_back(Place::prime(p));
    places.push_back(Place::good_above(effort.good_prime_bound));
    if (r.global_point) {
        for (const auto& pl : places) r.verdicts.push_back(detail::from_global_point(pl, *r.global_point));
        detail::finish(r);
        return r;
    }
    std::vector<std::function<LocalVerdict()>> jobs;
    jobs.push_back([&s, &effort] { return real_solubility_B(s, effort.real_samples, effort.seed); });
    jobs.push_back([] { return detail::two_adic_gap(); });
    for (auto p : primes) jobs.push_back([&s, p, &effort] { return padic_solubility_B(s, p, effort); });
    r.verdicts = detail::run_places(jobs);
    LocalVerdict good;
    good.place = Place::good_above(effort.good_prime_bound);
    good.outcome = Outcome::soluble;
    good.heuristic = true;
    good.certificate = "good reduction heuristic: smooth reduction has F_p-points for large p (Lang-Weil), not verified";
    r.verdicts.push_back(good);
    detail::finish(r);
    return r;
}

}  // namespace kummer::locsol

#endif
