#ifndef KUMMER_LOCSOL_VERDICT_HPP
#define KUMMER_LOCSOL_VERDICT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"

namespace kummer::locsol {

using exact::BigInt;
using exact::Rational;

enum class Outcome { soluble, insoluble, undecided };

inline std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::soluble: return "soluble";
        case Outcome::insoluble: return "insoluble";
        default: return "undecided";
    }
}

/// The real place, a prime p, or every good prime above a bound.
struct Place {
    enum class Kind { real, prime, good_primes_above };
    Kind kind = Kind::real;
    std::uint64_t p = 0;

    static Place real() { return {}; }
    static Place prime(std::uint64_t p) { return {Kind::prime, p}; }
    static Place good_above(std::uint64_t bound) { return {Kind::good_primes_above, bound}; }

    std::string name() const {
        switch (kind) {
            case Kind::real: return "inf";
            case Kind::prime: return std::to_string(p);
            default: return "good p > " + std::to_string(p);
        }
    }
    friend bool operator==(const Place&, const Place&) = default;
};

/// Evidence for a soluble verdict.
///   rational:      coords is a point over Q (surface A: (u1, v1, u2, v2); surface B: (c0..c4, d)).
///   padic:         residues mod p^precision; pivots name the coordinates solved by Hensel (surface B),
///                  root_of names the quartic with a simple root (surface A, 0 if none).
///   real_interval: coords fixed, boxes[i] encloses a unique solution for coordinate pivots[i].
///   real_root:     boxes[0] isolates a real root of quartic root_of.
struct Witness {
    enum class Kind { rational, padic, real_interval, real_root };
    Kind kind = Kind::rational;
    std::vector<Rational> coords;
    std::uint64_t p = 0;
    int precision = 0;
    std::vector<BigInt> residues;
    std::vector<int> pivots;
    int jacobian_valuation = 0;
    int root_of = 0;
    std::vector<std::pair<Rational, Rational>> boxes;
};

inline std::string to_string(Witness::Kind k) {
    switch (k) {
        case Witness::Kind::rational: return "rational";
        case Witness::Kind::padic: return "padic";
        case Witness::Kind::real_interval: return "real_interval";
        default: return "real_root";
    }
}

struct LocalVerdict {
    Place place;
    Outcome outcome = Outcome::undecided;
    bool heuristic = false;  // soluble by the good-reduction argument, not by a witness
    std::optional<Witness> witness;
    std::string certificate;
};

/// Search and precision knobs shared by the solubility routines.
struct Effort {
    int padic_depth = 12;           // p-adic precision for residue trees and Hensel lifts
    int real_samples = 64;          // random starts for the real search on surface B
    int rational_height = 12;       // naive height bound for the global point search on surface A
    int slice_trials = 24;          // random slices for F_p points when p is too large to enumerate
    std::uint64_t slice_prime_limit = 2000;
    std::uint64_t enumeration_limit = 13;  // enumerate P^5(F_p) for p up to this
    std::uint64_t good_prime_bound = 13;   // odd primes checked explicitly; larger good primes use the heuristic
    std::uint64_t node_budget = 200000;    // p-adic lift nodes for degenerate points
    std::uint64_t seed = 1;

    static Effort low() {
        Effort e;
        e.padic_depth = 8;
        e.real_samples = 16;
        e.rational_height = 6;
        e.slice_trials = 8;
        e.node_budget = 20000;
        return e;
    }
    static Effort standard() { return Effort{}; }
    static Effort high() {
        Effort e;
        e.padic_depth = 24;
        e.real_samples = 256;
        e.rational_height = 30;
        e.slice_trials = 96;
        e.slice_prime_limit = 5000;
        e.node_budget = 2000000;
        return e;
    }
    static Effort named(const std::string& name) {
        if (name == "low") return low();
        if (name == "default") return standard();
        if (name == "high") return high();
        throw InputError("unknown effort level '" + name + "' (low, default, high)");
    }
};

}  // namespace kummer::locsol

#endif
