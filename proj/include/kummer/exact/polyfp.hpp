#ifndef KUMMER_EXACT_POLYFP_HPP
#define KUMMER_EXACT_POLYFP_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"

namespace kummer::exact {

/// Univariate polynomial over F_p, p prime below 2^32. Coefficients lowest degree first,
/// reduced into [0, p), trailing zeros trimmed.
class UniPolyFp {
public:
    UniPolyFp() = default;
    explicit UniPolyFp(std::uint64_t p) : p_(p) {}
    UniPolyFp(std::uint64_t p, std::vector<std::uint64_t> c) : p_(p), c_(std::move(c)) {
        for (auto& a : c_) a %= p_;
        trim();
    }

    /// Reduction of f modulo p; throws InputError if a coefficient is not p-integral.
    static UniPolyFp reduce(const UniPolyQ& f, std::uint64_t p) {
        std::vector<std::uint64_t> c;
        for (const auto& a : f.coeffs()) {
            BigInt d = denom(a);
            if (d % p == 0) throw InputError("coefficient " + exact::to_string(a) + " is not integral at " + std::to_string(p));
            c.push_back(mulmod(mod_u64(numer(a), p), invmod(mod_u64(d, p), p), p));
        }
        return UniPolyFp(p, std::move(c));
    }

    static UniPolyFp x(std::uint64_t p) { return UniPolyFp(p, {0, 1}); }
    static UniPolyFp one(std::uint64_t p) { return UniPolyFp(p, {1}); }

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t operator[](int i) const { return (i < 0 || i > degree()) ? 0 : c_[static_cast<std::size_t>(i)]; }
    std::uint64_t leading() const { return is_zero() ? 0 : c_.back(); }

    std::uint64_t eval(std::uint64_t x) const {
        std::uint64_t acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
        return acc;
    }

    UniPolyFp monic() const {
        if (is_zero()) return *this;
        std::uint64_t inv = invmod(leading(), p_);
        UniPolyFp r = *this;
        for (auto& a : r.c_) a = mulmod(a, inv, p_);
        return r;
    }

    UniPolyFp derivative() const {
        std::vector<std::uint64_t> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mulmod(c_[i], i % p_, p_));
        return UniPolyFp(p_, std::move(d));
    }

    friend bool operator==(const UniPolyFp& a, const UniPolyFp& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    /// Deterministic total order: degree, then coefficients from the top.
    friend bool operator<(const UniPolyFp& a, const UniPolyFp& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

    friend UniPolyFp operator+(const UniPolyFp& a, const UniPolyFp& b) {
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = (c[i] + b.c_[i]) % a.p_;
        return UniPolyFp(a.p_, std::move(c));
    }

    friend UniPolyFp operator-(const UniPolyFp& a, const UniPolyFp& b) {
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = (c[i] + a.p_ - b.c_[i]) % a.p_;
        return UniPolyFp(a.p_, std::move(c));
    }

    friend UniPolyFp operator*(const UniPolyFp& a, const UniPolyFp& b) {
        if (a.is_zero() || b.is_zero()) return UniPolyFp(a.p_);
        std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
        }
        return UniPolyFp(a.p_, std::move(c));
    }

    friend std::pair<UniPolyFp, UniPolyFp> divmod(const UniPolyFp& a, const UniPolyFp& b) {
        if (b.is_zero()) throw InputError("polynomial division by zero in F_p[x]");
        const std::uint64_t p = a.p_;
        if (a.degree() < b.degree()) return {UniPolyFp(p), a};
        std::vector<std::uint64_t> r = a.c_;
        std::vector<std::uint64_t> q(a.c_.size() - b.c_.size() + 1);
        const std::uint64_t inv = invmod(b.leading(), p);
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            std::uint64_t t = mulmod(r[static_cast<std::size_t>(i + b.degree())], inv, p);
            q[static_cast<std::size_t>(i)] = t;
            if (t == 0) continue;
            for (int j = 0; j <= b.degree(); ++j) {
                auto& slot = r[static_cast<std::size_t>(i + j)];
                slot = (slot + p - mulmod(t, b.c_[static_cast<std::size_t>(j)], p)) % p;
            }
        }
        return {UniPolyFp(p, std::move(q)), UniPolyFp(p, std::move(r))};
    }

    friend UniPolyFp operator/(const UniPolyFp& a, const UniPolyFp& b) { return divmod(a, b).first; }
    friend UniPolyFp operator%(const UniPolyFp& a, const UniPolyFp& b) { return divmod(a, b).second; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            std::uint64_t a = c_[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            if (!s.empty()) s += " + ";
            if (a != 1 || i == 0) s += std::to_string(a);
            if (i > 0) s += (a != 1 ? "*x" : "x");
            if (i > 1) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

inline UniPolyFp gcd(UniPolyFp a, UniPolyFp b) {
    while (!b.is_zero()) {
        UniPolyFp r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// base^e mod m, with the exponent given as a big integer.
inline UniPolyFp powmod(const UniPolyFp& base, const BigInt& e, const UniPolyFp& m) {
    UniPolyFp result = UniPolyFp::one(m.modulus()) % m;
    UniPolyFp b = base % m;
    const unsigned bits = e == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        result = result * result % m;
        if (boost::multiprecision::bit_test(e, i)) result = result * b % m;
    }
    return result;
}

/// Complete factorization over F_p into monic irreducibles with multiplicities.
struct FactorizationFp {
    std::uint64_t unit = 1;
    std::vector<std::pair<UniPolyFp, int>> factors;  // sorted by (degree, coefficients)

    /// unit * prod factor^multiplicity.
    UniPolyFp expand(std::uint64_t p) const {
        UniPolyFp acc(p, {unit});
        for (const auto& [g, e] : factors)
            for (int i = 0; i < e; ++i) acc = acc * g;
        return acc;
    }

    /// Irreducible factor degrees counted with multiplicity, sorted descending.
    std::vector<int> degree_pattern() const {
        std::vector<int> d;
        for (const auto& [g, e] : factors)
            for (int i = 0; i < e; ++i) d.push_back(g.degree());
        std::sort(d.rbegin(), d.rend());
        return d;
    }

    bool squarefree() const {
        return std::all_of(factors.begin(), factors.end(), [](const auto& fe) { return fe.second == 1; });
    }
};

namespace detail {

/// Squarefree decomposition of a monic polynomial in characteristic p.
inline void squarefree_decompose(const UniPolyFp& f, int mult, std::vector<std::pair<UniPolyFp, int>>& out) {
    const std::uint64_t p = f.modulus();
    if (f.degree() <= 0) return;
    UniPolyFp c = gcd(f, f.derivative());
    UniPolyFp w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        UniPolyFp y = gcd(w, c);
        UniPolyFp fac = (w / y).monic();
        if (fac.degree() > 0) out.emplace_back(fac, i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        // c is a p-th power: take the p-th root coefficientwise (Frobenius is the identity on F_p).
        std::vector<std::uint64_t> root;
        for (int k = 0; k * static_cast<int>(p) <= c.degree(); ++k) root.push_back(c[k * static_cast<int>(p)]);
        squarefree_decompose(UniPolyFp(p, std::move(root)).monic(), mult * static_cast<int>(p), out);
    }
}

/// Distinct-degree factorization of a squarefree monic polynomial: (product, degree) pairs.
inline std::vector<std::pair<UniPolyFp, int>> distinct_degree(UniPolyFp f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::pair<UniPolyFp, int>> out;
    UniPolyFp h = UniPolyFp::x(p) % f;
    const UniPolyFp x = UniPolyFp::x(p);
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, BigInt(p), f);
        UniPolyFp g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

/// Equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2).
inline void equal_degree(const UniPolyFp& f, int d, std::mt19937_64& rng, std::vector<UniPolyFp>& out) {
    const std::uint64_t p = f.modulus();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const BigInt exponent = (pow(BigInt(p), static_cast<unsigned>(d)) - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    for (;;) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()));
        for (auto& v : c) v = coef(rng);
        UniPolyFp a(p, std::move(c));
        if (a.degree() <= 0) continue;
        UniPolyFp b;
        if (p == 2) {
            UniPolyFp t = a % f, acc = t;
            for (int i = 1; i < d; ++i) {
                t = t * t % f;
                acc = acc + t;
            }
            b = acc;
        } else {
            b = powmod(a, exponent, f) - UniPolyFp::one(p);
        }
        UniPolyFp g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree((f / g).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Factors f mod p. Requires p-integral coefficients and lc(f) a unit mod p.
inline FactorizationFp factor_mod_p(const UniPolyFp& f, std::uint64_t seed = 0x5eed) {
    if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
    const std::uint64_t p = f.modulus();
    FactorizationFp result;
    result.unit = f.leading();
    std::vector<std::pair<UniPolyFp, int>> sqf;
    detail::squarefree_decompose(f.monic(), 1, sqf);
    std::mt19937_64 rng(seed ^ (p * 0x9e3779b97f4a7c15ull));
    for (const auto& [part, mult] : sqf) {
        for (const auto& [prod, d] : detail::distinct_degree(part)) {
            std::vector<UniPolyFp> irr;
            detail::equal_degree(prod, d, rng, irr);
            for (auto& g : irr) result.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
    // Merge identical factors that arose from different squarefree layers.
    std::vector<std::pair<UniPolyFp, int>> merged;
    for (auto& fe : result.factors) {
        if (!merged.empty() && merged.back().first == fe.first)
            merged.back().second += fe.second;
        else
            merged.push_back(std::move(fe));
    }
    result.factors = std::move(merged);
    (void)p;
    return result;
}

/// factor_mod_p applied to the reduction of f in F_p[x].
inline FactorizationFp factor_mod_p(const UniPolyQ& f, std::uint64_t p, std::uint64_t seed = 0x5eed) {
    if (!is_prime_u64(p) || p >= (1ull << 32)) throw InputError(std::to_string(p) + " is not a supported prime");
    UniPolyFp fp = UniPolyFp::reduce(f, p);
    if (fp.degree() != f.degree())
        throw InputError("leading coefficient vanishes modulo " + std::to_string(p));
    return factor_mod_p(fp, seed);
}

/// Distinct roots of f in F_p, ascending.
inline std::vector<std::uint64_t> roots_mod_p(const UniPolyFp& f) {
    std::vector<std::uint64_t> roots;
    if (f.degree() <= 0) return roots;
    auto fac = factor_mod_p(f);
    for (const auto& [g, e] : fac.factors)
        if (g.degree() == 1) roots.push_back((f.modulus() - g[0]) % f.modulus());
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace kummer::exact

#endif
