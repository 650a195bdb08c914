#ifndef KUMMER_LOCALARITH_PADIC_HPP
#define KUMMER_LOCALARITH_PADIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"
#include "kummer/exact/polyfp.hpp"
#include "kummer/exact/resultant.hpp"

// Arithmetic in Z/p^k: residues of p-integral rationals, polynomials with residue
// coefficients, Newton and Hensel lifting.

namespace kummer::localarith {

using exact::BigInt;
using exact::Rational;
using exact::UniPolyFp;
using exact::UniPolyQ;

/// Three-valued outcome shared by the local tests.
enum class Tristate { yes, no, undecided };

inline std::string to_string(Tristate t) {
    switch (t) {
        case Tristate::yes: return "yes";
        case Tristate::no: return "no";
        default: return "undecided";
    }
}

/// An element of Z_p known modulo p^precision; value in [0, p^precision).
struct PadicApprox {
    std::uint64_t p = 3;
    int precision = 1;
    BigInt value = 0;

    BigInt modulus() const { return exact::pow(BigInt(p), static_cast<unsigned>(precision)); }

    /// The same element to lower precision.
    PadicApprox reduce_to(int j) const {
        if (j < 1 || j > precision) throw InputError("cannot reduce to precision " + std::to_string(j));
        return {p, j, exact::mod(value, exact::pow(BigInt(p), static_cast<unsigned>(j)))};
    }

    friend bool operator==(const PadicApprox& a, const PadicApprox& b) {
        return a.p == b.p && a.precision == b.precision && a.value == b.value;
    }
};

inline void require_odd_prime(std::uint64_t p) {
    if (p == 2) throw InputError("p = 2 is not supported; the local tests are for odd primes");
    if (!exact::is_prime_u64(p) || p >= (1ull << 32)) throw InputError(std::to_string(p) + " is not a supported odd prime");
}

/// a^{-1} mod m for gcd(a, m) = 1.
inline BigInt inverse_mod(const BigInt& a, const BigInt& m) {
    BigInt r0 = exact::mod(a, m), r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw InputError("element is not invertible modulo " + m.str());
    return exact::mod(s0, m);
}

/// Residue of a p-integral rational modulo m = p^k.
inline BigInt residue(const Rational& q, std::uint64_t p, const BigInt& m) {
    if (!exact::is_p_integral(q, BigInt(p))) throw InputError(exact::to_string(q) + " is not integral at " + std::to_string(p));
    return exact::mod(exact::numer(q) * inverse_mod(exact::denom(q), m), m);
}

/// Valuation of a residue mod p^k, or nullopt when it is 0 (undetermined at this precision).
inline std::optional<int> residue_valuation(const BigInt& r, std::uint64_t p, const BigInt& m) {
    BigInt x = exact::mod(r, m);
    if (x == 0) return std::nullopt;
    return exact::valuation(x, BigInt(p));
}

/// Polynomial over Z/m, coefficients lowest first in [0, m).
struct ZmPoly {
    BigInt m;
    std::vector<BigInt> c;

    ZmPoly() = default;
    ZmPoly(BigInt modulus, std::vector<BigInt> coeffs) : m(std::move(modulus)), c(std::move(coeffs)) { normalize(); }

    static ZmPoly reduce(const UniPolyQ& f, std::uint64_t p, const BigInt& m) {
        std::vector<BigInt> c;
        for (const auto& a : f.coeffs()) c.push_back(residue(a, p, m));
        return ZmPoly(m, std::move(c));
    }

    static ZmPoly from_fp(const UniPolyFp& f, const BigInt& m) {
        std::vector<BigInt> c;
        for (auto a : f.coeffs()) c.push_back(BigInt(a));
        return ZmPoly(m, std::move(c));
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    BigInt operator[](int i) const { return (i < 0 || i > degree()) ? BigInt(0) : c[static_cast<std::size_t>(i)]; }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = exact::mod(acc * x + *it, m);
        return acc;
    }

    ZmPoly derivative() const {
        std::vector<BigInt> d;
        for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<unsigned>(i));
        return ZmPoly(m, std::move(d));
    }

    /// Reduction to F_p (p must divide m).
    UniPolyFp to_fp(std::uint64_t p) const {
        std::vector<std::uint64_t> r;
        for (const auto& a : c) r.push_back(exact::mod_u64(a, p));
        return UniPolyFp(p, std::move(r));
    }

    /// Same coefficients as integers in [0, m).
    std::vector<BigInt> integers() const { return c; }

    friend ZmPoly operator+(const ZmPoly& a, const ZmPoly& b) {
        std::vector<BigInt> c(std::max(a.c.size(), b.c.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
        return ZmPoly(a.m, std::move(c));
    }
    friend ZmPoly operator-(const ZmPoly& a, const ZmPoly& b) {
        std::vector<BigInt> c(std::max(a.c.size(), b.c.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
        return ZmPoly(a.m, std::move(c));
    }
    friend ZmPoly operator*(const ZmPoly& a, const ZmPoly& b) {
        if (a.is_zero() || b.is_zero()) return ZmPoly(a.m, {});
        std::vector<BigInt> c(a.c.size() + b.c.size() - 1);
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
        return ZmPoly(a.m, std::move(c));
    }
    ZmPoly scaled(const BigInt& s) const {
        std::vector<BigInt> d = c;
        for (auto& x : d) x *= s;
        return ZmPoly(m, std::move(d));
    }

    /// Remainder modulo a monic polynomial.
    ZmPoly rem_monic(const ZmPoly& g) const {
        if (g.is_zero() || exact::mod(g.c.back() - 1, m) != 0) throw InputError("division by a non-monic polynomial mod p^k");
        std::vector<BigInt> r = c;
        for (int i = degree(); i >= g.degree(); --i) {
            BigInt t = exact::mod(r[static_cast<std::size_t>(i)], m);
            if (t == 0) continue;
            for (int j = 0; j <= g.degree(); ++j) r[static_cast<std::size_t>(i - g.degree() + j)] -= t * g.c[static_cast<std::size_t>(j)];
        }
        r.resize(static_cast<std::size_t>(std::max(0, std::min(degree() + 1, g.degree()))));
        return ZmPoly(m, std::move(r));
    }

    ZmPoly with_modulus(const BigInt& mm) const { return ZmPoly(mm, c); }

    friend bool operator==(const ZmPoly& a, const ZmPoly& b) { return a.m == b.m && a.c == b.c; }

private:
    void normalize() {
        for (auto& x : c) x = exact::mod(x, m);
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

/// s, t with s a + t b = 1 in F_p[x], for coprime a, b.
inline std::pair<UniPolyFp, UniPolyFp> bezout(const UniPolyFp& a, const UniPolyFp& b) {
    const std::uint64_t p = a.modulus();
    UniPolyFp r0 = a, r1 = b, s0 = UniPolyFp::one(p), s1(p), t0(p), t1 = UniPolyFp::one(p);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPolyFp s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw ContractViolation("Bezout called on polynomials with a common factor mod p");
    UniPolyFp inv(p, {exact::invmod(r0[0], p)});
    return {s0 * inv, t0 * inv};
}

/// Lifts f = g h (mod p), g and h monic and coprime mod p, to f = G H (mod p^k), f monic.
inline std::pair<ZmPoly, ZmPoly> hensel_lift_pair(const UniPolyQ& f, std::uint64_t p, int k, const UniPolyFp& g0,
                                                  const UniPolyFp& h0) {
    const BigInt mk = exact::pow(BigInt(p), static_cast<unsigned>(k));
    ZmPoly F = ZmPoly::reduce(f, p, mk);
    auto [s, t] = bezout(g0, h0);
    ZmPoly g = ZmPoly::from_fp(g0, mk), h = ZmPoly::from_fp(h0, mk);
    BigInt pj = p;
    for (int j = 1; j < k; ++j) {
        // e = (F - g h) / p^j mod p.
        ZmPoly diff = F - g * h;
        std::vector<std::uint64_t> e;
        for (const auto& c : diff.c) {
            if (c % pj != 0) throw ContractViolation("Hensel lifting lost the congruence");
            e.push_back(exact::mod_u64(c / pj, p));
        }
        UniPolyFp ef(p, std::move(e));
        UniPolyFp dg = (t * ef) % g0, dh = (s * ef) % h0;
        g = g + ZmPoly::from_fp(dg, mk).scaled(pj);
        h = h + ZmPoly::from_fp(dh, mk).scaled(pj);
        pj *= p;
    }
    return {g, h};
}

/// A factor of f over Z_p known mod p^k, lifting the power `base^multiplicity` of an
/// irreducible factor of f mod p.
struct LiftedFactor {
    UniPolyFp base;
    int multiplicity = 1;
    ZmPoly lifted;
};

/// Hensel lift of the coprime factorization f = prod_i base_i^{e_i} (mod p) to p^k; f monic
/// and p-integral.
inline std::vector<LiftedFactor> hensel_lift_factorization(const UniPolyQ& f, std::uint64_t p, int k) {
    if (!f.is_monic()) throw InputError("factor lifting needs a monic polynomial");
    auto fac = exact::factor_mod_p(f, p);
    std::vector<LiftedFactor> out;
    UniPolyFp rest = UniPolyFp::reduce(f, p);
    // Peel off one coprime piece at a time; the remaining cofactor is re-lifted from the
    // exact lifted cofactor each round.
    ZmPoly cofactor = ZmPoly::reduce(f, p, exact::pow(BigInt(p), static_cast<unsigned>(k)));
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        const auto& [g, e] = fac.factors[i];
        UniPolyFp piece = UniPolyFp::one(p);
        for (int r = 0; r < e; ++r) piece = piece * g;
        if (i + 1 == fac.factors.size()) {
            out.push_back({g, e, cofactor});
            break;
        }
        UniPolyFp other = rest / piece;
        // Lift against the current cofactor, written back as a rational polynomial.
        std::vector<Rational> cq;
        for (const auto& c : cofactor.c) cq.push_back(Rational(c));
        auto [gl, hl] = hensel_lift_pair(UniPolyQ(cq), p, k, piece, other);
        out.push_back({g, e, gl});
        cofactor = hl;
        rest = other;
    }
    return out;
}

/// Simple roots of f mod p lifted to Z/p^k by Newton iteration, ascending by residue.
inline std::vector<PadicApprox> hensel_lift_simple_roots(const UniPolyQ& f, std::uint64_t p, int k) {
    if (k < 1) throw InputError("precision must be at least 1");
    if (!exact::is_prime_u64(p)) throw InputError(std::to_string(p) + " is not prime");
    if (!f.all_p_integral(BigInt(p))) throw InputError("polynomial is not integral at " + std::to_string(p));
    const BigInt mk = exact::pow(BigInt(p), static_cast<unsigned>(k));
    ZmPoly F = ZmPoly::reduce(f, p, mk);
    ZmPoly dF = F.derivative();
    UniPolyFp fp = F.to_fp(p);
    std::vector<PadicApprox> out;
    if (fp.degree() < 1) return out;
    for (auto r0 : exact::roots_mod_p(fp)) {
        if (dF.to_fp(p).eval(r0) == 0) continue;
        BigInt r = r0;
        int prec = 1;
        while (prec < k) {
            prec = std::min(2 * prec, k);
            BigInt mp = exact::pow(BigInt(p), static_cast<unsigned>(prec));
            BigInt fr = exact::mod(F.eval(r), mp), dr = exact::mod(dF.eval(r), mp);
            r = exact::mod(r - fr * inverse_mod(dr, mp), mp);
        }
        out.push_back({p, k, exact::mod(r, mk)});
    }
    return out;
}

/// Res(F, a) mod m for F monic over Z/m: the determinant of multiplication by a in
/// (Z/m)[x]/(F), from an exact integer determinant of representatives.
inline BigInt norm_mod(const ZmPoly& F, const std::vector<BigInt>& a) {
    const int n = F.degree();
    exact::IntMatrix mat(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
    ZmPoly col = ZmPoly(F.m, a).rem_monic(F);
    ZmPoly x(F.m, {0, 1});
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[i];
        col = (col * x).rem_monic(F);
    }
    return exact::mod(exact::bareiss_determinant(mat), F.m);
}

}  // namespace kummer::localarith

#endif
