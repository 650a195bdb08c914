#ifndef KUMMER_LOCSOL_SOLUBILITY_A_HPP
#define KUMMER_LOCSOL_SOLUBILITY_A_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/exact/irreducible.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"
#include "kummer/exact/realroots.hpp"
#include "kummer/kumgeo/surface_a.hpp"
#include "kummer/localarith/padic.hpp"
#include "kummer/locsol/verdict.hpp"

// Local solubility of z^2 = g1(x) g2(y). Points are taken on P^1 x P^1 through the binary
// forms G_i(u, v) = D_i^2 v^4 g_i(u/v), D_i the common denominator of g_i; this changes
// g1 g2 by a rational square only.

namespace kummer::locsol {

using exact::UniPolyQ;
using kumgeo::KummerSurfaceA;

/// Coefficients a_0..a_4 of G(u, v) = sum a_i u^i v^{4-i} = D^2 v^4 g(u/v).
inline std::vector<BigInt> integral_binary_quartic(const UniPolyQ& g) {
    if (g.degree() != 4) throw InputError("expected a quartic");
    BigInt d = g.denominator_lcm();
    std::vector<BigInt> a;
    for (int i = 0; i <= 4; ++i) a.push_back(exact::numer(g[i] * d * d));
    return a;
}

inline BigInt eval_binary(const std::vector<BigInt>& a, const BigInt& u, const BigInt& v) {
    BigInt s = 0, up = 1;
    std::vector<BigInt> vp(a.size(), BigInt(1));
    for (std::size_t i = 1; i < a.size(); ++i) vp[i] = vp[i - 1] * v;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * up * vp[a.size() - 1 - i];
        up *= u;
    }
    return s;
}

/// G1(u1, v1) G2(u2, v2) at a witness point (u1, v1, u2, v2).
inline BigInt surface_a_value(const KummerSurfaceA& s, const std::vector<BigInt>& pt) {
    if (pt.size() != 4) throw InputError("surface A points have four coordinates");
    return eval_binary(integral_binary_quartic(s.g1), pt[0], pt[1]) * eval_binary(integral_binary_quartic(s.g2), pt[2], pt[3]);
}

/// Class of a nonzero integer in Q_p*/Q_p*^2 for odd p, encoded 2*(valuation mod 2) + (unit is a non-residue).
inline int square_class(const BigInt& n, std::uint64_t p) {
    if (n == 0) throw InputError("zero has no square class");
    int v = exact::valuation(n, BigInt(p));
    BigInt unit = n / exact::pow(BigInt(p), static_cast<unsigned>(v));
    return 2 * (v % 2) + (exact::legendre(unit, p) == 1 ? 0 : 1);
}

inline std::string square_class_name(int c) {
    static const char* names[] = {"unit square", "unit non-square", "p * square", "p * non-square"};
    return names[c];
}

/// Square classes of G(u, v) over P^1(Q_p), by a residue tree: the class of G on a disc t = a mod p^j
/// is constant once G(a) is nonzero mod p^j. A disc with G(a) = 0 mod p^j and val G'(a) = e, 2e < j,
/// contains a root (Hensel); discs still unresolved at max_depth leave the scan incomplete.
struct ClassScan {
    std::set<int> classes;
    std::map<int, std::vector<BigInt>> witness;  // class -> (u, v)
    bool has_root = false;
    std::vector<BigInt> root;  // (u, v) with G = 0 mod p^root_precision
    int root_precision = 0;
    int root_derivative_valuation = 0;
    bool complete = true;
};

inline ClassScan scan_square_classes(const std::vector<BigInt>& form, std::uint64_t p, int max_depth,
                                     std::uint64_t node_budget = 200000) {
    const BigInt bp(p);
    int c = exact::kInfiniteValuation;
    for (const auto& a : form)
        if (a != 0) c = std::min(c, exact::valuation(a, bp));
    if (c == exact::kInfiniteValuation) throw InputError("zero form");
    const BigInt pc = exact::pow(bp, static_cast<unsigned>(c));
    std::vector<BigInt> g0;
    for (const auto& a : form) g0.push_back(a / pc);

    ClassScan out;
    std::uint64_t nodes = 0;
    for (int chart = 0; chart < 2; ++chart) {
        // chart 0: (t, 1), t in Z_p; chart 1: (1, t), t in p Z_p.
        std::vector<BigInt> h(5), dh(4);
        for (int i = 0; i <= 4; ++i) h[static_cast<std::size_t>(chart == 0 ? i : 4 - i)] = g0[static_cast<std::size_t>(i)];
        for (int i = 1; i <= 4; ++i) dh[static_cast<std::size_t>(i - 1)] = h[static_cast<std::size_t>(i)] * i;
        auto ev = [](const std::vector<BigInt>& q, const BigInt& t) {
            BigInt s = 0;
            for (auto it = q.rbegin(); it != q.rend(); ++it) s = s * t + *it;
            return s;
        };
        auto point = [&](const BigInt& t) {
            return chart == 0 ? std::vector<BigInt>{t, BigInt(1)} : std::vector<BigInt>{BigInt(1), t};
        };
        std::vector<std::pair<BigInt, int>> stack;
        if (chart == 0)
            for (std::uint64_t a = p; a-- > 0;) stack.emplace_back(BigInt(a), 1);
        else
            stack.emplace_back(BigInt(0), 1);
        while (!stack.empty()) {
            auto [a, j] = stack.back();
            stack.pop_back();
            if (++nodes > node_budget) {
                out.complete = false;
                break;
            }
            const BigInt m = exact::pow(bp, static_cast<unsigned>(j));
            BigInt val = exact::mod(ev(h, a), m);
            if (val != 0) {
                int s = exact::valuation(val, bp);
                int cls = 2 * ((s + c) % 2) + (exact::legendre(val / exact::pow(bp, static_cast<unsigned>(s)), p) == 1 ? 0 : 1);
                if (out.classes.insert(cls).second) out.witness[cls] = point(a);
                continue;
            }
            BigInt d = exact::mod(ev(dh, a), m);
            if (d != 0) {
                int e = exact::valuation(d, bp);
                if (j > 2 * e) {
                    out.has_root = true;
                    out.root = point(a);
                    out.root_precision = j;
                    out.root_derivative_valuation = e;
                    return out;
                }
            }
            if (j >= max_depth) {
                out.complete = false;
                continue;
            }
            for (std::uint64_t t = p; t-- > 0;) stack.emplace_back(a + BigInt(t) * m, j + 1);
        }
    }
    return out;
}

/// The real place: soluble iff g1(x) g2(y) >= 0 somewhere on P^1(R) x P^1(R).
inline LocalVerdict real_solubility_A(const KummerSurfaceA& s) {
    LocalVerdict out;
    out.place = Place::real();
    auto samples = [](const UniPolyQ& g) {
        std::vector<Rational> xs{Rational(0)};
        Rational bound = 1;
        for (const auto& iv : exact::isolate_real_roots(g)) {
            xs.push_back(iv.lo);
            xs.push_back(iv.hi);
            bound = std::max(bound, exact::abs(iv.lo) + 1);
            bound = std::max(bound, exact::abs(iv.hi) + 1);
        }
        xs.push_back(bound);
        xs.push_back(-bound);
        return xs;
    };
    for (const auto& x : samples(s.g1))
        for (const auto& y : samples(s.g2)) {
            Rational v = s.eval(x, y);
            if (v >= 0) {
                out.outcome = Outcome::soluble;
                Witness w;
                w.kind = Witness::Kind::rational;
                w.coords = {x, Rational(1), y, Rational(1)};
                out.witness = w;
                out.certificate = "g1(x) g2(y) = " + exact::to_string(v) + " >= 0";
                return out;
            }
        }
    for (int i = 1; i <= 2; ++i) {
        const UniPolyQ& g = i == 1 ? s.g1 : s.g2;
        auto roots = exact::isolate_real_roots(g);
        if (roots.empty()) continue;
        out.outcome = Outcome::soluble;
        Witness w;
        w.kind = Witness::Kind::real_root;
        w.root_of = i;
        w.boxes = {{roots[0].lo, roots[0].hi}};
        out.witness = w;
        out.certificate = "g" + std::to_string(i) + " has a real root, giving points with z = 0";
        return out;
    }
    int s1 = exact::sign(s.g1.leading()), s2 = exact::sign(s.g2.leading());
    out.outcome = Outcome::insoluble;
    out.certificate = "no real roots (Sturm); g1 has constant sign " + std::to_string(s1) + " and g2 constant sign " +
                      std::to_string(s2);
    return out;
}

/// A rational point: a rational root of g1 or g2, or P^1(Q) points of height <= height with
/// G1(u1, v1) G2(u2, v2) a nonzero square (matched by squarefree part).
inline std::optional<Witness> find_rational_point_A(const KummerSurfaceA& s, int height) {
    for (int i = 1; i <= 2; ++i) {
        auto roots = exact::rational_roots(i == 1 ? s.g1 : s.g2);
        if (roots.empty()) continue;
        Witness w;
        w.kind = Witness::Kind::rational;
        w.root_of = i;
        Rational r = roots[0];
        if (i == 1)
            w.coords = {Rational(exact::numer(r)), Rational(exact::denom(r)), Rational(0), Rational(1)};
        else
            w.coords = {Rational(0), Rational(1), Rational(exact::numer(r)), Rational(exact::denom(r))};
        return w;
    }
    std::vector<std::pair<BigInt, BigInt>> pts{{BigInt(1), BigInt(0)}};
    for (int b = 1; b <= height; ++b)
        for (int a = -height; a <= height; ++a)
            if (exact::gcd(BigInt(a), BigInt(b)) == 1) pts.emplace_back(a, b);
    auto squarefree = [](const BigInt& n) -> std::optional<BigInt> {
        auto fac = exact::factor_integer(exact::abs(n));
        if (!fac.complete) return std::nullopt;
        BigInt r = n < 0 ? -1 : 1;
        for (const auto& [q, e] : fac.primes)
            if (e % 2) r *= q;
        return r;
    };
    auto f1 = integral_binary_quartic(s.g1), f2 = integral_binary_quartic(s.g2);
    std::map<BigInt, std::pair<BigInt, BigInt>> classes;
    for (const auto& [u, v] : pts) {
        auto c = squarefree(eval_binary(f1, u, v));
        if (c && !classes.count(*c)) classes[*c] = {u, v};
    }
    for (const auto& [u, v] : pts) {
        auto c = squarefree(eval_binary(f2, u, v));
        if (!c) continue;
        auto it = classes.find(*c);
        if (it == classes.end()) continue;
        Witness w;
        w.kind = Witness::Kind::rational;
        w.coords = {Rational(it->second.first), Rational(it->second.second), Rational(u), Rational(v)};
        return w;
    }
    return std::nullopt;
}

inline bool verify_rational_point_A(const KummerSurfaceA& s, const Witness& w) {
    if (w.kind != Witness::Kind::rational || w.coords.size() != 4) return false;
    std::vector<BigInt> pt;
    for (const auto& c : w.coords) {
        if (exact::denom(c) != 1) return false;
        pt.push_back(exact::numer(c));
    }
    if (pt[0] == 0 && pt[1] == 0) return false;
    if (pt[2] == 0 && pt[3] == 0) return false;
    BigInt v = surface_a_value(s, pt);
    return v >= 0 && exact::is_square(v);
}

/// Q_p solubility for odd p: soluble iff some G_i has a root on P^1(Q_p) or the class sets of G1 and G2 meet.
inline LocalVerdict padic_solubility_A(const KummerSurfaceA& s, std::uint64_t p, const Effort& effort = {}) {
    localarith::require_odd_prime(p);
    LocalVerdict out;
    out.place = Place::prime(p);
    if (auto w = find_rational_point_A(s, 0); w && w->root_of) {
        out.outcome = Outcome::soluble;
        out.witness = w;
        out.certificate = "rational root of g" + std::to_string(w->root_of);
        return out;
    }
    auto f1 = integral_binary_quartic(s.g1), f2 = integral_binary_quartic(s.g2);
    auto c1 = scan_square_classes(f1, p, effort.padic_depth, effort.node_budget);
    auto c2 = scan_square_classes(f2, p, effort.padic_depth, effort.node_budget);
    for (int i = 0; i < 2; ++i) {
        const auto& c = i == 0 ? c1 : c2;
        if (!c.has_root) continue;
        Witness w;
        w.kind = Witness::Kind::padic;
        w.p = p;
        w.root_of = i + 1;
        w.precision = c.root_precision;
        w.jacobian_valuation = c.root_derivative_valuation;
        w.residues = c.root;
        out.outcome = Outcome::soluble;
        out.witness = w;
        out.certificate = "g" + std::to_string(i + 1) + " has a p-adic root (Hensel)";
        return out;
    }
    for (int cls : c1.classes)
        if (c2.classes.count(cls)) {
            Witness w;
            w.kind = Witness::Kind::padic;
            w.p = p;
            w.residues = c1.witness.at(cls);
            w.residues.insert(w.residues.end(), c2.witness.at(cls).begin(), c2.witness.at(cls).end());
            out.outcome = Outcome::soluble;
            out.witness = w;
            out.certificate = "both factors take the class " + square_class_name(cls);
            return out;
        }
    auto names = [](const std::set<int>& cs) {
        std::string r;
        for (int c : cs) r += (r.empty() ? "" : ", ") + square_class_name(c);
        return "{" + r + "}";
    };
    if (c1.complete && c2.complete) {
        out.outcome = Outcome::insoluble;
        out.certificate = "classes of G1 " + names(c1.classes) + " and of G2 " + names(c2.classes) +
                          " are disjoint and neither has a root (residue tree to depth " + std::to_string(effort.padic_depth) +
                          ")";
        return out;
    }
    out.outcome = Outcome::undecided;
    out.certificate = "residue tree unresolved at depth " + std::to_string(effort.padic_depth);
    return out;
}

/// Re-checks a p-adic witness: a class witness must give a product that is a square in Q_p; a root
/// witness must satisfy the Hensel inequality for the named quartic.
inline bool verify_padic_witness_A(const KummerSurfaceA& s, const Witness& w) {
    if (w.kind != Witness::Kind::padic) return false;
    const BigInt bp(w.p);
    if (w.root_of) {
        auto f = integral_binary_quartic(w.root_of == 1 ? s.g1 : s.g2);
        if (w.residues.size() != 2) return false;
        int c = exact::kInfiniteValuation;
        for (const auto& a : f)
            if (a != 0) c = std::min(c, exact::valuation(a, bp));
        const BigInt pc = exact::pow(bp, static_cast<unsigned>(c));
        for (auto& a : f) a /= pc;
        const BigInt& u = w.residues[0];
        const BigInt& v = w.residues[1];
        const BigInt m = exact::pow(bp, static_cast<unsigned>(w.precision));
        if (exact::mod(eval_binary(f, u, v), m) != 0) return false;
        // derivative along the chart variable
        BigInt du = 0, dv = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            int e = static_cast<int>(i);
            if (e > 0) du += f[i] * e * exact::pow(u, static_cast<unsigned>(e - 1)) * exact::pow(v, static_cast<unsigned>(4 - e));
            if (e < 4) dv += f[i] * (4 - e) * exact::pow(u, static_cast<unsigned>(e)) * exact::pow(v, static_cast<unsigned>(3 - e));
        }
        BigInt d = exact::mod(v == 1 ? du : dv, m);
        if (d == 0) return false;
        int e = exact::valuation(d, bp);
        return e == w.jacobian_valuation && w.precision > 2 * e;
    }
    if (w.residues.size() != 4) return false;
    BigInt val = surface_a_value(s, w.residues);
    return val != 0 && square_class(val, w.p) == 0;
}

}  // namespace kummer::locsol

#endif
