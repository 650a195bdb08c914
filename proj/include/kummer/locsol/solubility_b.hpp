#ifndef KUMMER_LOCSOL_SOLUBILITY_B_HPP
#define KUMMER_LOCSOL_SOLUBILITY_B_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/numeric/interval.hpp>

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/kumgeo/quadrics.hpp"
#include "kummer/localarith/padic.hpp"
#include "kummer/locsol/verdict.hpp"

// Local solubility of the intersection of three quadrics in P^5 (surface B).

namespace kummer::locsol {

using kumgeo::KummerSurfaceB;
using kumgeo::QuadricSystem;

inline constexpr int kDim = kumgeo::kCoords;
inline constexpr int kMonomials = kDim * (kDim + 1) / 2;

/// Index of the monomial x_i x_j, i <= j.
inline constexpr int monomial_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return i * kDim - i * (i - 1) / 2 + (j - i);
}

/// A quadric as primitive integer coefficients of the monomials x_i x_j (i <= j).
using IntForm = std::array<BigInt, kMonomials>;
using IntSystem = std::array<IntForm, 3>;
using IntPoint = std::vector<BigInt>;

inline IntForm integral_form(const kumgeo::QuadricForm& q) {
    std::array<Rational, kMonomials> r;
    for (int i = 0; i < kDim; ++i)
        for (int j = i; j < kDim; ++j) r[static_cast<std::size_t>(monomial_index(i, j))] = (i == j ? 1 : 2) * q.gram[i][j];
    BigInt den = 1;
    for (const auto& c : r) den = exact::lcm(den, exact::denom(c));
    IntForm out;
    BigInt g = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        out[k] = exact::numer(r[k] * den);
        g = exact::gcd(g, out[k]);
    }
    if (g == 0) throw InputError("zero quadric");
    for (auto& c : out) c /= g;
    return out;
}

inline IntSystem integral_system(const QuadricSystem& qs) { return {integral_form(qs[0]), integral_form(qs[1]), integral_form(qs[2])}; }

inline BigInt eval_form(const IntForm& f, const IntPoint& x) {
    BigInt s = 0;
    for (int i = 0; i < kDim; ++i)
        for (int j = i; j < kDim; ++j) s += f[static_cast<std::size_t>(monomial_index(i, j))] * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
    return s;
}

/// dF/dx_k at x.
inline BigInt form_partial(const IntForm& f, const IntPoint& x, int k) {
    BigInt s = 0;
    for (int j = 0; j < kDim; ++j) {
        const BigInt& c = f[static_cast<std::size_t>(monomial_index(k, j))];
        s += (j == k ? 2 : 1) * c * x[static_cast<std::size_t>(j)];
    }
    return s;
}

inline BigInt minor3(const IntSystem& sys, const IntPoint& x, const std::array<int, 3>& cols) {
    BigInt m[3][3];
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = form_partial(sys[static_cast<std::size_t>(r)], x, cols[static_cast<std::size_t>(c)]);
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline const std::vector<std::array<int, 3>>& column_triples() {
    static const std::vector<std::array<int, 3>> t = [] {
        std::vector<std::array<int, 3>> v;
        for (int a = 0; a < kDim; ++a)
            for (int b = a + 1; b < kDim; ++b)
                for (int c = b + 1; c < kDim; ++c) v.push_back({a, b, c});
        return v;
    }();
    return t;
}

/// The column triple whose Jacobian minor has the least valuation mod p^j, with that valuation
/// (j when every minor vanishes mod p^j).
inline std::pair<std::array<int, 3>, int> best_minor(const IntSystem& sys, const IntPoint& x, std::uint64_t p, int j) {
    const BigInt m = exact::pow(BigInt(p), static_cast<unsigned>(j));
    std::array<int, 3> best = column_triples()[0];
    int e = j;
    for (const auto& t : column_triples()) {
        BigInt d = exact::mod(minor3(sys, x, t), m);
        if (d == 0) continue;
        int v = exact::valuation(d, BigInt(p));
        if (v < e) {
            e = v;
            best = t;
            if (e == 0) break;
        }
    }
    return {best, e};
}

/// Newton iteration on the pivot coordinates; the minor must be a unit mod p.
inline IntPoint hensel_lift_point(const IntSystem& sys, IntPoint x, const std::array<int, 3>& piv, std::uint64_t p, int k) {
    const BigInt m = exact::pow(BigInt(p), static_cast<unsigned>(k));
    for (int iter = 0; iter < 2 * k + 8; ++iter) {
        std::array<BigInt, 3> f;
        bool zero = true;
        for (int r = 0; r < 3; ++r) {
            f[static_cast<std::size_t>(r)] = exact::mod(eval_form(sys[static_cast<std::size_t>(r)], x), m);
            if (f[static_cast<std::size_t>(r)] != 0) zero = false;
        }
        if (zero) {
            for (auto& c : x) c = exact::mod(c, m);
            return x;
        }
        BigInt j[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) j[r][c] = exact::mod(form_partial(sys[static_cast<std::size_t>(r)], x, piv[static_cast<std::size_t>(c)]), m);
        BigInt adj[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
                adj[r][c] = j[r1][c1] * j[r2][c2] - j[r1][c2] * j[r2][c1];
            }
        BigInt det = j[0][0] * adj[0][0] + j[0][1] * adj[1][0] + j[0][2] * adj[2][0];
        if (exact::mod(det, BigInt(p)) == 0) throw ContractViolation("Hensel lift started at a singular point");
        BigInt inv = localarith::inverse_mod(det, m);
        for (int r = 0; r < 3; ++r) {
            BigInt d = 0;
            for (int c = 0; c < 3; ++c) d += adj[r][c] * f[static_cast<std::size_t>(c)];
            auto& xr = x[static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])];
            xr = exact::mod(xr - d * inv, m);
        }
    }
    throw ContractViolation("Hensel iteration did not converge");
}

namespace detail {

using SmallForm = std::array<std::uint64_t, kMonomials>;

inline std::array<SmallForm, 3> reduce_system(const IntSystem& sys, std::uint64_t p) {
    std::array<SmallForm, 3> out;
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < kMonomials; ++k)
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = exact::mod_u64(sys[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)], p);
    return out;
}

inline std::uint64_t eval_small(const SmallForm& f, const std::array<std::uint64_t, kDim>& x, std::uint64_t p) {
    std::uint64_t s = 0;
    for (int i = 0; i < kDim; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0) continue;
        std::uint64_t row = 0;
        for (int j = i; j < kDim; ++j) row = (row + f[static_cast<std::size_t>(monomial_index(i, j))] * x[static_cast<std::size_t>(j)]) % p;
        s = (s + row * x[static_cast<std::size_t>(i)]) % p;
    }
    return s;
}

inline IntPoint to_int_point(const std::array<std::uint64_t, kDim>& x) {
    IntPoint v;
    for (auto c : x) v.emplace_back(c);
    return v;
}

/// Scales x so that its first nonzero coordinate is 1 mod p; returns that coordinate.
inline int normalize(std::array<std::uint64_t, kDim>& x, std::uint64_t p) {
    for (int l = 0; l < kDim; ++l) {
        if (x[static_cast<std::size_t>(l)] % p == 0) continue;
        std::uint64_t inv = exact::invmod(x[static_cast<std::size_t>(l)] % p, p);
        for (auto& c : x) c = exact::mulmod(c % p, inv, p);
        return l;
    }
    return -1;
}

inline constexpr std::size_t kSingularCap = 4096;

struct PointSearch {
    std::optional<Witness> witness;
    std::uint64_t points = 0;  // F_p-points met
    std::vector<std::pair<IntPoint, int>> singular;  // normalized point, leading coordinate
    bool singular_overflow = false;
    bool exhaustive = false;
};

inline std::optional<Witness> try_smooth(const IntSystem& sys, const IntPoint& x, std::uint64_t p, int k) {
    auto [piv, e] = best_minor(sys, x, p, 1);
    if (e != 0) return std::nullopt;
    Witness w;
    w.kind = Witness::Kind::padic;
    w.p = p;
    w.precision = k;
    w.pivots = {piv[0], piv[1], piv[2]};
    w.residues = hensel_lift_point(sys, x, piv, p, k);
    return w;
}

inline void enumerate_points(const IntSystem& sys, std::uint64_t p, int k, PointSearch& out) {
    auto small = reduce_system(sys, p);
    std::array<std::uint64_t, kDim> x{};
    for (int lead = 0; lead < kDim; ++lead) {
        const int free = kDim - 1 - lead;
        std::uint64_t total = 1;
        for (int i = 0; i < free; ++i) total *= p;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            x.fill(0);
            x[static_cast<std::size_t>(lead)] = 1;
            std::uint64_t t = idx;
            for (int i = kDim - 1; i > lead; --i) {
                x[static_cast<std::size_t>(i)] = t % p;
                t /= p;
            }
            if (eval_small(small[0], x, p) || eval_small(small[1], x, p) || eval_small(small[2], x, p)) continue;
            ++out.points;
            IntPoint ip = to_int_point(x);
            if (auto w = try_smooth(sys, ip, p, k)) {
                out.witness = w;
                return;
            }
            if (out.singular.size() < kSingularCap)
                out.singular.emplace_back(ip, lead);
            else
                out.singular_overflow = true;
        }
    }
    out.exhaustive = true;
}

/// Random slices: nfix coordinates fixed at random, the other free ones enumerated and the last
/// solved from a quadric in which it appears.
inline void slice_points(const IntSystem& sys, std::uint64_t p, int k, int trials, int nfix, std::uint64_t seed, PointSearch& out) {
    auto small = reduce_system(sys, p);
    std::mt19937_64 rng(seed);
    const int nenum = kDim - 1 - nfix;
    std::uint64_t total = 1;
    for (int i = 0; i < nenum; ++i) total *= p;
    for (int trial = 0; trial < trials && !out.witness; ++trial) {
        std::array<int, kDim> perm{0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::array<std::uint64_t, kDim> x{};
        bool nonzero = false;
        for (int i = 0; i < nfix; ++i) {
            x[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = rng() % p;
            nonzero = nonzero || x[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] != 0;
        }
        if (!nonzero) x[static_cast<std::size_t>(perm[0])] = 1;
        const int y = perm[kDim - 1];
        for (std::uint64_t idx = 0; idx < total && !out.witness; ++idx) {
            std::uint64_t t = idx;
            for (int i = 0; i < nenum; ++i) {
                x[static_cast<std::size_t>(perm[static_cast<std::size_t>(nfix + i)])] = t % p;
                t /= p;
            }
            x[static_cast<std::size_t>(y)] = 0;
            // Q_r(y) = A y^2 + B y + C
            std::uint64_t A[3], B[3], C[3];
            for (int r = 0; r < 3; ++r) {
                const auto& f = small[static_cast<std::size_t>(r)];
                A[r] = f[static_cast<std::size_t>(monomial_index(y, y))];
                std::uint64_t lin = 0;
                for (int j = 0; j < kDim; ++j)
                    if (j != y) lin = (lin + f[static_cast<std::size_t>(monomial_index(y, j))] * x[static_cast<std::size_t>(j)]) % p;
                B[r] = lin;
                C[r] = eval_small(f, x, p);
            }
            std::vector<std::uint64_t> cands;
            int r = 0;
            while (r < 3 && A[r] == 0 && B[r] == 0 && C[r] == 0) ++r;
            if (r == 3) {
                cands.push_back(0);
            } else if (A[r] == 0 && B[r] == 0) {
                continue;  // a nonzero constant
            } else if (A[r] == 0) {
                cands.push_back(exact::mulmod((p - C[r]) % p, exact::invmod(B[r], p), p));
            } else {
                std::uint64_t disc = (exact::mulmod(B[r], B[r], p) + p - exact::mulmod(4 % p, exact::mulmod(A[r], C[r], p), p)) % p;
                if (disc != 0 && exact::legendre(disc, p) != 1) continue;
                std::uint64_t s = disc == 0 ? 0 : exact::sqrt_mod(disc, p);
                std::uint64_t inv2a = exact::invmod(exact::mulmod(2, A[r], p), p);
                cands.push_back(exact::mulmod((p - B[r] + s) % p, inv2a, p));
                if (s) cands.push_back(exact::mulmod((2 * p - B[r] - s) % p, inv2a, p));
            }
            for (auto yv : cands) {
                auto z = x;
                z[static_cast<std::size_t>(y)] = yv;
                if (eval_small(small[0], z, p) || eval_small(small[1], z, p) || eval_small(small[2], z, p)) continue;
                int lead = normalize(z, p);
                if (lead < 0) continue;
                ++out.points;
                IntPoint ip = to_int_point(z);
                if (auto w = try_smooth(sys, ip, p, k)) {
                    out.witness = w;
                    break;
                }
                if (out.singular.size() < kSingularCap)
                    out.singular.emplace_back(ip, lead);
                else
                    out.singular_overflow = true;
            }
        }
    }
}

/// Solutions t in F_p^n of A t = b (A is rows x n), as a particular solution plus a nullspace basis.
inline std::optional<std::pair<std::vector<std::uint64_t>, std::vector<std::vector<std::uint64_t>>>> solve_mod_p(
    std::vector<std::vector<std::uint64_t>> a, std::vector<std::uint64_t> b, std::uint64_t p) {
    const std::size_t rows = a.size(), n = a.empty() ? 0 : a[0].size();
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        std::uint64_t inv = exact::invmod(a[r][c], p);
        for (auto& v : a[r]) v = exact::mulmod(v, inv, p);
        b[r] = exact::mulmod(b[r], inv, p);
        for (std::size_t o = 0; o < rows; ++o) {
            if (o == r || a[o][c] == 0) continue;
            std::uint64_t f = a[o][c];
            for (std::size_t k = 0; k < n; ++k) a[o][k] = (a[o][k] + p - exact::mulmod(f, a[r][k], p)) % p;
            b[o] = (b[o] + p - exact::mulmod(f, b[r], p)) % p;
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    for (std::size_t o = r; o < rows; ++o)
        if (b[o] != 0) return std::nullopt;
    std::vector<std::uint64_t> part(n, 0);
    for (std::size_t i = 0; i < r; ++i) part[static_cast<std::size_t>(pivot_col[i])] = b[i];
    std::vector<std::vector<std::uint64_t>> null;
    for (std::size_t c = 0; c < n; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) != pivot_col.end()) continue;
        std::vector<std::uint64_t> v(n, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < r; ++i) v[static_cast<std::size_t>(pivot_col[i])] = (p - a[i][c]) % p;
        null.push_back(std::move(v));
    }
    return std::make_pair(part, null);
}

/// Depth-first search over lifts of a singular F_p-point for some x mod p^j on the system with a
/// Jacobian minor of valuation e, 2e < j. For j >= 1 the lifts x + p^j t with F = 0 mod p^{j+1}
/// are the solutions of grad F(x) t = -F(x)/p^j mod p. complete stays true only if every branch died
/// before max_depth within the budget, i.e. no Z_p-point reduces to x0.
inline std::optional<Witness> deep_search(const IntSystem& sys, const IntPoint& x0, int lead, std::uint64_t p, int max_depth,
                                          std::uint64_t& budget, bool& complete) {
    struct Node {
        IntPoint x;
        int j;
    };
    std::vector<Node> stack{{x0, 1}};
    const BigInt bp(p);
    std::vector<int> free;
    for (int i = 0; i < kDim; ++i)
        if (i != lead) free.push_back(i);
    while (!stack.empty()) {
        if (budget == 0) {
            complete = false;
            return std::nullopt;
        }
        --budget;
        Node n = std::move(stack.back());
        stack.pop_back();
        auto [piv, e] = best_minor(sys, n.x, p, n.j);
        if (n.j > 2 * e) {
            Witness w;
            w.kind = Witness::Kind::padic;
            w.p = p;
            w.precision = n.j;
            w.jacobian_valuation = e;
            w.pivots = {piv[0], piv[1], piv[2]};
            w.residues = n.x;
            return w;
        }
        if (n.j >= max_depth) {
            complete = false;
            continue;
        }
        const BigInt pj = exact::pow(bp, static_cast<unsigned>(n.j));
        std::vector<std::vector<std::uint64_t>> a(3, std::vector<std::uint64_t>(free.size()));
        std::vector<std::uint64_t> b(3);
        for (int r = 0; r < 3; ++r) {
            b[static_cast<std::size_t>(r)] = exact::mod_u64(-(eval_form(sys[static_cast<std::size_t>(r)], n.x) / pj), p);
            for (std::size_t c = 0; c < free.size(); ++c)
                a[static_cast<std::size_t>(r)][c] = exact::mod_u64(form_partial(sys[static_cast<std::size_t>(r)], n.x, free[c]), p);
        }
        auto sol = solve_mod_p(a, b, p);
        if (!sol) continue;
        const auto& [part, null] = *sol;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < null.size(); ++i) {
            total *= p;
            if (total > budget) break;
        }
        if (total > budget) {
            budget = 0;
            complete = false;
            return std::nullopt;
        }
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<std::uint64_t> t = part;
            std::uint64_t k = idx;
            for (const auto& v : null) {
                std::uint64_t coef = k % p;
                k /= p;
                for (std::size_t c = 0; c < t.size(); ++c) t[c] = (t[c] + coef * v[c]) % p;
            }
            IntPoint y = n.x;
            for (std::size_t c = 0; c < free.size(); ++c) y[static_cast<std::size_t>(free[c])] += BigInt(t[c]) * pj;
            stack.push_back({std::move(y), n.j + 1});
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Points with integer coordinates in [-bound, bound], first nonzero coordinate positive.
inline std::optional<Witness> find_rational_point_B(const QuadricSystem& qs, int bound) {
    auto sys = integral_system(qs);
    const int side = 2 * bound + 1;
    std::uint64_t total = 1;
    for (int i = 0; i < kDim; ++i) total *= static_cast<std::uint64_t>(side);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        IntPoint x(kDim);
        std::uint64_t t = idx;
        for (int i = kDim - 1; i >= 0; --i) {
            x[static_cast<std::size_t>(i)] = static_cast<long long>(t % static_cast<std::uint64_t>(side)) - bound;
            t /= static_cast<std::uint64_t>(side);
        }
        auto first = std::find_if(x.begin(), x.end(), [](const BigInt& c) { return c != 0; });
        if (first == x.end() || *first < 0) continue;
        if (eval_form(sys[0], x) != 0 || eval_form(sys[1], x) != 0 || eval_form(sys[2], x) != 0) continue;
        Witness w;
        w.kind = Witness::Kind::rational;
        for (const auto& c : x) w.coords.emplace_back(c);
        return w;
    }
    return std::nullopt;
}

inline bool verify_rational_point_B(const QuadricSystem& qs, const Witness& w) {
    if (w.kind != Witness::Kind::rational || w.coords.size() != kDim) return false;
    if (std::all_of(w.coords.begin(), w.coords.end(), [](const Rational& c) { return c == 0; })) return false;
    return kumgeo::on_surface(qs, w.coords);
}

/// F = 0 mod p^precision at a point not divisible by p, with a pivot minor of valuation e, precision > 2e.
inline bool verify_padic_witness_B(const QuadricSystem& qs, const Witness& w) {
    if (w.kind != Witness::Kind::padic || w.residues.size() != kDim || w.pivots.size() != 3) return false;
    auto sys = integral_system(qs);
    const BigInt bp(w.p);
    const BigInt m = exact::pow(bp, static_cast<unsigned>(w.precision));
    if (std::all_of(w.residues.begin(), w.residues.end(), [&](const BigInt& c) { return exact::mod(c, bp) == 0; })) return false;
    for (const auto& f : sys)
        if (exact::mod(eval_form(f, w.residues), m) != 0) return false;
    BigInt d = exact::mod(minor3(sys, w.residues, {w.pivots[0], w.pivots[1], w.pivots[2]}), m);
    if (d == 0) return false;
    int e = exact::valuation(d, bp);
    return e == w.jacobian_valuation && w.precision > 2 * e;
}

/// Q_p solubility for odd p. Soluble with a Hensel witness; insoluble only when the reduction of the
/// primitive integral system has no F_p-point at all (exhaustive for p <= effort.enumeration_limit).
inline LocalVerdict padic_solubility_B(const KummerSurfaceB& s, std::uint64_t p, const Effort& effort = {}) {
    localarith::require_odd_prime(p);
    LocalVerdict out;
    out.place = Place::prime(p);
    auto sys = integral_system(s.quadrics);
    detail::PointSearch search;
    if (p <= effort.enumeration_limit) {
        detail::enumerate_points(sys, p, effort.padic_depth, search);
    } else if (p <= effort.slice_prime_limit) {
        const std::uint64_t seed = effort.seed ^ (p * 0x9e3779b97f4a7c15ull);
        detail::slice_points(sys, p, effort.padic_depth, effort.slice_trials, 3, seed, search);
        // degenerate reductions can lie in a linear subspace that three fixed coordinates miss
        const std::uint64_t p3 = p * p * p;
        if (!search.witness && p3 <= effort.node_budget)
            detail::slice_points(sys, p, effort.padic_depth, static_cast<int>(std::max<std::uint64_t>(1, effort.node_budget / (4 * p3))), 2,
                                 seed + 1, search);
    } else {
        out.certificate = "p above the slice search limit " + std::to_string(effort.slice_prime_limit);
        return out;
    }
    if (search.witness) {
        out.outcome = Outcome::soluble;
        out.witness = search.witness;
        out.certificate = "smooth F_p-point lifted by Hensel to precision " + std::to_string(effort.padic_depth);
        return out;
    }
    if (search.exhaustive && search.points == 0) {
        out.outcome = Outcome::insoluble;
        out.certificate = "the reduction mod p has no F_p-point (all of P^5(F_p) enumerated)";
        return out;
    }
    std::uint64_t budget = effort.node_budget;
    bool complete = search.exhaustive && !search.singular_overflow;
    for (const auto& [x, lead] : search.singular) {
        if (auto w = detail::deep_search(sys, x, lead, p, effort.padic_depth, budget, complete)) {
            out.outcome = Outcome::soluble;
            out.witness = w;
            out.certificate = "Hensel with a Jacobian minor of valuation " + std::to_string(w->jacobian_valuation);
            return out;
        }
        if (budget == 0) break;
    }
    if (complete) {
        out.outcome = Outcome::insoluble;
        out.certificate = "all " + std::to_string(search.points) +
                          " F_p-points are singular and none lifts to a solution mod a higher power of p";
        return out;
    }
    out.certificate = search.points ? "only singular F_p-points found; lifts unresolved within the budget"
                                    : "no F_p-point found by the slice search";
    return out;
}

namespace detail {

using Interval = boost::numeric::interval<double>;

inline Interval enclose(const Rational& r) {
    double d = r.convert_to<double>();
    double lo = std::nextafter(std::nextafter(d, -HUGE_VAL), -HUGE_VAL);
    double hi = std::nextafter(std::nextafter(d, HUGE_VAL), HUGE_VAL);
    return Interval(lo, hi);
}

using IntervalGram = std::array<std::array<std::array<Interval, kDim>, kDim>, 3>;

inline IntervalGram interval_gram(const QuadricSystem& qs) {
    IntervalGram g;
    for (int r = 0; r < 3; ++r)
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) g[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = enclose(qs[static_cast<std::size_t>(r)].gram[i][j]);
    return g;
}

/// Krawczyk test on the pivot coordinates: K(X) inside the interior of X proves a unique zero in X
/// of the square system obtained by fixing the other coordinates.
inline bool krawczyk(const IntervalGram& g, const std::array<Interval, kDim>& fixed, const std::array<int, 3>& piv,
                     const std::array<Interval, 3>& box) {
    std::array<double, 3> mid;
    for (int k = 0; k < 3; ++k) mid[static_cast<std::size_t>(k)] = boost::numeric::median(box[static_cast<std::size_t>(k)]);
    auto assemble = [&](bool at_mid) {
        std::array<Interval, kDim> x = fixed;
        for (int k = 0; k < 3; ++k)
            x[static_cast<std::size_t>(piv[static_cast<std::size_t>(k)])] = at_mid ? Interval(mid[static_cast<std::size_t>(k)]) : box[static_cast<std::size_t>(k)];
        return x;
    };
    auto xm = assemble(true), xb = assemble(false);
    std::array<Interval, 3> f;
    Interval jx[3][3];
    double jm[3][3];
    for (int r = 0; r < 3; ++r) {
        Interval s(0.0);
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) s += g[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * xm[static_cast<std::size_t>(i)] * xm[static_cast<std::size_t>(j)];
        f[static_cast<std::size_t>(r)] = s;
        for (int c = 0; c < 3; ++c) {
            const int k = piv[static_cast<std::size_t>(c)];
            Interval db(0.0), dm(0.0);
            for (int j = 0; j < kDim; ++j) {
                db += g[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * xb[static_cast<std::size_t>(j)];
                dm += g[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * xm[static_cast<std::size_t>(j)];
            }
            jx[r][c] = 2.0 * db;
            jm[r][c] = 2.0 * boost::numeric::median(dm);
        }
    }
    double det = jm[0][0] * (jm[1][1] * jm[2][2] - jm[1][2] * jm[2][1]) - jm[0][1] * (jm[1][0] * jm[2][2] - jm[1][2] * jm[2][0]) +
                 jm[0][2] * (jm[1][0] * jm[2][1] - jm[1][1] * jm[2][0]);
    if (!std::isfinite(det) || det == 0.0) return false;
    double y[3][3];
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
            y[r][c] = (jm[r1][c1] * jm[r2][c2] - jm[r1][c2] * jm[r2][c1]) / det;
        }
    for (int k = 0; k < 3; ++k) {
        Interval kk(mid[static_cast<std::size_t>(k)]);
        for (int i = 0; i < 3; ++i) kk -= Interval(y[k][i]) * f[static_cast<std::size_t>(i)];
        for (int l = 0; l < 3; ++l) {
            Interval m(k == l ? 1.0 : 0.0);
            for (int i = 0; i < 3; ++i) m -= Interval(y[k][i]) * jx[i][l];
            kk += m * (box[static_cast<std::size_t>(l)] - Interval(mid[static_cast<std::size_t>(l)]));
        }
        const auto& b = box[static_cast<std::size_t>(k)];
        if (!(kk.lower() > b.lower() && kk.upper() < b.upper())) return false;
    }
    return true;
}

inline std::optional<Witness> certify_real(const QuadricSystem& qs, const IntervalGram& g, const std::array<double, kDim>& x,
                                           const std::array<std::array<std::array<double, kDim>, kDim>, 3>& gd) {
    // pivots: the minor of largest magnitude
    double jac[3][kDim];
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < kDim; ++k) {
            double s = 0;
            for (int j = 0; j < kDim; ++j) s += gd[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
            jac[r][k] = 2 * s;
        }
    std::array<int, 3> piv{};
    double best = 0;
    for (const auto& t : column_triples()) {
        double m[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m[r][c] = jac[r][t[static_cast<std::size_t>(c)]];
        double d = std::fabs(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
        if (d > best) {
            best = d;
            piv = t;
        }
    }
    if (best == 0) return std::nullopt;
    std::array<Interval, kDim> fixed;
    std::vector<Rational> coords(kDim);
    for (int i = 0; i < kDim; ++i) {
        coords[static_cast<std::size_t>(i)] = Rational(x[static_cast<std::size_t>(i)]);
        fixed[static_cast<std::size_t>(i)] = Interval(x[static_cast<std::size_t>(i)]);
    }
    for (double r : {1e-12, 1e-10, 1e-8, 1e-6}) {
        std::array<Interval, 3> box;
        for (int k = 0; k < 3; ++k) {
            double c = x[static_cast<std::size_t>(piv[static_cast<std::size_t>(k)])];
            box[static_cast<std::size_t>(k)] = Interval(c - r, c + r);
        }
        if (!krawczyk(g, fixed, piv, box)) continue;
        Witness w;
        w.kind = Witness::Kind::real_interval;
        w.coords = coords;
        w.pivots = {piv[0], piv[1], piv[2]};
        for (const auto& b : box) w.boxes.emplace_back(Rational(b.lower()), Rational(b.upper()));
        return w;
    }
    (void)qs;
    return std::nullopt;
}

}  // namespace detail

/// Re-runs the Krawczyk test from the witness data alone.
inline bool verify_real_witness_B(const QuadricSystem& qs, const Witness& w) {
    if (w.kind != Witness::Kind::real_interval || w.coords.size() != kDim || w.pivots.size() != 3 || w.boxes.size() != 3) return false;
    auto g = detail::interval_gram(qs);
    std::array<detail::Interval, kDim> fixed;
    for (int i = 0; i < kDim; ++i) fixed[static_cast<std::size_t>(i)] = detail::enclose(w.coords[static_cast<std::size_t>(i)]);
    std::array<detail::Interval, 3> box;
    for (int k = 0; k < 3; ++k) {
        const auto& [lo, hi] = w.boxes[static_cast<std::size_t>(k)];
        box[static_cast<std::size_t>(k)] = detail::Interval(detail::enclose(lo).lower(), detail::enclose(hi).upper());
    }
    return detail::krawczyk(g, fixed, {w.pivots[0], w.pivots[1], w.pivots[2]}, box);
}

/// The real place: exact small rational points first, then Gauss-Newton from random starts on the
/// unit sphere with Krawczyk certification. Never claims insolubility.
inline LocalVerdict real_solubility_B(const KummerSurfaceB& s, int samples, std::uint64_t seed = 1) {
    LocalVerdict out;
    out.place = Place::real();
    if (auto w = find_rational_point_B(s.quadrics, 1)) {
        out.outcome = Outcome::soluble;
        out.witness = w;
        out.certificate = "rational point";
        return out;
    }
    std::array<std::array<std::array<double, kDim>, kDim>, 3> gd;
    for (int r = 0; r < 3; ++r) {
        double scale = 0;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                scale = std::max(scale, std::fabs(s.quadrics[static_cast<std::size_t>(r)].gram[i][j].convert_to<double>()));
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                gd[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    s.quadrics[static_cast<std::size_t>(r)].gram[i][j].convert_to<double>() / scale;
    }
    auto g = detail::interval_gram(s.quadrics);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    for (int sample = 0; sample < samples; ++sample) {
        std::array<double, kDim> x;
        for (auto& c : x) c = normal(rng);
        double resid = 1;
        for (int iter = 0; iter < 80; ++iter) {
            double nx = 0;
            for (double c : x) nx += c * c;
            nx = std::sqrt(nx);
            for (auto& c : x) c /= nx;
            double f[3], jac[3][kDim];
            resid = 0;
            for (int r = 0; r < 3; ++r) {
                double val = 0;
                for (int k = 0; k < kDim; ++k) {
                    double row = 0;
                    for (int j = 0; j < kDim; ++j) row += gd[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
                    jac[r][k] = 2 * row;
                    val += row * x[static_cast<std::size_t>(k)];
                }
                f[r] = val;
                resid = std::max(resid, std::fabs(val));
            }
            if (resid < 1e-15) break;
            // step = J^T (J J^T)^{-1} f
            double a[3][3];
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) {
                    a[r][c] = 0;
                    for (int k = 0; k < kDim; ++k) a[r][c] += jac[r][k] * jac[c][k];
                }
            double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
            if (std::fabs(det) < 1e-300) break;
            double lam[3];
            for (int r = 0; r < 3; ++r) {
                lam[r] = 0;
                for (int c = 0; c < 3; ++c) {
                    int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
                    lam[r] += (a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1]) / det * f[c];
                }
            }
            for (int k = 0; k < kDim; ++k)
                for (int r = 0; r < 3; ++r) x[static_cast<std::size_t>(k)] -= jac[r][k] * lam[r];
        }
        if (resid > 1e-9) continue;
        if (auto w = detail::certify_real(s.quadrics, g, x, gd)) {
            out.outcome = Outcome::soluble;
            out.witness = w;
            out.certificate = "Krawczyk-certified real point";
            return out;
        }
    }
    out.certificate = "no certified real point in " + std::to_string(samples) + " samples (real insolubility is never claimed)";
    return out;
}

}  // namespace kummer::locsol

#endif
