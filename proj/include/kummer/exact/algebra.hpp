#ifndef KUMMER_EXACT_ALGEBRA_HPP
#define KUMMER_EXACT_ALGEBRA_HPP

#include <vector>

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"
#include "kummer/exact/resultant.hpp"

// Arithmetic in the quotient ring Q[x]/(f) for monic f, elements written a(theta) with
// deg a < deg f in the power basis 1, theta, ..., theta^{n-1}.

namespace kummer::exact {

using RatMatrix = std::vector<std::vector<Rational>>;

/// Determinant over Q by fraction-valued Gaussian elimination.
inline Rational determinant(RatMatrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational factor = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
        }
    }
    return det;
}

inline void require_monic(const UniPolyQ& f) {
    if (!f.is_monic() || f.degree() < 1) throw InputError("quotient ring arithmetic needs a monic polynomial of degree >= 1");
}

/// Matrix of multiplication by a(theta); column j holds a(theta) * theta^j.
inline RatMatrix multiplication_matrix(const UniPolyQ& f, const UniPolyQ& a) {
    require_monic(f);
    const int n = f.degree();
    RatMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    UniPolyQ col = a % f;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[i];
        col = (col * UniPolyQ::x()) % f;
    }
    return m;
}

/// Tr(a(theta)) = sum_j a_j Tr(theta^j).
inline Rational element_trace(const UniPolyQ& f, const UniPolyQ& a) {
    require_monic(f);
    UniPolyQ r = a % f;
    auto p = trace_powers(f, f.degree());
    Rational t = 0;
    for (int j = 0; j <= r.degree(); ++j) t += r[j] * p[static_cast<std::size_t>(j)];
    return t;
}

/// N(a(theta)) as the determinant of multiplication by a(theta).
inline Rational element_norm(const UniPolyQ& f, const UniPolyQ& a) { return determinant(multiplication_matrix(f, a)); }

/// Characteristic polynomial of a(theta) acting on Q[x]/(f), from the power sums
/// Tr(a(theta)^k) by Newton's identities.
inline UniPolyQ characteristic_polynomial(const UniPolyQ& f, const UniPolyQ& a) {
    require_monic(f);
    const int n = f.degree();
    auto tp = trace_powers(f, n);
    auto trace_of = [&](const UniPolyQ& b) {
        Rational t = 0;
        for (int j = 0; j <= b.degree(); ++j) t += b[j] * tp[static_cast<std::size_t>(j)];
        return t;
    };
    std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
    UniPolyQ power = UniPolyQ::constant(1);
    UniPolyQ base = a % f;
    for (int k = 1; k <= n; ++k) {
        power = (power * base) % f;
        p[static_cast<std::size_t>(k)] = trace_of(power);
    }
    std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) {
            Rational term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
            acc += (i % 2 == 1) ? term : Rational(-term);
        }
        e[static_cast<std::size_t>(k)] = acc / k;
    }
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(n - k)] = (k % 2 == 0) ? e[static_cast<std::size_t>(k)] : Rational(-e[static_cast<std::size_t>(k)]);
    return UniPolyQ(std::move(c));
}

/// a(theta) * b(theta) reduced mod f.
inline UniPolyQ ring_mul(const UniPolyQ& f, const UniPolyQ& a, const UniPolyQ& b) { return (a * b) % f; }

/// Inverse of a(theta) in Q[x]/(f); throws InputError when a and f are not coprime.
inline UniPolyQ ring_inverse(const UniPolyQ& f, const UniPolyQ& a) { return inverse_mod(a, f); }

}  // namespace kummer::exact

#endif
