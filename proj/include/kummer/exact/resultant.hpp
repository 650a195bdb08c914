#ifndef KUMMER_EXACT_RESULTANT_HPP
#define KUMMER_EXACT_RESULTANT_HPP

#include <vector>

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"

namespace kummer::exact {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Determinant by Bareiss fraction-free elimination. Every intermediate entry is an
/// exact minor of the input, so all divisions are exact.
inline BigInt bareiss_determinant(IntMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Sylvester matrix of integer polynomials (coefficients lowest first), rows of f then g,
/// highest-degree coefficient in the leftmost column.
inline IntMatrix sylvester_matrix(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
    const int m = static_cast<int>(f.size()) - 1;
    const int n = static_cast<int>(g.size()) - 1;
    const int size = m + n;
    IntMatrix s(static_cast<std::size_t>(size), std::vector<BigInt>(static_cast<std::size_t>(size)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] = f[static_cast<std::size_t>(i)];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - i)] = g[static_cast<std::size_t>(i)];
    return s;
}

/// Res(f, g) = lc(f)^deg g * prod_{f(a)=0} g(a), via the Sylvester determinant.
inline Rational resultant(const UniPolyQ& f, const UniPolyQ& g) {
    if (f.is_zero() || g.is_zero()) throw InputError("resultant of the zero polynomial");
    if (f.degree() == 0 && g.degree() == 0) return 1;
    if (f.degree() == 0) return pow(f.leading(), static_cast<unsigned>(g.degree()));
    if (g.degree() == 0) return pow(g.leading(), static_cast<unsigned>(f.degree()));
    // Clear denominators: Res(f/a, g/b) = Res(f, g) / (a^deg g * b^deg f).
    BigInt df = f.denominator_lcm(), dg = g.denominator_lcm();
    std::vector<BigInt> fi, gi;
    for (const auto& c : f.coeffs()) fi.push_back(numer(c * df));
    for (const auto& c : g.coeffs()) gi.push_back(numer(c * dg));
    BigInt det = bareiss_determinant(sylvester_matrix(fi, gi));
    BigInt scale = pow(df, static_cast<unsigned>(g.degree())) * pow(dg, static_cast<unsigned>(f.degree()));
    return Rational(det, scale);
}

/// (-1)^{n(n-1)/2} Res(f, f') / lc(f).
inline Rational discriminant(const UniPolyQ& f) {
    const int n = f.degree();
    if (n < 2) throw InputError("discriminant needs degree >= 2, got " + std::to_string(n));
    Rational r = resultant(f, f.derivative()) / f.leading();
    return ((n * (n - 1) / 2) % 2 == 0) ? r : Rational(-r);
}

/// Power sums Tr(theta^i), 0 <= i < count, of the roots of a monic f (Newton's identities).
inline std::vector<Rational> trace_powers(const UniPolyQ& f, int count) {
    if (f.degree() < 1) throw InputError("trace_powers needs degree >= 1");
    if (!f.is_monic()) throw InputError("trace_powers needs a monic polynomial");
    const int n = f.degree();
    std::vector<Rational> p(static_cast<std::size_t>(std::max(count, 0)));
    for (int k = 0; k < count; ++k) {
        if (k == 0) {
            p[0] = n;
            continue;
        }
        Rational s = 0;
        for (int j = 1; j <= std::min(k - 1, n); ++j) s += f[n - j] * p[static_cast<std::size_t>(k - j)];
        if (k <= n) s += Rational(k) * f[n - k];
        p[static_cast<std::size_t>(k)] = -s;
    }
    return p;
}

}  // namespace kummer::exact

#endif
