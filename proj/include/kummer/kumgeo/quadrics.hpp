#ifndef KUMMER_KUMGEO_QUADRICS_HPP
#define KUMMER_KUMGEO_QUADRICS_HPP

#include <array>
#include <string>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/exact/algebra.hpp"
#include "kummer/exact/irreducible.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"
#include "kummer/exact/resultant.hpp"
#include "kummer/localarith/lambda.hpp"

namespace kummer::kumgeo {

using exact::BigInt;
using exact::RatMatrix;
using exact::Rational;
using exact::UniPolyQ;
using localarith::LambdaElement;

/// Coordinates on P^5: u = c0 + c1 theta + ... + c4 theta^4 and u0 = d, in the order (c0, ..., c4, d).
inline constexpr int kCoords = 6;
inline const std::array<const char*, kCoords> kCoordNames = {"c0", "c1", "c2", "c3", "c4", "d"};

/// Quadratic form x^T G x with G symmetric.
struct QuadricForm {
    RatMatrix gram = RatMatrix(kCoords, std::vector<Rational>(kCoords));

    Rational operator()(const std::vector<Rational>& x) const {
        if (x.size() != gram.size()) throw InputError("point has the wrong number of coordinates");
        Rational s = 0;
        for (std::size_t i = 0; i < gram.size(); ++i)
            for (std::size_t j = 0; j < gram.size(); ++j) s += gram[i][j] * x[i] * x[j];
        return s;
    }

    /// B(x, y) = x^T G y.
    Rational bilinear(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
        Rational s = 0;
        for (std::size_t i = 0; i < gram.size(); ++i)
            for (std::size_t j = 0; j < gram.size(); ++j) s += gram[i][j] * x[i] * y[j];
        return s;
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < gram.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (gram[i][j] != gram[j][i]) return false;
        return true;
    }

    /// Coefficients (A, B, C) of Q(r a + s b) = A r^2 + B r s + C s^2.
    std::array<Rational, 3> restrict_to_line(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
        return {(*this)(a), 2 * bilinear(a, b), (*this)(b)};
    }
};

/// Three quadrics in P^5.
using QuadricSystem = std::array<QuadricForm, 3>;

struct KummerSurfaceB {
    UniPolyQ f;
    LambdaElement lambda;
    QuadricSystem quadrics;
    Rational norm;  // N_{L/k}(lambda)
};

/// Tr_{L/k}(lambda theta^k / f'(theta)) for k = 0 .. count-1.
inline std::vector<Rational> twisted_traces(const UniPolyQ& f, const UniPolyQ& lambda, int count) {
    UniPolyQ w = exact::ring_mul(f, lambda, exact::inverse_mod(f.derivative() % f, f));
    std::vector<Rational> t;
    UniPolyQ pw = w;
    for (int k = 0; k < count; ++k) {
        t.push_back(exact::element_trace(f, pw));
        pw = exact::ring_mul(f, pw, UniPolyQ::x());
    }
    return t;
}

/// The surface Tr(lambda u^2/f'(theta)) = Tr(lambda theta u^2/f'(theta)) = Tr(lambda theta^2 u^2/f'(theta)) - N(lambda) u0^2 = 0.
/// Gram entry (i, j) of Q_{e+1} is Tr(lambda theta^{e+i+j}/f'(theta)); u and u0 do not mix.
inline KummerSurfaceB kummer_quadrics(const UniPolyQ& f, const LambdaElement& lambda) {
    if (f.degree() != 5 || !f.is_monic()) throw InputError("kummer_quadrics needs a monic quintic");
    if (exact::discriminant(f) == 0) throw InputError("f has a repeated root");
    auto irr = exact::irreducibility_over_q(f);
    if (!irr.decided) throw InputError("could not decide irreducibility of " + f.to_string());
    if (!irr.irreducible) throw InputError(f.to_string() + " is reducible");
    KummerSurfaceB s;
    s.f = f;
    s.lambda = LambdaElement{lambda.reduced(f)};
    auto t = twisted_traces(f, s.lambda.a, 11);
    for (int e = 0; e < 3; ++e)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) s.quadrics[e].gram[i][j] = t[e + i + j];
    s.norm = exact::element_norm(f, s.lambda.a);
    s.quadrics[2].gram[5][5] = -s.norm;
    return s;
}

/// Direction vectors of the line u = r + s theta, u0 = s.
inline std::pair<std::vector<Rational>, std::vector<Rational>> lambda_one_line() {
    std::vector<Rational> a(kCoords), b(kCoords);
    a[0] = 1;
    b[1] = 1;
    b[5] = 1;
    return {a, b};
}

/// Whether every quadric of the system vanishes at x.
inline bool on_surface(const QuadricSystem& q, const std::vector<Rational>& x) {
    for (const auto& form : q)
        if (form(x) != 0) return false;
    return true;
}

}  // namespace kummer::kumgeo

#endif
