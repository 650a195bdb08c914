#ifndef KUMMER_KUMGEO_RESOLVENT_HPP
#define KUMMER_KUMGEO_RESOLVENT_HPP

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"

namespace kummer::kumgeo {

using exact::Rational;
using exact::UniPolyQ;

/// Invariants of a binary quartic and its resolvent cubic.
struct ResolventData {
    Rational I;
    Rational J;
    UniPolyQ cubic;  // t^3 - 27 I t - 27 J
};

/// For g = a x^4 + b x^3 + c x^2 + d x + e:
///   I = 12ae - 3bd + c^2,  J = 72ace + 9bcd - 27ad^2 - 27eb^2 - 2c^3,
/// and the cubic t^3 - 27 I t - 27 J.
inline ResolventData resolvent_cubic(const UniPolyQ& g) {
    if (g.degree() != 4) throw InputError("resolvent cubic needs a quartic, got degree " + std::to_string(g.degree()));
    const Rational a = g[4], b = g[3], c = g[2], d = g[1], e = g[0];
    ResolventData r;
    r.I = 12 * a * e - 3 * b * d + c * c;
    r.J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
    r.cubic = UniPolyQ(std::vector<Rational>{-27 * r.J, -27 * r.I, Rational(0), Rational(1)});
    return r;
}

/// The cubic t^3 - (I/3) t - J/27, whose discriminant equals disc(g) for every quartic g.
/// It is the printed cubic after t -> 9t, scaled by 1/729; both have the same splitting field.
inline UniPolyQ normalized_resolvent_cubic(const UniPolyQ& g) {
    ResolventData r = resolvent_cubic(g);
    return UniPolyQ(std::vector<Rational>{-r.J / 27, -r.I / 3, Rational(0), Rational(1)});
}

}  // namespace kummer::kumgeo

#endif
