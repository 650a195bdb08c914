#ifndef KUMMER_KUMGEO_SURFACE_A_HPP
#define KUMMER_KUMGEO_SURFACE_A_HPP

#include "kummer/errors.hpp"
#include "kummer/exact/poly.hpp"

namespace kummer::kumgeo {

using exact::Rational;
using exact::UniPolyQ;

/// z^2 = g1(x) g2(y).
struct KummerSurfaceA {
    UniPolyQ g1;
    UniPolyQ g2;

    Rational eval(const Rational& x, const Rational& y) const { return g1.eval(x) * g2.eval(y); }
};

inline KummerSurfaceA theorem_a_surface(const UniPolyQ& g1, const UniPolyQ& g2) {
    if (g1.degree() != 4 || g2.degree() != 4) throw InputError("surface A needs two quartics");
    return {g1, g2};
}

}  // namespace kummer::kumgeo

#endif
