#ifndef KUMMER_EXACT_REALROOTS_HPP
#define KUMMER_EXACT_REALROOTS_HPP

#include <vector>

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"

namespace kummer::exact {

/// Closed interval [lo, hi] with rational endpoints; lo == hi marks an exact root.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
};

/// Intervals are refined below this width unless an endpoint is an exact root.
inline const Rational kRootTolerance = Rational(1, 65536);

/// Sturm sequence f, f', -rem(f, f'), ... (signed remainders).
inline std::vector<UniPolyQ> sturm_sequence(const UniPolyQ& f) {
    std::vector<UniPolyQ> seq{f, f.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        UniPolyQ r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero()) break;
        seq.push_back(r);
    }
    if (seq.back().is_zero()) seq.pop_back();
    return seq;
}

/// Sign changes of the sequence at x, zeros dropped.
inline int sign_variations(const std::vector<UniPolyQ>& seq, const Rational& x) {
    int last = 0, count = 0;
    for (const auto& p : seq) {
        int s = sign(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

/// Number of distinct real roots in (a, b] for a < b.
inline int count_roots(const std::vector<UniPolyQ>& seq, const Rational& a, const Rational& b) {
    return sign_variations(seq, a) - sign_variations(seq, b);
}

/// Power of two strictly larger than every |root| (Cauchy bound).
inline Rational root_bound(const UniPolyQ& f) {
    Rational m = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Rational r = abs(f[i] / f.leading());
        if (r > m) m = r;
    }
    Rational bound = 1;
    while (bound <= m + 1) bound *= 2;
    return bound;
}

namespace detail {

/// Shrinks (lo, hi], known to hold exactly one root with f(hi) != 0, below the tolerance.
inline RootInterval refine_single(const UniPolyQ& f, Rational lo, Rational hi, const Rational& tol) {
    const int shi = sign(f.eval(hi));
    while (hi - lo >= tol || sign(f.eval(lo)) == 0) {
        Rational mid = (lo + hi) / 2;
        int sm = sign(f.eval(mid));
        if (sm == 0) return {mid, mid};
        if (sm == shi)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

inline void isolate_rec(const UniPolyQ& f, const std::vector<UniPolyQ>& seq, const Rational& lo, const Rational& hi, int n,
                        const Rational& tol, std::vector<RootInterval>& out) {
    if (n == 0) return;
    if (n == 1) {
        if (sign(f.eval(hi)) == 0) {
            out.push_back({hi, hi});
            return;
        }
        out.push_back(refine_single(f, lo, hi, tol));
        return;
    }
    Rational mid = (lo + hi) / 2;
    int left = count_roots(seq, lo, mid);
    isolate_rec(f, seq, lo, mid, left, tol, out);
    isolate_rec(f, seq, mid, hi, n - left, tol, out);
}

}  // namespace detail

/// One disjoint closed interval per real root of a squarefree f, ascending. Each interval
/// either is an exact rational root or has width below `tol` with a strict sign change.
inline std::vector<RootInterval> isolate_real_roots(const UniPolyQ& f, const Rational& tol = kRootTolerance) {
    std::vector<RootInterval> out;
    if (f.degree() <= 0) return out;
    auto seq = sturm_sequence(f);
    Rational b = root_bound(f);
    int n = count_roots(seq, -b, b);
    detail::isolate_rec(f, seq, -b, b, n, tol, out);
    return out;
}

/// Refines an isolating interval of a squarefree f until its width is below tol.
inline RootInterval refine_root(const UniPolyQ& f, const RootInterval& iv, const Rational& tol) {
    if (iv.exact()) return iv;
    return detail::refine_single(f, iv.lo, iv.hi, tol);
}

}  // namespace kummer::exact

#endif
