#ifndef KUMMER_EXACT_POLY_HPP
#define KUMMER_EXACT_POLY_HPP

#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"

namespace kummer::exact {

/// Univariate polynomial over Q. Coefficients are stored lowest degree first and the
/// leading coefficient is nonzero unless the polynomial is zero (empty vector).
class UniPolyQ {
public:
    UniPolyQ() = default;

    explicit UniPolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    UniPolyQ(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static UniPolyQ constant(const Rational& a) { return UniPolyQ(std::vector<Rational>{a}); }
    static UniPolyQ x() { return UniPolyQ({0, 1}); }

    static UniPolyQ monomial(const Rational& a, int degree) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        c.back() = a;
        return UniPolyQ(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator[](int i) const {
        if (i < 0 || i > degree()) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }

    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPolyQ derivative() const {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long long>(i));
        return UniPolyQ(std::move(d));
    }

    UniPolyQ monic() const {
        if (is_zero()) return *this;
        UniPolyQ r = *this;
        Rational lc = leading();
        for (auto& a : r.c_) a /= lc;
        return r;
    }

    /// x^n f(1/x) with n = deg f.
    UniPolyQ reversed() const {
        std::vector<Rational> r(c_.rbegin(), c_.rend());
        return UniPolyQ(std::move(r));
    }

    /// f(a x + b).
    UniPolyQ compose_linear(const Rational& a, const Rational& b) const {
        UniPolyQ lin(std::vector<Rational>{b, a});
        UniPolyQ acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
        return acc;
    }

    UniPolyQ compose(const UniPolyQ& g) const {
        UniPolyQ acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
        return acc;
    }

    /// Least common multiple of coefficient denominators.
    BigInt denominator_lcm() const {
        BigInt d = 1;
        for (const auto& a : c_) d = lcm(d, denom(a));
        return d;
    }

    /// Content-free integer polynomial with positive leading coefficient, proportional to *this.
    std::vector<BigInt> primitive_integer() const {
        BigInt d = denominator_lcm();
        std::vector<BigInt> out;
        BigInt g = 0;
        for (const auto& a : c_) {
            out.push_back(numer(a * d));
            g = gcd(g, out.back());
        }
        if (g == 0) return out;
        if (out.back() < 0) g = -g;
        for (auto& a : out) a /= g;
        return out;
    }

    static UniPolyQ from_integers(const std::vector<BigInt>& v) {
        std::vector<Rational> c;
        for (const auto& a : v) c.emplace_back(a);
        return UniPolyQ(std::move(c));
    }

    bool all_p_integral(const BigInt& p) const {
        for (const auto& a : c_)
            if (!is_p_integral(a, p)) return false;
        return true;
    }

    bool has_integer_coefficients() const {
        for (const auto& a : c_)
            if (denom(a) != 1) return false;
        return true;
    }

    friend bool operator==(const UniPolyQ&, const UniPolyQ&) = default;

    friend UniPolyQ operator+(const UniPolyQ& a, const UniPolyQ& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return UniPolyQ(std::move(c));
    }

    friend UniPolyQ operator-(const UniPolyQ& a) {
        UniPolyQ r = a;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend UniPolyQ operator-(const UniPolyQ& a, const UniPolyQ& b) { return a + (-b); }

    friend UniPolyQ operator*(const UniPolyQ& a, const UniPolyQ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPolyQ(std::move(c));
    }

    friend UniPolyQ operator*(const UniPolyQ& a, const Rational& s) { return s * a; }
    friend UniPolyQ operator*(const Rational& s, const UniPolyQ& a) {
        UniPolyQ r = a;
        for (auto& v : r.c_) v *= s;
        r.trim();
        return r;
    }

    UniPolyQ& operator+=(const UniPolyQ& o) { return *this = *this + o; }
    UniPolyQ& operator-=(const UniPolyQ& o) { return *this = *this - o; }
    UniPolyQ& operator*=(const UniPolyQ& o) { return *this = *this * o; }

    /// Quotient and remainder; throws on division by zero.
    friend std::pair<UniPolyQ, UniPolyQ> divmod(const UniPolyQ& a, const UniPolyQ& b) {
        if (b.is_zero()) throw InputError("polynomial division by zero");
        if (a.degree() < b.degree()) return {UniPolyQ{}, a};
        std::vector<Rational> r = a.c_;
        std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
        const Rational lc = b.leading();
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            Rational t = r[static_cast<std::size_t>(i + b.degree())] / lc;
            q[static_cast<std::size_t>(i)] = t;
            if (t == 0) continue;
            for (int j = 0; j <= b.degree(); ++j) r[static_cast<std::size_t>(i + j)] -= t * b.c_[static_cast<std::size_t>(j)];
        }
        return {UniPolyQ(std::move(q)), UniPolyQ(std::move(r))};
    }

    friend UniPolyQ operator/(const UniPolyQ& a, const UniPolyQ& b) { return divmod(a, b).first; }
    friend UniPolyQ operator%(const UniPolyQ& a, const UniPolyQ& b) { return divmod(a, b).second; }

    /// Human-readable form, e.g. "x^5 - x - 1".
    std::string to_string(const char* var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            Rational a = c_[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            bool neg = a < 0;
            Rational m = neg ? Rational(-a) : a;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            bool unit = (m == 1);
            if (!unit || i == 0) os << exact::to_string(m);
            if (i > 0) {
                if (!unit) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const UniPolyQ& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd (zero if both inputs are zero).
inline UniPolyQ gcd(UniPolyQ a, UniPolyQ b) {
    while (!b.is_zero()) {
        UniPolyQ r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Inverse of a modulo m via the extended Euclidean algorithm; throws if gcd(a, m) != 1.
inline UniPolyQ inverse_mod(const UniPolyQ& a, const UniPolyQ& m) {
    UniPolyQ r0 = m, r1 = a % m;
    UniPolyQ s0, s1 = UniPolyQ::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPolyQ s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw InputError("polynomial is not invertible modulo " + m.to_string());
    return (Rational(1) / r0.leading()) * s0 % m;
}

/// f / gcd(f, f').
inline UniPolyQ squarefree_part(const UniPolyQ& f) {
    if (f.degree() <= 0) return f;
    UniPolyQ g = gcd(f, f.derivative());
    return (f / g).monic();
}

}  // namespace kummer::exact

#endif
