#ifndef KUMMER_EXACT_NUMBER_HPP
#define KUMMER_EXACT_NUMBER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kummer/errors.hpp"

namespace kummer::exact {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

/// Valuation reported for zero.
inline constexpr int kInfiniteValuation = INT_MAX;

inline BigInt numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const BigInt& a) { return a.sign(); }
inline int sign(const Rational& a) { return a.sign(); }

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
inline Rational abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

inline BigInt pow(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

inline Rational pow(const Rational& base, unsigned e) {
    Rational r = 1;
    Rational b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

/// Nonnegative remainder of a modulo m (m > 0).
inline BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline std::uint64_t mod_u64(const BigInt& a, std::uint64_t m) {
    BigInt r = mod(a, BigInt(m));
    return static_cast<std::uint64_t>(r);
}

/// p-adic valuation of a nonzero integer; kInfiniteValuation for zero.
inline int valuation(BigInt n, const BigInt& p) {
    if (n == 0) return kInfiniteValuation;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline int valuation(const Rational& q, const BigInt& p) {
    if (q == 0) return kInfiniteValuation;
    return valuation(numer(q), p) - valuation(denom(q), p);
}

/// True iff q has no p in its denominator.
inline bool is_p_integral(const Rational& q, const BigInt& p) { return denom(q) % p != 0; }

inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw InputError("isqrt of negative number");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = isqrt(n);
    return r * r == n;
}

/// Square in Q (zero counts as a square).
inline bool is_square(const Rational& q) { return is_square(numer(q)) && is_square(denom(q)); }

inline std::string to_string(const BigInt& n) { return n.str(); }

/// "num/den", or "num" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    if (denom(q) == 1) return numer(q).str();
    return numer(q).str() + "/" + denom(q).str();
}

inline BigInt parse_bigint(std::string_view s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '_') t.push_back(c);
    if (t.empty()) throw InputError("empty integer literal");
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) throw InputError("malformed integer literal '" + std::string(s) + "'");
    for (std::size_t i = start; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') throw InputError("malformed integer literal '" + std::string(s) + "'");
    if (t[0] == '+') t.erase(0, 1);
    return BigInt(t);
}

/// Parses "n" or "n/d" exactly. Decimal points are rejected.
inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(s));
    BigInt n = parse_bigint(s.substr(0, slash));
    BigInt d = parse_bigint(s.substr(slash + 1));
    if (d == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

// ---------------------------------------------------------------------------
// Word-size modular arithmetic. Moduli are below 2^32 so products fit in 64 bits.

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1u) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1u;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw InputError("value not invertible modulo " + std::to_string(m));
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

/// Legendre symbol (a/p) for odd prime p: 0, 1 or -1.
inline int legendre(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline int legendre(const BigInt& a, std::uint64_t p) { return legendre(mod_u64(a, p), p); }

/// Square root modulo an odd prime (Tonelli-Shanks). Caller guarantees a is a square.
inline std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1u) == 0) {
        q >>= 1u;
        ++s;
    }
    std::uint64_t z = 2;
    while (legendre(z, p) != -1) ++z;
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t r = powmod(a, (q + 1) / 2, p);
    std::uint64_t t = powmod(a, q, p);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        std::uint64_t tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        r = mulmod(r, b, p);
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        m = i;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Primality and factorization.

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline BigInt powmod(const BigInt& b, const BigInt& e, const BigInt& m) {
    return boost::multiprecision::powm(b, e, m);
}

/// Miller-Rabin with fixed bases; deterministic below 3.3e24, overwhelmingly reliable above.
inline bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n <= BigInt(UINT64_MAX)) return is_prime_u64(static_cast<std::uint64_t>(n));
    BigInt d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
        BigInt x = powmod(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(bound + 1, true);
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i * i <= bound; ++i)
        if (sieve[i])
            for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    for (std::uint64_t i = 2; i <= bound; ++i)
        if (sieve[i]) out.push_back(i);
    return out;
}

namespace detail {

inline BigInt pollard_brent(const BigInt& n, unsigned seed) {
    if (n % 2 == 0) return 2;
    BigInt y = seed % n, c = (seed * 7 + 1) % n, m = 64, g = 1, r = 1, q = 1, x, ys;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (BigInt i = 0; i < r; ++i) y = f(y);
        BigInt k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (BigInt i = 0; i < std::min<BigInt>(m, r - k); ++i) {
                y = f(y);
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
        if (r > BigInt(1) << 24) return n;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

inline void factor_rec(const BigInt& n, std::map<BigInt, int>& out, bool& complete) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned seed = 2; seed < 40; ++seed) {
        BigInt d = pollard_brent(n, seed);
        if (d != 1 && d != n) {
            factor_rec(d, out, complete);
            factor_rec(n / d, out, complete);
            return;
        }
    }
    complete = false;
    ++out[n];
}

}  // namespace detail

/// Prime factorization of |n| (n != 0). Trial division then Pollard-Brent; `complete`
/// is cleared if a composite cofactor could not be split.
struct IntegerFactorization {
    std::map<BigInt, int> primes;
    bool complete = true;
};

inline IntegerFactorization factor_integer(BigInt n) {
    if (n == 0) throw InputError("cannot factor zero");
    IntegerFactorization result;
    n = abs(n);
    for (std::uint64_t p = 2; p < 10000 && BigInt(p) * p <= n; ++p) {
        while (n % p == 0) {
            ++result.primes[BigInt(p)];
            n /= p;
        }
    }
    if (n > 1) detail::factor_rec(n, result.primes, result.complete);
    return result;
}

/// Positive divisors of |n| (n != 0), sorted ascending.
inline std::vector<BigInt> divisors(const BigInt& n) {
    auto fac = factor_integer(n);
    if (!fac.complete) throw ResourceError("could not factor " + n.str());
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : fac.primes) {
        std::size_t sz = out.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kummer::exact

#endif
