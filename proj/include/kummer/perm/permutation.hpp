#ifndef KUMMER_PERM_PERMUTATION_HPP
#define KUMMER_PERM_PERMUTATION_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "kummer/errors.hpp"

namespace kummer::perm {

/// Largest number of letters a permutation may move.
inline constexpr int kMaxLetters = 7;

/// A cycle type: cycle lengths sorted descending, summing to the degree.
using Partition = std::vector<int>;

/// Bijection of {0, ..., m-1}.
///
/// Composition convention (used everywhere in the library): permutations act on the left
/// and (s * t)(i) = s(t(i)), i.e. t is applied first.
class Permutation {
public:
    Permutation() : Permutation(1) {}

    /// Identity on m letters.
    explicit Permutation(int m) : n_(static_cast<std::uint8_t>(m)) {
        if (m < 1 || m > kMaxLetters) throw InputError("permutation degree must lie in [1, 7], got " + std::to_string(m));
        for (int i = 0; i < 8; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    }

    /// From the image list (images[i] = image of i).
    static Permutation from_images(const std::vector<int>& images) {
        Permutation p(static_cast<int>(images.size()));
        std::array<bool, 8> seen{};
        for (std::size_t i = 0; i < images.size(); ++i) {
            int v = images[i];
            if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
                throw InputError("image list is not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
            p.img_[i] = static_cast<std::uint8_t>(v);
        }
        return p;
    }

    /// Product of the given disjoint or overlapping cycles, the last cycle applied first.
    static Permutation from_cycles(int m, std::initializer_list<std::initializer_list<int>> cycles) {
        Permutation acc(m);
        for (auto it = cycles.begin(); it != cycles.end(); ++it) {
            std::vector<int> c(*it);
            Permutation cyc(m);
            for (std::size_t i = 0; i < c.size(); ++i) {
                int a = c[i], b = c[(i + 1) % c.size()];
                if (a < 0 || a >= m || b < 0 || b >= m) throw InputError("cycle entry out of range");
                cyc.img_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
            }
            if (!cyc.valid()) throw InputError("cycle repeats a letter");
            acc = acc * cyc;
        }
        return acc;
    }

    int degree() const { return n_; }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    std::vector<int> images() const { return std::vector<int>(img_.begin(), img_.begin() + n_); }

    friend Permutation operator*(const Permutation& s, const Permutation& t) {
        if (s.n_ != t.n_) throw InputError("composing permutations of different degree");
        Permutation r(s.n_);
        for (int i = 0; i < s.n_; ++i) r.img_[static_cast<std::size_t>(i)] = s.img_[t.img_[static_cast<std::size_t>(i)]];
        return r;
    }

    Permutation inverse() const {
        Permutation r(n_);
        for (int i = 0; i < n_; ++i) r.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
        return r;
    }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            if (img_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    Partition cycle_type() const {
        Partition out;
        std::array<bool, 8> seen{};
        for (int i = 0; i < n_; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                ++len;
            }
            out.push_back(len);
        }
        std::sort(out.rbegin(), out.rend());
        return out;
    }

    int order() const {
        int o = 1;
        for (int c : cycle_type()) o = std::lcm(o, c);
        return o;
    }

    /// +1 for even permutations, -1 for odd ones.
    int sign() const {
        int s = 1;
        for (int c : cycle_type())
            if (c % 2 == 0) s = -s;
        return s;
    }

    /// Letters packed four bits each, plus the degree; injective on permutations.
    std::uint64_t key() const {
        std::uint64_t k = n_;
        for (int i = 0; i < n_; ++i) k |= static_cast<std::uint64_t>(img_[static_cast<std::size_t>(i)]) << (4 * (i + 1));
        return k;
    }

    /// Cycle notation such as "(0 1 2)(3 4)"; "()" for the identity.
    std::string to_string() const {
        std::string s;
        std::array<bool, 8> seen{};
        for (int i = 0; i < n_; ++i) {
            if (seen[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i) continue;
            s += "(";
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                if (j != i) s += " ";
                s += std::to_string(j);
            }
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.key() == b.key(); }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.key() < b.key(); }

private:
    bool valid() const {
        std::array<bool, 8> seen{};
        for (int i = 0; i < n_; ++i) {
            if (seen[img_[static_cast<std::size_t>(i)]]) return false;
            seen[img_[static_cast<std::size_t>(i)]] = true;
        }
        return true;
    }

    std::uint8_t n_;
    std::array<std::uint8_t, 8> img_{};
};

inline std::string partition_to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

}  // namespace kummer::perm

template <>
struct std::hash<kummer::perm::Permutation> {
    std::size_t operator()(const kummer::perm::Permutation& p) const noexcept { return std::hash<std::uint64_t>{}(p.key()); }
};

#endif
