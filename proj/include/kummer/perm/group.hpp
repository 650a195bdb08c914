#ifndef KUMMER_PERM_GROUP_HPP
#define KUMMER_PERM_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/perm/permutation.hpp"

namespace kummer::perm {

/// Default element limit for group closures.
inline constexpr std::size_t kDefaultGroupLimit = 100000;

/// Group operations for element types that multiply and invert themselves.
template <class E>
struct NaturalOps {
    E mul(const E& a, const E& b) const { return a * b; }
    E inv(const E& a) const { return a.inverse(); }
};

/// Membership mask over the element indices of a group.
using Subset = std::vector<char>;

/// A finite group given by generators and enumerated completely by breadth-first closure.
///
/// Element 0 is the identity. Elements are discovered by right multiplication with the
/// generators, so element(i) = element(parent(i)) * generator(parent_generator(i)); the
/// resulting spanning tree and the right-multiplication table describe the Cayley graph.
template <class E, class Ops = NaturalOps<E>, class Hash = std::hash<E>>
class FiniteGroup {
public:
    using Element = E;
    static constexpr std::uint32_t kNone = UINT32_MAX;

    FiniteGroup() = default;

    static FiniteGroup generate(std::vector<E> gens, E identity, Ops ops = Ops{}, std::size_t limit = kDefaultGroupLimit) {
        FiniteGroup g;
        g.ops_ = std::move(ops);
        g.gens_ = std::move(gens);
        g.add(identity, kNone, kNone);
        for (std::size_t i = 0; i < g.elems_.size(); ++i) {
            for (std::size_t s = 0; s < g.gens_.size(); ++s) {
                E y = g.ops_.mul(g.elems_[i], g.gens_[s]);
                auto it = g.index_.find(y);
                std::uint32_t j;
                if (it == g.index_.end()) {
                    if (g.elems_.size() >= limit)
                        throw ResourceError("group closure exceeds " + std::to_string(limit) + " elements");
                    j = g.add(std::move(y), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(s));
                } else {
                    j = it->second;
                }
                g.right_[i * g.gens_.size() + s] = j;
            }
        }
        return g;
    }

    std::size_t order() const { return elems_.size(); }
    std::size_t num_generators() const { return gens_.size(); }
    const std::vector<E>& generators() const { return gens_; }
    const std::vector<E>& elements() const { return elems_; }
    const E& element(std::size_t i) const { return elems_[i]; }
    const E& generator(std::size_t s) const { return gens_[s]; }
    const Ops& ops() const { return ops_; }

    E mul(const E& a, const E& b) const { return ops_.mul(a, b); }
    E inv(const E& a) const { return ops_.inv(a); }

    std::optional<std::size_t> find(const E& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const E& e) const { return index_.count(e) != 0; }

    std::size_t index_of(const E& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw ContractViolation("element not in group");
        return it->second;
    }

    /// Index of element(i) * generator(s).
    std::size_t right(std::size_t i, std::size_t s) const { return right_[i * gens_.size() + s]; }
    std::size_t parent(std::size_t i) const { return parent_[i]; }
    std::size_t parent_generator(std::size_t i) const { return parent_gen_[i]; }

    std::size_t multiply(std::size_t i, std::size_t j) const { return index_of(ops_.mul(elems_[i], elems_[j])); }
    std::size_t inverse(std::size_t i) const { return index_of(ops_.inv(elems_[i])); }
    std::size_t conjugate(std::size_t g, std::size_t x) const {
        return index_of(ops_.mul(ops_.mul(elems_[g], elems_[x]), ops_.inv(elems_[g])));
    }

    /// Subgroup generated by the given element indices, as a membership mask.
    Subset subgroup(const std::vector<std::size_t>& gen_idx) const {
        Subset mask(order(), 0);
        std::vector<std::size_t> members{0};
        mask[0] = 1;
        for (std::size_t k = 0; k < members.size(); ++k) {
            for (std::size_t s : gen_idx) {
                std::size_t y = multiply(members[k], s);
                if (!mask[y]) {
                    mask[y] = 1;
                    members.push_back(y);
                }
            }
        }
        return mask;
    }

    /// Conjugacy class of element x: its orbit under conjugation by the generators.
    std::vector<std::size_t> conjugacy_class(std::size_t x) const {
        std::vector<std::size_t> orbit{x};
        std::vector<char> seen(order(), 0);
        seen[x] = 1;
        std::vector<E> gen_inv;
        for (const auto& s : gens_) gen_inv.push_back(ops_.inv(s));
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            for (std::size_t s = 0; s < gens_.size(); ++s) {
                std::size_t y = index_of(ops_.mul(ops_.mul(gens_[s], elems_[orbit[k]]), gen_inv[s]));
                if (!seen[y]) {
                    seen[y] = 1;
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        return orbit;
    }

    /// All conjugacy classes, ordered by smallest member.
    std::vector<std::vector<std::size_t>> conjugacy_classes() const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<char> done(order(), 0);
        for (std::size_t i = 0; i < order(); ++i) {
            if (done[i]) continue;
            auto c = conjugacy_class(i);
            for (auto j : c) done[j] = 1;
            out.push_back(std::move(c));
        }
        return out;
    }

    /// Smallest normal subgroup containing the given element indices.
    Subset normal_closure(const std::vector<std::size_t>& idx) const {
        std::vector<std::size_t> gens;
        std::vector<char> seen(order(), 0);
        for (std::size_t x : idx) {
            if (seen[x]) continue;
            for (std::size_t y : conjugacy_class(x)) {
                if (!seen[y]) {
                    seen[y] = 1;
                    gens.push_back(y);
                }
            }
        }
        return subgroup(gens);
    }

    /// Every normal subgroup, built as joins of normal closures of conjugacy classes.
    /// Ordered by size, then by membership mask.
    std::vector<Subset> normal_subgroups(std::size_t max_order = 10000) const {
        if (order() > max_order)
            throw ResourceError("normal subgroup enumeration limited to groups of order " + std::to_string(max_order));
        auto classes = conjugacy_classes();
        std::vector<Subset> found{subgroup({})};
        std::map<Subset, bool> known{{found[0], true}};
        for (std::size_t k = 0; k < found.size(); ++k) {
            for (const auto& c : classes) {
                if (found[k][c.front()]) continue;
                std::vector<std::size_t> gens;
                for (std::size_t i = 0; i < order(); ++i)
                    if (found[k][i]) gens.push_back(i);
                gens.insert(gens.end(), c.begin(), c.end());
                Subset n = normal_closure(gens);
                if (!known.count(n)) {
                    known[n] = true;
                    found.push_back(std::move(n));
                }
            }
        }
        std::sort(found.begin(), found.end(), [](const Subset& a, const Subset& b) {
            auto ca = std::count(a.begin(), a.end(), 1), cb = std::count(b.begin(), b.end(), 1);
            if (ca != cb) return ca < cb;
            return a < b;
        });
        return found;
    }

    /// Commutator subgroup: normal closure of the commutators of the generators.
    Subset derived_subgroup() const {
        std::vector<std::size_t> comm;
        for (std::size_t a = 0; a < gens_.size(); ++a)
            for (std::size_t b = 0; b < gens_.size(); ++b) {
                E c = ops_.mul(ops_.mul(gens_[a], gens_[b]), ops_.mul(ops_.inv(gens_[a]), ops_.inv(gens_[b])));
                comm.push_back(index_of(c));
            }
        return normal_closure(comm);
    }

private:
    std::uint32_t add(E e, std::uint32_t parent, std::uint32_t gen) {
        auto idx = static_cast<std::uint32_t>(elems_.size());
        index_.emplace(e, idx);
        elems_.push_back(std::move(e));
        parent_.push_back(parent);
        parent_gen_.push_back(gen);
        right_.resize(elems_.size() * gens_.size(), kNone);
        return idx;
    }

    Ops ops_{};
    std::vector<E> gens_;
    std::vector<E> elems_;
    std::unordered_map<E, std::uint32_t, Hash> index_;
    std::vector<std::uint32_t> right_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> parent_gen_;
};

inline std::size_t subset_size(const Subset& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), 1)); }

inline bool subset_contains(const Subset& big, const Subset& small) {
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] && !big[i]) return false;
    return true;
}

using PermGroup = FiniteGroup<Permutation>;

/// Closure of permutations of a common degree m <= 7. The generator list may be empty.
inline PermGroup closure(int m, std::vector<Permutation> gens) {
    for (const auto& g : gens)
        if (g.degree() != m) throw InputError("generator degree mismatch: expected " + std::to_string(m));
    return PermGroup::generate(std::move(gens), Permutation(m));
}

/// Closure of a nonempty generator list.
inline PermGroup closure(std::vector<Permutation> gens) {
    if (gens.empty()) throw InputError("closure needs at least one generator (or an explicit degree)");
    int m = gens.front().degree();
    return closure(m, std::move(gens));
}

inline int degree(const PermGroup& g) { return g.element(0).degree(); }

/// Number of elements of each cycle type.
inline std::map<Partition, std::size_t> cycle_types(const PermGroup& g) {
    std::map<Partition, std::size_t> out;
    for (const auto& e : g.elements()) ++out[e.cycle_type()];
    return out;
}

inline bool is_transitive(const PermGroup& g) {
    const int m = degree(g);
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    std::vector<int> orbit{0};
    seen[0] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k)
        for (const auto& s : g.generators()) {
            int y = s(orbit[k]);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                orbit.push_back(y);
            }
        }
    return static_cast<int>(orbit.size()) == m;
}

/// S_m generated by (0 1) and (0 1 ... m-1).
inline PermGroup symmetric_group(int m) {
    if (m == 1) return closure(1, {});
    std::vector<int> cyc(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % m;
    std::vector<int> tr(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) tr[static_cast<std::size_t>(i)] = i;
    std::swap(tr[0], tr[1]);
    return closure(m, {Permutation::from_images(tr), Permutation::from_images(cyc)});
}

/// The affine group x -> a x + b of F_5 acting on {0,...,4}: generated by (0 1 2 3 4), (1 2 4 3).
inline PermGroup affine_group_5() {
    return closure({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{1, 2, 4, 3}})});
}

/// An m-cycle and an (m-1)-cycle fixing the last letter.
inline Permutation long_cycle(int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % m;
    return Permutation::from_images(img);
}

inline Permutation near_long_cycle(int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int i = 0; i < m - 1; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % (m - 1);
    img[static_cast<std::size_t>(m - 1)] = m - 1;
    return Permutation::from_images(img);
}

}  // namespace kummer::perm

#endif
