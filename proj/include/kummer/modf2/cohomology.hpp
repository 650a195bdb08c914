#ifndef KUMMER_MODF2_COHOMOLOGY_HPP
#define KUMMER_MODF2_COHOMOLOGY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/modf2/f2.hpp"
#include "kummer/modf2/module.hpp"

// First cohomology of a finite group with coefficients in an F_2-module.
//
// A 1-cocycle is determined by its values on the generators s_1, ..., s_k. Writing those
// values as unknowns x (k blocks of d bits), the rule c(g s) = c(g) + g c(s) expresses c(g)
// as a linear function of x along the breadth-first spanning tree of the Cayley graph; every
// other Cayley edge must then agree, which yields the linear relations cutting out Z^1.

namespace kummer::modf2 {

/// Default limit on the group order for cohomology computations.
inline constexpr std::size_t kCohomologyOrderLimit = 10000;

/// Z^1 of a finite group in generator coordinates.
///
/// `Group` is a perm::FiniteGroup instance; `action(i)` returns the F2Mat by which element i
/// acts on the d-dimensional module.
class CocycleSpace {
public:
    template <class Group>
    CocycleSpace(const Group& group, int dim, const std::function<const F2Mat&(std::size_t)>& action) : d_(dim) {
        const std::size_t k = group.num_generators();
        vars_ = static_cast<int>(k) * dim;
        if (vars_ > 64) throw ResourceError("too many cocycle unknowns (generators x dimension > 64)");
        const std::size_t n = group.order();
        forms_.assign(n * static_cast<std::size_t>(dim), 0);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t p = group.parent(i), s = group.parent_generator(i);
            const F2Mat& a = action(p);
            for (int r = 0; r < dim; ++r)
                form(i, r) = form(p, r) ^ (a.r[static_cast<std::size_t>(r)] << (static_cast<int>(s) * dim));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const F2Mat& a = action(i);
            for (std::size_t s = 0; s < k; ++s) {
                std::size_t j = group.right(i, s);
                for (int r = 0; r < dim; ++r) {
                    F2Vec rel = form(i, r) ^ (a.r[static_cast<std::size_t>(r)] << (static_cast<int>(s) * dim)) ^ form(j, r);
                    if (rel) relations_.insert(rel);
                }
            }
        }
        basis_ = nullspace(relations_.rows(), vars_);
        // Coboundaries m -> (s m - m)_s.
        std::vector<F2Vec> fixed_rows;
        for (std::size_t s = 0; s < k; ++s) {
            F2Mat t = action(group.index_of(group.generator(s))) + F2Mat::identity(dim);
            gen_minus_one_.push_back(t);
            fixed_rows.insert(fixed_rows.end(), t.r.begin(), t.r.end());
        }
        fixed_dim_ = static_cast<int>(nullspace(fixed_rows, dim).size());
    }

    int module_dim() const { return d_; }
    int unknowns() const { return vars_; }
    int z1_dim() const { return static_cast<int>(basis_.size()); }
    int b1_dim() const { return d_ - fixed_dim_; }
    int h1_dim() const { return z1_dim() - b1_dim(); }
    const std::vector<F2Vec>& z1_basis() const { return basis_; }
    const EchelonBasis& relations() const { return relations_; }

    /// Generator coordinates x satisfy every Cayley relation.
    bool is_cocycle(F2Vec x) const {
        for (auto row : relations_.rows())
            if (parity(row & x)) return false;
        return true;
    }

    /// c(element i) for the cocycle with generator values x.
    F2Vec evaluate(F2Vec x, std::size_t i) const {
        F2Vec v = 0;
        for (int r = 0; r < d_; ++r)
            if (parity(form(i, r) & x)) v |= unit_vector(r);
        return v;
    }

    /// The linear form (over the unknowns) giving coordinate r of c(element i).
    F2Vec coordinate_form(std::size_t i, int r) const { return forms_[i * static_cast<std::size_t>(d_) + static_cast<std::size_t>(r)]; }

    /// m with c(s) = s m - m for every generator, if any.
    std::optional<F2Vec> coboundary_preimage(F2Vec x) const {
        // Equations (s - 1) m = c(s), stacked over the generators.
        std::vector<F2Vec> eqs;
        for (const auto& t : gen_minus_one_) eqs.insert(eqs.end(), t.r.begin(), t.r.end());
        return solve_rows(eqs, x);
    }

    bool is_coboundary(F2Vec x) const { return coboundary_preimage(x).has_value(); }

    /// Generator coordinates of the coboundary g -> g m - m.
    F2Vec coboundary(F2Vec m) const {
        F2Vec x = 0;
        for (std::size_t s = 0; s < gen_minus_one_.size(); ++s) x |= gen_minus_one_[s].apply(m) << (static_cast<int>(s) * d_);
        return x;
    }

private:
    F2Vec& form(std::size_t i, int r) { return forms_[i * static_cast<std::size_t>(d_) + static_cast<std::size_t>(r)]; }
    F2Vec form(std::size_t i, int r) const { return forms_[i * static_cast<std::size_t>(d_) + static_cast<std::size_t>(r)]; }

    int d_ = 0;
    int vars_ = 0;
    int fixed_dim_ = 0;
    std::vector<F2Vec> forms_;
    EchelonBasis relations_;
    std::vector<F2Vec> basis_;
    std::vector<F2Mat> gen_minus_one_;
};

/// dim H^1(G, M) for a permutation group and one of its modules.
inline int h1_dim(const F2GModule& m, std::size_t max_order = kCohomologyOrderLimit) {
    if (m.group().order() > max_order)
        throw ResourceError("group of order " + std::to_string(m.group().order()) + " exceeds the cohomology limit");
    CocycleSpace z(m.group(), m.dim(), [&](std::size_t i) -> const F2Mat& { return m.action(i); });
    return z.h1_dim();
}

/// A 1-cochain on a finite group: one module vector per element index.
struct Cocycle {
    std::vector<F2Vec> values;
};

/// Full-table check c(gh) = c(g) + g c(h) over all pairs.
template <class Group>
bool verify_cocycle_full(const Group& group, const std::function<const F2Mat&(std::size_t)>& action, const Cocycle& c) {
    const std::size_t n = group.order();
    if (c.values.size() != n) return false;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if (c.values[group.multiply(g, h)] != (c.values[g] ^ action(g).apply(c.values[h]))) return false;
    return true;
}

/// Check along the Cayley edges, c(g s) = c(g) + g c(s); equivalent to the full check since
/// every element is a positive word in the generators.
template <class Group>
bool verify_cocycle(const Group& group, const std::function<const F2Mat&(std::size_t)>& action, const Cocycle& c) {
    const std::size_t n = group.order();
    if (c.values.size() != n || c.values[0] != 0) return false;
    for (std::size_t s = 0; s < group.num_generators(); ++s) {
        F2Vec cs = c.values[group.index_of(group.generator(s))];
        for (std::size_t g = 0; g < n; ++g)
            if (c.values[group.right(g, s)] != (c.values[g] ^ action(g).apply(cs))) return false;
    }
    return true;
}

}  // namespace kummer::modf2

#endif
