#ifndef KUMMER_MODF2_MODULE_HPP
#define KUMMER_MODF2_MODULE_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/modf2/f2.hpp"
#include "kummer/perm/group.hpp"
#include "kummer/perm/permutation.hpp"

namespace kummer::modf2 {

using perm::PermGroup;
using perm::Permutation;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// An F_2 vector space of dimension d with a left action of a permutation group, given by
/// one matrix per generator and extended to every element along the Cayley graph.
class F2GModule {
public:
    F2GModule(GroupPtr group, int dim, std::vector<F2Mat> generator_actions) : group_(std::move(group)), dim_(dim) {
        if (dim < 0 || dim > 63) throw ResourceError("module dimension must lie in [0, 63]");
        if (generator_actions.size() != group_->num_generators())
            throw InputError("need one action matrix per group generator");
        for (const auto& m : generator_actions)
            if (m.rows != dim || m.cols != dim) throw InputError("action matrix has the wrong size");
        gen_ = std::move(generator_actions);
        const std::size_t n = group_->order();
        act_.assign(n, F2Mat::identity(dim));
        for (std::size_t i = 1; i < n; ++i) act_[i] = act_[group_->parent(i)] * gen_[group_->parent_generator(i)];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t s = 0; s < gen_.size(); ++s)
                if (!(act_[group_->right(i, s)] == act_[i] * gen_[s]))
                    throw InputError("action matrices do not satisfy the relations of the group");
    }

    int dim() const { return dim_; }
    const PermGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    const F2Mat& generator_action(std::size_t s) const { return gen_[s]; }
    const std::vector<F2Mat>& generator_actions() const { return gen_; }
    const F2Mat& action(std::size_t element_index) const { return act_[element_index]; }
    const F2Mat& action(const Permutation& g) const { return act_[group_->index_of(g)]; }
    F2Vec act(std::size_t element_index, F2Vec v) const { return act_[element_index].apply(v); }

    /// dim M^G.
    int fixed_dim() const {
        std::vector<F2Vec> rows;
        for (const auto& m : gen_) {
            F2Mat t = m + F2Mat::identity(dim_);
            rows.insert(rows.end(), t.r.begin(), t.r.end());
        }
        return static_cast<int>(nullspace(rows, dim_).size());
    }

    /// Only the identity acts trivially.
    bool is_faithful() const {
        F2Mat id = F2Mat::identity(dim_);
        for (std::size_t i = 1; i < act_.size(); ++i)
            if (act_[i] == id) return false;
        return true;
    }

private:
    GroupPtr group_;
    int dim_;
    std::vector<F2Mat> gen_;
    std::vector<F2Mat> act_;
};

using ModulePtr = std::shared_ptr<const F2GModule>;

inline GroupPtr share(PermGroup g) { return std::make_shared<const PermGroup>(std::move(g)); }

/// Permutation matrix of sigma restricted to the letters offset, ..., offset+m-1.
inline F2Mat permutation_matrix(const Permutation& s, int offset, int m) {
    F2Mat mat(m, m);
    for (int j = 0; j < m; ++j) {
        int img = s(offset + j) - offset;
        if (img < 0 || img >= m) throw InputError("group does not preserve the letter block");
        mat.set(img, j, true);
    }
    return mat;
}

/// The permutation module F_2^m on the letters [offset, offset + m): e_j -> e_{sigma(j)}.
inline F2GModule permutation_module(GroupPtr g, int offset, int m) {
    std::vector<F2Mat> gens;
    for (const auto& s : g->generators()) gens.push_back(permutation_matrix(s, offset, m));
    return F2GModule(std::move(g), m, std::move(gens));
}

inline F2GModule permutation_module(GroupPtr g) {
    int m = perm::degree(*g);
    return permutation_module(std::move(g), 0, m);
}

/// Kernel of the coordinate sum on F_2^m, in the basis b_i = e_i + e_{m-1} (i < m-1); a
/// zero-sum vector has coordinates equal to its first m-1 entries.
inline F2GModule zero_sum_module(GroupPtr g, int offset, int m) {
    if (m < 2) throw InputError("zero-sum module needs at least two letters");
    std::vector<F2Mat> gens;
    for (const auto& s : g->generators()) {
        F2Mat p = permutation_matrix(s, offset, m);
        std::vector<F2Vec> cols;
        for (int i = 0; i < m - 1; ++i) {
            F2Vec full = p.apply(unit_vector(i) | unit_vector(m - 1));
            cols.push_back(full & low_mask(m - 1));
        }
        gens.push_back(F2Mat::from_columns(m - 1, cols));
    }
    return F2GModule(std::move(g), m - 1, std::move(gens));
}

inline F2GModule zero_sum_module(GroupPtr g) {
    int m = perm::degree(*g);
    return zero_sum_module(std::move(g), 0, m);
}

/// F_2^d with trivial action.
inline F2GModule trivial_module(GroupPtr g, int d) {
    std::vector<F2Mat> gens(g->num_generators(), F2Mat::identity(d));
    return F2GModule(std::move(g), d, std::move(gens));
}

/// Block-diagonal action on A + B (coordinates of A first).
inline F2GModule direct_sum(const F2GModule& a, const F2GModule& b) {
    if (a.group_ptr() != b.group_ptr()) throw InputError("direct sum of modules over different groups");
    const int d = a.dim() + b.dim();
    std::vector<F2Mat> gens;
    for (std::size_t s = 0; s < a.generator_actions().size(); ++s) {
        F2Mat m(d, d);
        for (int i = 0; i < a.dim(); ++i) m.r[static_cast<std::size_t>(i)] = a.generator_action(s).r[static_cast<std::size_t>(i)];
        for (int i = 0; i < b.dim(); ++i)
            m.r[static_cast<std::size_t>(a.dim() + i)] = b.generator_action(s).r[static_cast<std::size_t>(i)] << a.dim();
        gens.push_back(std::move(m));
    }
    return F2GModule(a.group_ptr(), d, std::move(gens));
}

/// M^n = M + ... + M (n copies); copy t occupies coordinates [t d, (t+1) d).
inline F2GModule power(const F2GModule& m, int n) {
    if (n < 1) throw InputError("module power needs at least one copy");
    F2GModule acc = m;
    for (int t = 1; t < n; ++t) acc = direct_sum(acc, m);
    return acc;
}

/// The submodule generated by v: closure under the generators and addition.
inline EchelonBasis spin(const F2GModule& m, F2Vec v) {
    EchelonBasis span;
    std::vector<F2Vec> queue;
    if (span.insert(v)) queue.push_back(v);
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (const auto& a : m.generator_actions()) {
            F2Vec w = a.apply(queue[k]);
            if (span.insert(w)) queue.push_back(w);
        }
    return span;
}

/// True iff every nonzero vector spins to the whole module.
inline bool is_simple(const F2GModule& m) {
    if (m.dim() < 1) return false;
    if (m.dim() > 24) throw ResourceError("exhaustive simplicity test limited to dimension 24");
    for (F2Vec v = 1; v <= low_mask(m.dim()); ++v)
        if (spin(m, v).rank() != m.dim()) return false;
    return true;
}

/// dim_F2 End_G(M): matrices X with X A_s = A_s X for every generator s.
inline int endomorphism_dim(const F2GModule& m) {
    const int d = m.dim();
    if (d * d > 64) throw ResourceError("endomorphism computation limited to dimension 8");
    // Unknown X_{ik} is variable i*d + k.
    std::vector<F2Vec> rows;
    for (const auto& a : m.generator_actions()) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                F2Vec row = 0;
                for (int k = 0; k < d; ++k) {
                    if (a.get(k, j)) row ^= unit_vector(i * d + k);  // (X A)_{ij}
                    if (a.get(i, k)) row ^= unit_vector(k * d + j);  // (A X)_{ij}
                }
                rows.push_back(row);
            }
    }
    return static_cast<int>(nullspace(rows, d * d).size());
}

/// dim M/(g-1) = dim M - rank(g - 1).
inline int coinvariant_dim(const F2GModule& m, const Permutation& g) {
    if (!m.group().contains(g)) throw InputError("element " + g.to_string() + " is not in the group");
    return m.dim() - rank(m.action(g) + F2Mat::identity(m.dim()));
}

/// dim ker(g - 1).
inline int invariant_dim(const F2GModule& m, const Permutation& g) {
    return static_cast<int>(kernel(m.action(g) + F2Mat::identity(m.dim())).size());
}

/// Local cohomology dimension 2 dim M/(Frob - 1) at a good place with Frobenius frob.
inline int local_h1_dim(const F2GModule& m, const Permutation& frob) {
    int coinv = coinvariant_dim(m, frob);
    if (invariant_dim(m, frob) != coinv) throw ContractViolation("dim ker(g-1) differs from dim coker(g-1)");
    return 2 * coinv;
}

}  // namespace kummer::modf2

#endif
