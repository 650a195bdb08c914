#ifndef KUMMER_MODF2_TORSOR_HPP
#define KUMMER_MODF2_TORSOR_HPP

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/modf2/cohomology.hpp"
#include "kummer/modf2/f2.hpp"
#include "kummer/modf2/module.hpp"
#include "kummer/modf2/semidirect.hpp"

// Torsor machinery on finite models G_T of the Galois group of K_T/k.

namespace kummer::modf2 {

/// Largest semidirect model for which normal subgroups are enumerated.
inline constexpr std::size_t kNormalSubgroupLimit = 10000;

/// Largest model on which the five conditions are evaluated; the |T| = 2 model over S_5
/// has order 2^8 * 120 = 30720.
inline constexpr std::size_t kPropA1OrderLimit = 40000;

namespace detail {

/// Generator coordinates of a cochain on a finite group: its values on the generators.
template <class Group>
F2Vec generator_coordinates(const Group& g, const Cocycle& c, int dim) {
    F2Vec x = 0;
    for (std::size_t s = 0; s < g.num_generators(); ++s)
        x |= c.values[g.index_of(g.generator(s))] << (static_cast<int>(s) * dim);
    return x;
}

inline void require_module_hypotheses(const F2GModule& m) {
    if (!is_simple(m)) throw PreconditionError("M is not a simple G-module");
    if (endomorphism_dim(m) != 1) throw PreconditionError("End_G(M) is not F_2");
    if (h1_dim(m) != 0) throw PreconditionError("H^1(G, M) is nonzero");
}

}  // namespace detail

/// For M simple and faithful: every normal subgroup H of M^n x| G satisfies M^n in H or
/// H in M^n.
inline bool check_lemma_f1(ModulePtr m, int n = 1) {
    if (!is_simple(*m)) throw PreconditionError("M is not a simple G-module");
    if (!m->is_faithful()) throw PreconditionError("M is not a faithful G-module");
    std::size_t expected = m->group().order() << (m->dim() * n);
    if (expected > kNormalSubgroupLimit)
        throw ResourceError("semidirect product of order " + std::to_string(expected) + " is too large");
    SemidirectModel model = tautological_model(m, n);
    const auto& g = model.group();
    perm::Subset k(g.order(), 0);
    for (auto i : model.kernel()) k[i] = 1;
    for (const auto& h : g.normal_subgroups(kNormalSubgroupLimit))
        if (!perm::subset_contains(h, k) && !perm::subset_contains(k, h)) return false;
    return true;
}

/// The five conditions, each evaluated on its own.
struct PropA1Result {
    bool independent = false;      // (i)
    bool basis = false;            // (ii)
    bool kernel_iso = false;       // (iii)
    bool model_iso = false;        // (iv)
    bool disjoint = false;         // (v)

    bool all() const { return independent && basis && kernel_iso && model_iso && disjoint; }
    bool none() const { return !independent && !basis && !kernel_iso && !model_iso && !disjoint; }
    bool consistent() const { return all() || none(); }
};

/// Evaluates conditions (i)-(v) for the cocycles alpha_t (one per t in T, values in M) on
/// the model; throws ContractViolation if they disagree.
inline PropA1Result check_prop_a1(const SemidirectModel& model, const std::vector<Cocycle>& alphas) {
    const auto& gt = model.group();
    const F2GModule& m = model.module();
    const int d = m.dim();
    const int nt = static_cast<int>(alphas.size());
    if (nt < 1) throw InputError("need at least one class");
    if (d * nt > 63) throw ResourceError("M^T exceeds 63 coordinates");
    if (gt.order() > kPropA1OrderLimit) throw ResourceError("model too large for the five-condition check");
    detail::require_module_hypotheses(m);
    for (const auto& a : alphas)
        if (!verify_cocycle(gt, model.action_fn(), a)) throw InputError("supplied cochain is not a cocycle on the model");

    PropA1Result r;
    CocycleSpace z(gt, d, model.action_fn());

    // (i) no nonzero combination is a coboundary.
    std::vector<F2Vec> coords;
    for (const auto& a : alphas) coords.push_back(detail::generator_coordinates(gt, a, d));
    r.independent = true;
    for (std::uint64_t eps = 1; eps < (std::uint64_t{1} << nt); ++eps) {
        F2Vec x = 0;
        for (int t = 0; t < nt; ++t)
            if ((eps >> t) & 1u) x ^= coords[static_cast<std::size_t>(t)];
        if (z.is_coboundary(x)) {
            r.independent = false;
            break;
        }
    }

    // (ii) independent and dim H^1(G_T, M) = |T|.
    r.basis = r.independent && z.h1_dim() == nt;

    // a_T(gamma) in M^T.
    auto a_t = [&](std::size_t i) {
        F2Vec v = 0;
        for (int t = 0; t < nt; ++t) v |= alphas[static_cast<std::size_t>(t)].values[i] << (t * d);
        return v;
    };
    const F2GModule mt = nt == model.copies() ? model.power_module() : power(m, nt);
    const std::size_t wt_size = model.kernel().size();
    const std::size_t full_kernel = std::size_t{1} << (d * nt);

    // (iii) alpha~ on W_T is injective, G-equivariant and onto M^T.
    {
        std::unordered_set<F2Vec> seen;
        bool ok = wt_size == full_kernel;
        for (auto w : model.kernel())
            if (!seen.insert(a_t(w)).second) ok = false;
        for (std::size_t s = 0; ok && s < gt.num_generators(); ++s) {
            std::size_t gi = gt.index_of(gt.generator(s));
            const F2Mat& act = mt.action(model.projection(gi));
            for (auto w : model.kernel())
                if (a_t(gt.conjugate(gi, w)) != act.apply(a_t(w))) {
                    ok = false;
                    break;
                }
        }
        r.kernel_iso = ok;
    }

    // (iv) gamma -> (a_T(gamma), phi(gamma)) is a homomorphism, injective, onto M^T x| G.
    {
        bool ok = gt.order() == full_kernel * m.group().order();
        for (std::size_t i = 0; ok && i < gt.order(); ++i)
            for (std::size_t s = 0; s < gt.num_generators(); ++s) {
                std::size_t gs = gt.index_of(gt.generator(s));
                std::size_t j = gt.right(i, s);
                F2Vec lhs = a_t(j);
                F2Vec rhs = a_t(i) ^ mt.action(model.projection(i)).apply(a_t(gs));
                if (lhs != rhs) {
                    ok = false;
                    break;
                }
            }
        if (ok) {
            std::unordered_set<SemidirectElement, SemidirectHash> images;
            for (std::size_t i = 0; i < gt.order(); ++i)
                if (!images.insert({a_t(i), gt.element(i).g}).second) {
                    ok = false;
                    break;
                }
        }
        r.model_iso = ok;
    }

    // (v) W_T -> prod_t Gal(K_t/K), Gal(K_t/K) = alpha_t(W_T), is bijective and each K_t is a
    // proper extension of K.
    {
        std::size_t product = 1;
        bool ok = true;
        for (int t = 0; t < nt; ++t) {
            std::unordered_set<F2Vec> image;
            for (auto w : model.kernel()) image.insert(alphas[static_cast<std::size_t>(t)].values[w]);
            if (image.size() < 2) ok = false;
            product *= image.size();
        }
        std::unordered_set<F2Vec> joint;
        for (auto w : model.kernel()) joint.insert(a_t(w));
        r.disjoint = ok && joint.size() == wt_size && product == wt_size;
    }

    if (!r.consistent())
        throw ContractViolation("conditions (i)-(v) disagree: " + std::to_string(r.independent) + std::to_string(r.basis) +
                                std::to_string(r.kernel_iso) + std::to_string(r.model_iso) + std::to_string(r.disjoint));
    return r;
}

/// First model element (in index order) over g whose class of alpha_t in M/(g-1) equals that
/// of targets[t] for every t.
inline std::size_t lift_with_targets(const SemidirectModel& model, const std::vector<Cocycle>& alphas,
                                     const Permutation& g, const std::vector<F2Vec>& targets) {
    if (targets.size() != alphas.size()) throw InputError("need one target per class");
    if (!model.base().contains(g)) throw InputError("element " + g.to_string() + " is not in G");
    if (!check_prop_a1(model, alphas).all()) throw PreconditionError("classes do not satisfy the five conditions");
    const F2GModule& m = model.module();
    EchelonBasis im = image(m.action(g) + F2Mat::identity(m.dim()));
    std::size_t gi = model.base().index_of(g);
    for (std::size_t i = 0; i < model.group().order(); ++i) {
        if (model.projection(i) != gi) continue;
        bool ok = true;
        for (std::size_t t = 0; t < alphas.size() && ok; ++t)
            ok = im.reduce(alphas[t].values[i]) == im.reduce(targets[t]);
        if (ok) return i;
    }
    throw ContractViolation("no lift of " + g.to_string() + " with the requested classes");
}

/// For a model N x| G containing the section (0, s) for every generator s of G: the torsor
/// with class (v, g) -> v has a connected coordinate ring (transitive affine action on N)
/// with no quadratic subextension (no index-2 subgroup contains the stabiliser of 0).
inline bool torsor_field_no_quadratic_subext(const SemidirectModel& model) {
    const auto& gt = model.group();
    const F2GModule& n = model.power_module();
    for (const auto& s : model.base().generators())
        if (!gt.contains({0, s})) throw PreconditionError("model does not contain the section of G");

    // (1) orbit of 0 under (v, g) x = v + g x is the whole of N.
    std::unordered_set<F2Vec> orbit;
    for (const auto& e : gt.elements()) orbit.insert(e.v);
    if (orbit.size() != (std::size_t{1} << n.dim())) return false;

    // (2) homomorphisms to F_2 vanishing on Stab(0) = {(0, g)}.
    if (gt.num_generators() > 64) throw ResourceError("too many generators");
    static const F2Mat one = F2Mat::identity(1);
    CocycleSpace homs(gt, 1, [](std::size_t) -> const F2Mat& { return one; });
    std::vector<F2Vec> rows(homs.relations().rows());
    for (std::size_t i = 0; i < gt.order(); ++i)
        if (gt.element(i).v == 0) rows.push_back(homs.coordinate_form(i, 0));
    return nullspace(rows, homs.unknowns()).empty();
}

/// W_T lies in the commutator subgroup, so G_T and G have the same abelianization.
inline bool abelianization_check(const SemidirectModel& model) {
    if (model.base().order() == 1) throw PreconditionError("G is trivial");
    auto derived = model.group().derived_subgroup();
    for (auto w : model.kernel())
        if (!derived[w]) return false;
    return true;
}

}  // namespace kummer::modf2

#endif
