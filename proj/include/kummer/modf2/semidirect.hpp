#ifndef KUMMER_MODF2_SEMIDIRECT_HPP
#define KUMMER_MODF2_SEMIDIRECT_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/modf2/cohomology.hpp"
#include "kummer/modf2/f2.hpp"
#include "kummer/modf2/module.hpp"
#include "kummer/perm/group.hpp"

namespace kummer::modf2 {

/// Element (v, g) of N x| G for an F_2 G-module N.
struct SemidirectElement {
    F2Vec v = 0;
    Permutation g;

    friend bool operator==(const SemidirectElement& a, const SemidirectElement& b) { return a.v == b.v && a.g == b.g; }
};

struct SemidirectHash {
    std::size_t operator()(const SemidirectElement& e) const noexcept {
        std::uint64_t h = e.v * 0x9e3779b97f4a7c15ull;
        h ^= e.g.key() + 0x7f4a7c159e3779b9ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// (v, g)(w, h) = (v + g w, g h) and (v, g)^{-1} = (g^{-1} v, g^{-1}).
struct SemidirectOps {
    ModulePtr module;

    SemidirectElement mul(const SemidirectElement& a, const SemidirectElement& b) const {
        return {a.v ^ module->action(a.g).apply(b.v), a.g * b.g};
    }
    SemidirectElement inv(const SemidirectElement& a) const {
        Permutation gi = a.g.inverse();
        return {module->action(gi).apply(a.v), gi};
    }
};

using SemidirectGroup = perm::FiniteGroup<SemidirectElement, SemidirectOps, SemidirectHash>;

/// A finite model of G_T: a subgroup of M^T x| G surjecting onto G, with M a simple
/// G-module. Copy t of M occupies coordinates [t d, (t+1) d) of the vector part.
class SemidirectModel {
public:
    /// Subgroup generated by the given elements of M^copies x| G.
    SemidirectModel(ModulePtr m, int copies, std::vector<SemidirectElement> generators,
                    std::size_t limit = perm::kDefaultGroupLimit)
        : module_(std::move(m)), copies_(copies) {
        if (copies < 1) throw InputError("a model needs at least one copy of M");
        if (module_->dim() * copies > 63) throw ResourceError("vector part of the model exceeds 63 bits");
        power_ = std::make_shared<const F2GModule>(modf2::power(*module_, copies));
        for (const auto& e : generators) {
            if (!module_->group().contains(e.g)) throw InputError("generator projects outside G");
            if (e.v & ~low_mask(power_->dim())) throw InputError("generator vector has too many coordinates");
        }
        SemidirectElement id{0, module_->group().element(0)};
        group_ = SemidirectGroup::generate(std::move(generators), id, SemidirectOps{power_}, limit);
        proj_.resize(group_.order());
        std::vector<char> hit(module_->group().order(), 0);
        for (std::size_t i = 0; i < group_.order(); ++i) {
            proj_[i] = module_->group().index_of(group_.element(i).g);
            hit[proj_[i]] = 1;
            if (group_.element(i).g.is_identity()) kernel_.push_back(i);
        }
        for (char h : hit)
            if (!h) throw InputError("model does not surject onto G");
    }

    const F2GModule& module() const { return *module_; }
    const ModulePtr& module_ptr() const { return module_; }
    const F2GModule& power_module() const { return *power_; }
    const PermGroup& base() const { return module_->group(); }
    const SemidirectGroup& group() const { return group_; }
    int copies() const { return copies_; }
    int dim() const { return module_->dim(); }

    /// Index in G of the image of model element i.
    std::size_t projection(std::size_t i) const { return proj_[i]; }
    /// Indices of W_T, the kernel of the projection to G.
    const std::vector<std::size_t>& kernel() const { return kernel_; }

    /// Copy t of a vector in M^T.
    F2Vec block(F2Vec v, int t) const { return (v >> (t * dim())) & low_mask(dim()); }

    /// Action of model element i on M through its image in G.
    const F2Mat& action_on_m(std::size_t i) const { return module_->action(proj_[i]); }
    /// action_on_m as a callable; valid while the model lives.
    std::function<const F2Mat&(std::size_t)> action_fn() const {
        return [this](std::size_t i) -> const F2Mat& { return action_on_m(i); };
    }

    /// The coordinate-projection cocycle alpha_t(v, g) = v_t.
    Cocycle coordinate_cocycle(int t) const {
        if (t < 0 || t >= copies_) throw InputError("coordinate index out of range");
        Cocycle c;
        c.values.reserve(group_.order());
        for (const auto& e : group_.elements()) c.values.push_back(block(e.v, t));
        return c;
    }

private:
    ModulePtr module_;
    std::shared_ptr<const F2GModule> power_;
    int copies_;
    SemidirectGroup group_;
    std::vector<std::size_t> proj_;
    std::vector<std::size_t> kernel_;
};

/// Lifts (0, s) of the generators of G.
inline std::vector<SemidirectElement> section_generators(const F2GModule& m) {
    std::vector<SemidirectElement> out;
    for (const auto& s : m.group().generators()) out.push_back({0, s});
    return out;
}

/// The full group M^T x| G, generated by (0, s) and (b_t, 1) with b_t the first basis vector
/// of copy t (a simple M is generated by any nonzero vector).
inline SemidirectModel tautological_model(ModulePtr m, int copies, std::size_t limit = perm::kDefaultGroupLimit) {
    auto gens = section_generators(*m);
    Permutation id = m->group().element(0);
    for (int t = 0; t < copies; ++t) gens.push_back({unit_vector(t * m->dim()), id});
    return SemidirectModel(std::move(m), copies, std::move(gens), limit);
}

/// sum_t coeffs[t] * c_t.
inline Cocycle combine(const std::vector<Cocycle>& cs, const std::vector<int>& coeffs) {
    Cocycle out;
    out.values.assign(cs.front().values.size(), 0);
    for (std::size_t t = 0; t < cs.size(); ++t)
        if (coeffs[t] & 1)
            for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] ^= cs[t].values[i];
    return out;
}

/// c + (g -> g m - m) on the model, with g acting through G.
inline Cocycle add_coboundary(const SemidirectModel& model, const Cocycle& c, F2Vec m) {
    Cocycle out = c;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] ^= model.action_on_m(i).apply(m) ^ m;
    return out;
}

}  // namespace kummer::modf2

#endif
