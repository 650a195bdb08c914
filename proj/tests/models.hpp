// Finite models of G_T used by the module tests and the acceptance suite.
#ifndef KUMMER_TESTS_MODELS_HPP
#define KUMMER_TESTS_MODELS_HPP

#include <random>
#include <string>
#include <vector>

#include "kummer/modf2/semidirect.hpp"
#include "kummer/modf2/torsor.hpp"

namespace models {

using namespace kummer::modf2;
using kummer::perm::Permutation;

/// A model with a list of cocycles on it and the verdict it was built to have.
struct Instance {
    std::string name;
    SemidirectModel model;
    std::vector<Cocycle> alphas;
    bool expect_all;  // true: all five hold; false: none; only for constructed cases
    bool known;       // whether expect_all is known by construction
};

inline ModulePtr zero_sum_over_symmetric(int m) {
    return std::make_shared<const F2GModule>(zero_sum_module(share(kummer::perm::symmetric_group(m))));
}

inline std::vector<Cocycle> coordinate_cocycles(const SemidirectModel& model) {
    std::vector<Cocycle> out;
    for (int t = 0; t < model.copies(); ++t) out.push_back(model.coordinate_cocycle(t));
    return out;
}

/// Random invertible T x T matrix over F_2, rows as bitmasks.
inline std::vector<int> random_gl(std::mt19937_64& rng, int n) {
    for (;;) {
        std::vector<int> rows(static_cast<std::size_t>(n));
        EchelonBasis b;
        bool ok = true;
        for (auto& r : rows) {
            r = static_cast<int>(rng() & ((1u << n) - 1));
            ok = ok && b.insert(static_cast<F2Vec>(r));
        }
        if (ok) return rows;
    }
}

/// alpha'_t = sum_s A_ts alpha_s + coboundary of a random vector.
inline std::vector<Cocycle> transformed(std::mt19937_64& rng, const SemidirectModel& model,
                                        const std::vector<Cocycle>& alphas) {
    const int n = static_cast<int>(alphas.size());
    auto a = random_gl(rng, n);
    std::vector<Cocycle> out;
    for (int t = 0; t < n; ++t) {
        std::vector<int> coeffs(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) coeffs[static_cast<std::size_t>(s)] = (a[static_cast<std::size_t>(t)] >> s) & 1;
        out.push_back(add_coboundary(model, combine(alphas, coeffs), rng() & low_mask(model.dim())));
    }
    return out;
}

/// Subgroup of M^T x| G generated by random lifts (v_s, s) and `extra` random kernel vectors.
inline SemidirectModel random_subgroup_model(std::mt19937_64& rng, ModulePtr m, int copies, int extra) {
    const int bits = m->dim() * copies;
    std::vector<SemidirectElement> gens;
    for (const auto& s : m->group().generators()) gens.push_back({rng() & low_mask(bits), s});
    Permutation id = m->group().element(0);
    for (int k = 0; k < extra; ++k) gens.push_back({rng() & low_mask(bits), id});
    return SemidirectModel(std::move(m), copies, std::move(gens));
}

/// Fifty models over S_3 and S_5: tautological models with transformed classes (all five
/// hold), random subgroups with coordinate classes (verdict not fixed in advance) and
/// degenerate class lists (none hold).
inline std::vector<Instance> random_models(std::uint64_t seed, int count = 50) {
    std::mt19937_64 rng(seed);
    auto zs3 = zero_sum_over_symmetric(3);
    auto zs5 = zero_sum_over_symmetric(5);
    std::vector<Instance> out;
    for (int k = 0; k < count; ++k) {
        const int kind = k % 5;
        const bool big = (k % 10) >= 8;  // one S_5 model in five
        ModulePtr m = big ? zs5 : zs3;
        const int copies = big ? 1 : 1 + static_cast<int>(rng() % 3);
        const std::string base = big ? "S5" : "S3";
        if (kind == 0 || kind == 1) {
            SemidirectModel model = tautological_model(m, copies);
            auto alphas = transformed(rng, model, coordinate_cocycles(model));
            out.push_back({base + " tautological, transformed classes", model, alphas, true, true});
        } else if (kind == 2 || kind == 3) {
            const int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(copies + 1));
            SemidirectModel model = random_subgroup_model(rng, m, copies, extra);
            auto alphas = coordinate_cocycles(model);
            out.push_back({base + " random subgroup", model, alphas, false, false});
        } else {
            SemidirectModel model = tautological_model(m, copies);
            auto alphas = coordinate_cocycles(model);
            // Repeat a class, or replace one by a coboundary.
            if (copies >= 2 && (rng() & 1u)) {
                alphas[1] = add_coboundary(model, alphas[0], rng() & low_mask(model.dim()));
                out.push_back({base + " repeated class", model, alphas, false, true});
            } else {
                Cocycle zero;
                zero.values.assign(model.group().order(), 0);
                alphas.back() = add_coboundary(model, zero, rng() & low_mask(model.dim()));
                out.push_back({base + " coboundary class", model, alphas, false, true});
            }
        }
    }
    return out;
}

}  // namespace models

#endif
