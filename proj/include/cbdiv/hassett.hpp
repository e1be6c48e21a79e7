/*
  hassett.hpp

  Weighted-space contraction predicates.  The reduction morphism for a
  weight vector a contracts exactly the F-curves whose three lightest
  blocks carry total weight at most 1 (ties count as contracted; when
  blocks tie for heaviest, any choice gives the same verdict).
*/

#pragma once

#include "divisor.hpp"

namespace cbdiv {

struct HassettWeights {
    std::vector<Rat> a;

    HassettWeights() = default;
    explicit HassettWeights(std::vector<Rat> weights) : a(std::move(weights)) {
        Rat total = 0;
        for (const auto& v : a) {
            if (v <= 0 || v > 1) throw validation_error("Hassett weights must satisfy 0 < a_i <= 1");
            total += v;
        }
        if (total <= 2) throw validation_error("Hassett weights must sum to more than 2");
    }

    int n() const { return static_cast<int>(a.size()); }
    bool symmetric() const {
        for (const auto& v : a)
            if (v != a.front()) return false;
        return true;
    }
};

inline bool rho_contracts(const HassettWeights& hw, const FCurve& F) {
    if (hw.n() != F.n) throw validation_error("Hassett weight count does not match the curve");
    Rat total = 0, heaviest = 0;
    for (const auto& block : F.blocks) {
        Rat w = 0;
        for (int p : block) w += hw.a[static_cast<std::size_t>(p - 1)];
        total += w;
        heaviest = std::max(heaviest, w);
    }
    return total - heaviest <= 1;
}

/// F-curve classes contracted by the divisor (zero intersection).
inline std::vector<FCurve> contracted_set(const BundleSpec& spec, int threads = 0) {
    DivisorClass vec = intersection_vector(spec, true, threads);
    std::vector<FCurve> out;
    for (const auto& [curve, value] : vec.entries)
        if (value == 0) out.push_back(curve);
    return out;
}

/// F-curve classes contracted by the reduction morphism.
inline std::vector<FCurve> contracted_set(const HassettWeights& hw) {
    std::vector<FCurve> out;
    if (hw.symmetric()) {
        for (const auto& sizes : block_size_classes(hw.n())) {
            FCurve rep = fcurve_from_sizes(hw.n(), sizes);
            if (rho_contracts(hw, rep)) out.push_back(rep);
        }
    } else {
        for (const auto& curve : all_fcurves(hw.n()))
            if (rho_contracts(hw, curve)) out.push_back(curve);
    }
    return out;
}

struct ContractionComparison {
    std::vector<FCurve> both;
    std::vector<FCurve> divisor_only;
    std::vector<FCurve> hassett_only;

    bool identical() const { return divisor_only.empty() && hassett_only.empty(); }
};

/// Structured diff of the two contracted curve sets.  When both sides
/// are symmetric the diff runs over block-size classes, otherwise over
/// every F-curve.
inline ContractionComparison compare_contractions(const BundleSpec& spec, const HassettWeights& hw,
                                                  int threads = 0) {
    if (hw.n() != spec.n()) throw validation_error("compare_contractions: sizes differ");
    bool reduced = all_equal_weights(spec.weights) && hw.symmetric();

    std::vector<FCurve> curves;
    if (reduced)
        for (const auto& sizes : block_size_classes(spec.n()))
            curves.push_back(fcurve_from_sizes(spec.n(), sizes));
    else
        curves = all_fcurves(spec.n());

    std::vector<char> by_divisor(curves.size());
    parallel_for(curves.size(),
                 [&](std::size_t i) {
                     by_divisor[i] = fcurve_intersection(spec, curves[i]) == 0 ? 1 : 0;
                 },
                 threads);

    ContractionComparison out;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        bool rho = rho_contracts(hw, curves[i]);
        if (by_divisor[i] && rho) out.both.push_back(curves[i]);
        else if (by_divisor[i]) out.divisor_only.push_back(curves[i]);
        else if (rho) out.hassett_only.push_back(curves[i]);
    }
    return out;
}

} // namespace cbdiv
