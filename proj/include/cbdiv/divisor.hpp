/*
  divisor.hpp

  First Chern class computations for conformal blocks bundles.

  The four-point degree is

    deg = rk(lambda) * sum_i h(lambda_i)
        - sum_{mu in P_ell} h(mu) * [ r12(mu) r34(mu*) + r13(mu) r24(mu*)
                                      + r14(mu) r23(mu*) ]

  with h the conformal weight and r_ab(mu) the three-point rank
  rk(lambda_a, lambda_b, mu).  Every degree is asserted to be a
  nonnegative integer before use; a violation is a table or formula
  bug, never input dependent.

  Intersection with F(N1,N2,N3,N4) attaches a fused leg vector to each
  block and sums deg over the joint support:

    D . F = sum_{mu_vec} deg V(mu_vec) * prod_i rk(lambda_{N_i}, mu_i*).

  Vanishing is probed on the full F-curve list (F-curve classes span
  the one-cycles; that spanning statement is an input assumption,
  recorded here once).
*/

#pragma once

#include "fcurve.hpp"
#include "fusion.hpp"
#include "parallel.hpp"

#include <optional>

namespace cbdiv {

/// F-curve classes span the 1-cycles of the moduli space; intersecting
/// them all is therefore a complete vanishing probe.  External input,
/// not re-derived here.
inline constexpr bool kFCurvesSpanOneCycles = true;

namespace detail {

/// Degree of a four-point bundle given by alcove ids; memoized on the
/// sorted quadruple.
class DegreeCache {
public:
    explicit DegreeCache(FusionTable& table) : table_(table) {
        int count = table.count();
        h_.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
            h_.push_back(conformal_weight(table.weight(i), table.algebra()));
    }

    Int degree(std::array<int, 4> ids) {
        std::sort(ids.begin(), ids.end());
        {
            std::lock_guard<std::mutex> lock(mtx_);
            auto it = memo_.find(ids);
            if (it != memo_.end()) return it->second;
        }
        Int value = compute(ids);
        std::lock_guard<std::mutex> lock(mtx_);
        return memo_.emplace(ids, std::move(value)).first->second;
    }

private:
    Int compute(const std::array<int, 4>& ids) {
        Int rank = 0;
        {
            const auto& p12 = table_.fuse(ids[0], ids[1]);
            const auto& p34 = table_.fuse(ids[2], ids[3]);
            for (int m = 0; m < table_.count(); ++m)
                rank += p12[static_cast<std::size_t>(m)] *
                        p34[static_cast<std::size_t>(table_.dual_id(m))];
        }
        Rat total = 0;
        for (int i = 0; i < 4; ++i) total += h_[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])];
        Rat deg = Rat(rank) * total;

        static constexpr int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (const auto& p : pairings) {
            const auto& left = table_.fuse(ids[static_cast<std::size_t>(p[0])],
                                           ids[static_cast<std::size_t>(p[1])]);
            const auto& right = table_.fuse(ids[static_cast<std::size_t>(p[2])],
                                            ids[static_cast<std::size_t>(p[3])]);
            for (int m = 0; m < table_.count(); ++m) {
                // r_left(mu) = coefficient of mu* in the pair product
                Int rl = left[static_cast<std::size_t>(table_.dual_id(m))];
                if (rl == 0) continue;
                Int rr = right[static_cast<std::size_t>(m)];
                if (rr == 0) continue;
                deg -= h_[static_cast<std::size_t>(m)] * Rat(rl * rr);
            }
        }

        if (boost::multiprecision::denominator(deg) != 1)
            throw consistency_error("four-point degree is not an integer");
        Int out = boost::multiprecision::numerator(deg);
        if (out < 0) throw consistency_error("four-point degree is negative");
        degree_guard_counter().fetch_add(1);
        return out;
    }

    FusionTable& table_;
    std::vector<Rat> h_;
    std::map<std::array<int, 4>, Int> memo_;
    std::mutex mtx_;
};

inline DegreeCache& degree_cache(const LeveledAlgebra& alg) {
    static std::map<LeveledAlgebra, std::unique_ptr<DegreeCache>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[alg];
    if (!slot) slot = std::make_unique<DegreeCache>(fusion_table(alg));
    return *slot;
}

} // namespace detail

/// Degree of V on the four-point moduli line.
inline Int degree_on_m04(const LeveledAlgebra& alg, const Weight& l1, const Weight& l2,
                         const Weight& l3, const Weight& l4) {
    auto& table = fusion_table(alg);
    return detail::degree_cache(alg).degree(
        {table.id(l1), table.id(l2), table.id(l3), table.id(l4)});
}

inline Int degree_on_m04(const BundleSpec& spec) {
    if (spec.n() != 4) throw validation_error("degree_on_m04 needs exactly four weights");
    return degree_on_m04(spec.algebra, spec.weights.weights[0], spec.weights.weights[1],
                         spec.weights.weights[2], spec.weights.weights[3]);
}

/// D . F(N1,N2,N3,N4), exact and nonnegative.
inline Int fcurve_intersection(const BundleSpec& spec, const FCurve& F) {
    if (F.n != spec.n()) throw validation_error("F-curve size does not match the bundle");
    auto& table = fusion_table(spec.algebra);
    auto& degrees = detail::degree_cache(spec.algebra);
    WeightTuple tuple = normalize(spec.weights);

    std::array<std::vector<Int>, 4> leg;
    std::array<std::vector<int>, 4> support;
    for (int b = 0; b < 4; ++b) {
        std::vector<int> ids;
        for (int p : F.blocks[static_cast<std::size_t>(b)])
            ids.push_back(table.id(tuple.weights[static_cast<std::size_t>(p - 1)]));
        leg[static_cast<std::size_t>(b)] = table.fold(ids);
        for (int m = 0; m < table.count(); ++m)
            if (leg[static_cast<std::size_t>(b)][static_cast<std::size_t>(m)] != 0)
                support[static_cast<std::size_t>(b)].push_back(m);
    }

    Int total = 0;
    for (int m0 : support[0]) {
        const Int& c0 = leg[0][static_cast<std::size_t>(m0)];
        for (int m1 : support[1]) {
            Int c01 = c0 * leg[1][static_cast<std::size_t>(m1)];
            for (int m2 : support[2]) {
                Int c012 = c01 * leg[2][static_cast<std::size_t>(m2)];
                for (int m3 : support[3]) {
                    Int deg = degrees.degree({m0, m1, m2, m3});
                    if (deg == 0) continue;
                    total += deg * c012 * leg[3][static_cast<std::size_t>(m3)];
                }
            }
        }
    }
    if (total < 0) throw consistency_error("F-curve intersection is negative");
    return total;
}

/// Intersection numbers of D against F-curve classes.  `reduced` means
/// one representative per block-size class (valid for S_n-symmetric
/// weights, where the number only depends on the sizes).
struct DivisorClass {
    int n = 4;
    bool reduced = false;
    std::map<FCurve, Int> entries;
    std::optional<std::map<int, Rat>> symmetric_b;

    bool is_zero() const {
        for (const auto& [f, v] : entries)
            if (v != 0) return false;
        return true;
    }
};

inline DivisorClass intersection_vector(const BundleSpec& spec, bool up_to_symmetry = true,
                                        int threads = 0) {
    if (spec.n() < 4) throw validation_error("divisor queries need n >= 4");
    bool reduced = up_to_symmetry && all_equal_weights(spec.weights);

    std::vector<FCurve> curves;
    if (reduced)
        for (const auto& sizes : block_size_classes(spec.n()))
            curves.push_back(fcurve_from_sizes(spec.n(), sizes));
    else
        curves = all_fcurves(spec.n());

    std::vector<Int> values(curves.size());
    parallel_for(curves.size(),
                 [&](std::size_t i) { values[i] = fcurve_intersection(spec, curves[i]); }, threads);

    DivisorClass out;
    out.n = spec.n();
    out.reduced = reduced;
    for (std::size_t i = 0; i < curves.size(); ++i) out.entries[curves[i]] = values[i];
    return out;
}

/// True iff every F-curve intersection vanishes.
inline bool divisor_is_zero(const BundleSpec& spec, int threads = 0) {
    static_assert(kFCurvesSpanOneCycles);
    return intersection_vector(spec, true, threads).is_zero();
}

/// Solve D = sum_j b_j B_j over the block-size classes (S_n-symmetric
/// weights only).  B_j sums boundary divisors over all size-j subsets,
/// so the middle stratum of even n is counted twice.
inline std::map<int, Rat> symmetric_class(const BundleSpec& spec, int threads = 0) {
    if (!all_equal_weights(spec.weights))
        throw validation_error("symmetric_class needs an S_n-symmetric weight tuple");
    int n = spec.n();
    auto classes = block_size_classes(n);
    std::vector<int> js;
    for (int j = 2; j <= n / 2; ++j) js.push_back(j);

    // rows: one equation per block-size class
    std::vector<FCurve> reps;
    for (const auto& sizes : classes) reps.push_back(fcurve_from_sizes(n, sizes));
    std::vector<std::vector<Rat>> m;
    for (const auto& rep : reps) {
        std::vector<Rat> row;
        for (int j : js) row.push_back(Rat(boundary_sum_pairing(j, rep)));
        m.push_back(std::move(row));
    }
    std::vector<Rat> rhs(reps.size());
    parallel_for(reps.size(),
                 [&](std::size_t i) { rhs[i] = Rat(fcurve_intersection(spec, reps[i])); }, threads);

    // exact Gaussian elimination
    std::size_t rows = m.size(), cols = js.size();
    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        std::swap(rhs[p], rhs[rank]);
        for (std::size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == rank || m[r2][c] == 0) continue;
            Rat f = m[r2][c] / m[rank][c];
            for (std::size_t c2 = 0; c2 < cols; ++c2) m[r2][c2] -= f * m[rank][c2];
            rhs[r2] -= f * rhs[rank];
        }
        pivot_of_col[c] = rank;
        ++rank;
    }
    for (std::size_t r2 = rank; r2 < rows; ++r2)
        if (rhs[r2] != 0)
            throw consistency_error("divisor class is not in the span of the B_j basis");
    std::map<int, Rat> out;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] == SIZE_MAX) {
            // free column: only possible if the pairing matrix is rank
            // deficient, which the B_j basis never is for n >= 4
            throw consistency_error("B_j pairing matrix is rank deficient");
        }
        out[js[c]] = rhs[pivot_of_col[c]] / m[pivot_of_col[c]][c];
    }
    return out;
}

/// The transposed bundle at the paired level.
inline BundleSpec transposed_spec(const BundleSpec& spec) {
    int r = spec.algebra.rank_plus_one - 1;
    LeveledAlgebra partner(spec.algebra.level + 1, r);
    std::vector<Weight> ws;
    ws.reserve(static_cast<std::size_t>(spec.n()));
    for (const auto& w : spec.weights.weights) ws.push_back(transpose(normalize(w), spec.algebra));
    return BundleSpec(partner, WeightTuple(partner.rank_plus_one, std::move(ws)));
}

/// At the critical level, D and its transposed partner have equal
/// intersection vectors; this verifies that entrywise.
inline bool critical_partner_equal(const BundleSpec& spec, int threads = 0) {
    int k = spec.algebra.rank_plus_one;
    Int total = total_size(normalize(spec.weights));
    if (total % k != 0 || Int(spec.algebra.level) != total / k - 1)
        throw validation_error("critical_partner_equal: level is not the critical level");
    BundleSpec partner = transposed_spec(spec);
    DivisorClass a = intersection_vector(spec, true, threads);
    DivisorClass b = intersection_vector(partner, true, threads);
    if (a.entries.size() != b.entries.size()) return false;
    for (auto ia = a.entries.begin(), ib = b.entries.begin(); ia != a.entries.end(); ++ia, ++ib) {
        if (ia->first != ib->first || ia->second != ib->second) return false;
    }
    return true;
}

} // namespace cbdiv
