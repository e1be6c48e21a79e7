/*
  fusion.hpp

  Ranks of conformal blocks bundles for sl_k at level ell.

  Two of the three mutually checking algorithms live here:

  (1) fusion_rank: the iterated fusion product.  Classical LR
      expansions are folded into the level-ell alcove by reflecting
      kappa + rho into the fundamental affine alcove at level
      L = ell + k, tracking the sign of each simple reflection and
      discarding wall hits.  Reflections act on shifted affine Dynkin
      labels, so only honest affine Weyl elements are ever applied.

  (2) rank_quantum: the same numbers through the small quantum
      cohomology of Gr(k, k+ell).  Products of Schubert classes are
      computed by LR expansion followed by removal of (k+ell)-rim
      hooks, each hook contributing (-1)^(k - height).  sl-ranks are
      read off after padding the insertion list with determinant
      powers so that the total charge matches a q-degree, and
      extracting the full-box coefficient.

  The third algorithm (the Verlinde sum) is in verlinde.hpp.

  A FusionTable holds, per (k, ell), the alcove, dual indices, and
  lazily built pair products; every three-point rank and leg rank is a
  table lookup afterwards.
*/

#pragma once

#include "tensor.hpp"

#include <memory>
#include <optional>
#include <set>

namespace cbdiv {

namespace detail {

/// Reflect kappa + rho into the interior of the level-L fundamental
/// alcove.  Returns the normalized alcove weight and the sign, or
/// nullopt for a wall hit.
inline std::optional<std::pair<Weight, int>> weyl_fold(const Weight& kappa,
                                                       const LeveledAlgebra& alg) {
    int k = alg.rank_plus_one;
    // shifted affine Dynkin labels of kappa + rho (all labels of rho are 1)
    std::vector<long> x(static_cast<std::size_t>(k));
    for (int i = 1; i < k; ++i)
        x[static_cast<std::size_t>(i)] = kappa.row(i - 1) - kappa.row(i) + 1;
    x[0] = alg.level - theta_pairing(kappa) + 1;

    int sign = 1;
    for (long guard = 0;; ++guard) {
        if (guard > 1000000) throw consistency_error("weyl_fold: reflection loop did not terminate");
        int neg = -1;
        for (int i = 0; i < k; ++i) {
            if (x[static_cast<std::size_t>(i)] == 0) return std::nullopt;
            if (x[static_cast<std::size_t>(i)] < 0 && neg < 0) neg = i;
        }
        if (neg < 0) break;
        long v = x[static_cast<std::size_t>(neg)];
        x[static_cast<std::size_t>(neg)] = -v;
        if (k == 2) {
            x[static_cast<std::size_t>(1 - neg)] += 2 * v;
        } else {
            x[static_cast<std::size_t>((neg + 1) % k)] += v;
            x[static_cast<std::size_t>((neg + k - 1) % k)] += v;
        }
        sign = -sign;
    }

    std::vector<int> rows(static_cast<std::size_t>(k), 0);
    for (int i = k - 2; i >= 0; --i)
        rows[static_cast<std::size_t>(i)] =
            rows[static_cast<std::size_t>(i + 1)] + static_cast<int>(x[static_cast<std::size_t>(i + 1)]) - 1;
    return std::make_pair(Weight(std::move(rows)), sign);
}

/// Remove (k+ell)-rim hooks from a gl_k diagram until it fits the
/// k x ell box; sign (-1)^(k - height) per hook.  Returns the box
/// diagram (not normalized), the sign, and the number of hooks, or
/// nullopt when two beta-numbers collide mod k+ell.
inline std::optional<std::tuple<Weight, int, int>> rimhook_fold(const Weight& kappa,
                                                                const LeveledAlgebra& alg) {
    int k = alg.rank_plus_one;
    int N = k + alg.level;
    std::vector<long> beta(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) beta[static_cast<std::size_t>(i)] = kappa.row(i) + (k - 1 - i);

    {
        std::set<long> residues;
        for (long b : beta)
            if (!residues.insert(b % N).second) return std::nullopt;
    }

    int sign = 1, hooks = 0;
    for (;;) {
        auto it = std::max_element(beta.begin(), beta.end());
        if (*it < N) break;
        long head = *it;
        int height = 1;
        for (long b : beta)
            if (b > head - N && b < head) ++height;
        sign *= ((k - height) % 2 == 0) ? 1 : -1;
        *it = head - N;
        ++hooks;
    }
    std::sort(beta.begin(), beta.end(), std::greater<long>());
    std::vector<int> rows(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        rows[static_cast<std::size_t>(i)] = static_cast<int>(beta[static_cast<std::size_t>(i)] - (k - 1 - i));
    return std::make_tuple(Weight(std::move(rows)), sign, hooks);
}

} // namespace detail

/// Per-algebra fusion data: alcove, duals, lazily built pair products.
class FusionTable {
public:
    explicit FusionTable(const LeveledAlgebra& alg) : alg_(alg), alcove_(enumerate_alcove(alg)) {
        for (std::size_t i = 0; i < alcove_.size(); ++i) index_[alcove_[i]] = static_cast<int>(i);
        dual_.resize(alcove_.size());
        for (std::size_t i = 0; i < alcove_.size(); ++i) dual_[i] = id(dual(alcove_[i]));
        products_.resize(alcove_.size() * alcove_.size());
    }

    const LeveledAlgebra& algebra() const { return alg_; }
    const std::vector<Weight>& alcove() const { return alcove_; }
    int count() const { return static_cast<int>(alcove_.size()); }

    int id(const Weight& w) const {
        auto it = index_.find(normalize(w));
        if (it == index_.end()) throw validation_error("weight " + w.str() + " not in the alcove");
        return it->second;
    }
    const Weight& weight(int i) const { return alcove_[static_cast<std::size_t>(i)]; }
    int dual_id(int i) const { return dual_[static_cast<std::size_t>(i)]; }

    /// Fusion product of two alcove weights as a dense coefficient
    /// vector over the alcove.
    const std::vector<Int>& fuse(int i, int j) {
        if (j < i) std::swap(i, j);
        std::size_t slot = static_cast<std::size_t>(i) * alcove_.size() + static_cast<std::size_t>(j);
        {
            std::lock_guard<std::mutex> lock(mtx_);
            if (products_[slot]) return *products_[slot];
        }
        auto vec = std::make_unique<std::vector<Int>>(alcove_.size(), Int(0));
        for (const auto& [nu, c] : lr_product(weight(i), weight(j), alg_.rank_plus_one)) {
            auto folded = detail::weyl_fold(nu, alg_);
            if (!folded) continue;
            (*vec)[static_cast<std::size_t>(id(folded->first))] += Int(folded->second) * c;
        }
        std::lock_guard<std::mutex> lock(mtx_);
        if (!products_[slot]) products_[slot] = std::move(vec);
        return *products_[slot];
    }

    /// Three-point rank rk V(lambda_i, lambda_j, lambda_l).
    Int threepoint(int i, int j, int l) { return fuse(i, j)[static_cast<std::size_t>(dual_id(l))]; }

    /// Fold a list of alcove weights into the fusion ring; entry [kappa]
    /// of the result is the rank of the bundle with the given insertions
    /// plus one extra insertion dual(kappa).
    std::vector<Int> fold(const std::vector<int>& ids) {
        std::vector<Int> state(alcove_.size(), Int(0));
        state[static_cast<std::size_t>(id(zero_weight(alg_.rank_plus_one)))] = 1;
        for (int j : ids) {
            std::vector<Int> next(alcove_.size(), Int(0));
            for (std::size_t a = 0; a < state.size(); ++a) {
                if (state[a] == 0) continue;
                const auto& prod = fuse(static_cast<int>(a), j);
                for (std::size_t b = 0; b < next.size(); ++b)
                    if (prod[b] != 0) next[b] += state[a] * prod[b];
            }
            state = std::move(next);
        }
        return state;
    }

    std::vector<int> ids_of(const WeightTuple& tuple) {
        std::vector<int> ids;
        ids.reserve(tuple.weights.size());
        for (const auto& w : tuple.weights) ids.push_back(id(w));
        return ids;
    }

    /// Materialize every pair product (and hence every 3-point rank).
    void build_all() {
        for (int i = 0; i < count(); ++i)
            for (int j = i; j < count(); ++j) fuse(i, j);
    }

    bool has_product(int i, int j) const {
        if (j < i) std::swap(i, j);
        return products_[static_cast<std::size_t>(i) * alcove_.size() + static_cast<std::size_t>(j)] !=
               nullptr;
    }

    /// Install a precomputed pair product (disk cache loading).
    void set_product(int i, int j, std::vector<Int> vec) {
        if (j < i) std::swap(i, j);
        if (vec.size() != alcove_.size()) throw validation_error("set_product: wrong vector size");
        std::size_t slot = static_cast<std::size_t>(i) * alcove_.size() + static_cast<std::size_t>(j);
        std::lock_guard<std::mutex> lock(mtx_);
        if (!products_[slot]) products_[slot] = std::make_unique<std::vector<Int>>(std::move(vec));
    }

private:
    LeveledAlgebra alg_;
    std::vector<Weight> alcove_;
    std::map<Weight, int> index_;
    std::vector<int> dual_;
    std::vector<std::unique_ptr<std::vector<Int>>> products_;
    std::mutex mtx_;
};

/// Process-wide table registry.
inline FusionTable& fusion_table(const LeveledAlgebra& alg) {
    static std::map<LeveledAlgebra, std::unique_ptr<FusionTable>> tables;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = tables[alg];
    if (!slot) slot = std::make_unique<FusionTable>(alg);
    return *slot;
}

/// Rank of V_{sl_k, lambda_vec, ell} by the iterated fusion product.
inline Int fusion_rank(const BundleSpec& spec) {
    auto& table = fusion_table(spec.algebra);
    auto state = table.fold(table.ids_of(normalize(spec.weights)));
    return state[static_cast<std::size_t>(table.id(zero_weight(spec.algebra.rank_plus_one)))];
}

/// Complete 3-point table as an explicit map on weight triples.
inline std::map<std::tuple<Weight, Weight, Weight>, Int> threepoint_table(const LeveledAlgebra& alg) {
    auto& table = fusion_table(alg);
    std::map<std::tuple<Weight, Weight, Weight>, Int> out;
    for (int i = 0; i < table.count(); ++i)
        for (int j = 0; j < table.count(); ++j)
            for (int l = 0; l < table.count(); ++l) {
                Int v = table.threepoint(i, j, l);
                if (v != 0) out[{table.weight(i), table.weight(j), table.weight(l)}] = v;
            }
    return out;
}

/// Rank through QH*(Gr(k, k+ell)).  The quantum product differs from
/// the fusion product by the level-ell simple current: a term of
/// q-degree d lands on the fusion class rotated d steps.  So fold the
/// box representatives with rim-hook reduction, recover d of each
/// surviving class from its charge deficit, and read the coefficient
/// over the classes whose d-fold rotation is the trivial one, namely
/// the rectangles (ell^m) with m = -d mod k.
inline Int rank_quantum(const BundleSpec& spec) {
    int k = spec.algebra.rank_plus_one;
    int ell = spec.algebra.level;
    int N = k + ell;
    WeightTuple tuple = normalize(spec.weights);

    long total = to_long(total_size(tuple));
    if (total % k != 0) return 0;

    std::map<Weight, Int> state{{zero_weight(k), Int(1)}};
    for (const auto& w : tuple.weights) {
        std::map<Weight, Int> next;
        for (const auto& [box, c] : state) {
            for (const auto& [nu, m] : lr_product(box, w, k)) {
                auto folded = detail::rimhook_fold(nu, spec.algebra);
                if (!folded) continue;
                const auto& [res, sign, hooks] = *folded;
                next[res] += c * m * sign;
            }
        }
        state = std::move(next);
    }

    Int rank = 0;
    for (const auto& [box, c] : state) {
        long deficit = total - to_long(size_of(box));
        if (deficit % N != 0) throw consistency_error("rank_quantum: charge bookkeeping broke");
        long d = deficit / N;
        int m = static_cast<int>(((k - d % k) % k + k) % k);
        std::vector<int> target(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < m; ++i) target[static_cast<std::size_t>(i)] = ell;
        if (normalize(box) == Weight(std::move(target))) rank += c;
    }
    if (rank < 0) throw consistency_error("rank_quantum: negative coefficient");
    return rank;
}

/// Factorization identity across a splitting of the marked points:
/// rk(lambda) = sum_mu rk(lambda_N, mu) rk(lambda_Nc, mu*).
inline bool factorization_check(const BundleSpec& spec, const std::vector<int>& split) {
    int n = spec.n();
    std::vector<bool> in_split(static_cast<std::size_t>(n), false);
    for (int p : split) {
        if (p < 1 || p > n) throw validation_error("factorization_check: point index out of range");
        in_split[static_cast<std::size_t>(p - 1)] = true;
    }
    std::size_t sz = split.size();
    if (sz < 2 || sz > static_cast<std::size_t>(n) - 2)
        throw validation_error("factorization_check: split must have between 2 and n-2 points");

    auto& table = fusion_table(spec.algebra);
    WeightTuple tuple = normalize(spec.weights);
    std::vector<int> side_a, side_b;
    for (int i = 0; i < n; ++i) {
        int wid = table.id(tuple.weights[static_cast<std::size_t>(i)]);
        (in_split[static_cast<std::size_t>(i)] ? side_a : side_b).push_back(wid);
    }
    auto va = table.fold(side_a);
    auto vb = table.fold(side_b);
    Int rhs = 0;
    for (std::size_t m = 0; m < va.size(); ++m)
        rhs += va[m] * vb[static_cast<std::size_t>(table.dual_id(static_cast<int>(m)))];
    return rhs == fusion_rank(spec);
}

} // namespace cbdiv
