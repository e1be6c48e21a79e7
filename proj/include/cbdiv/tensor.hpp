/*
  tensor.hpp

  Classical invariant theory for gl_k / sl_k:

    - Littlewood-Richardson expansion of s_lambda * s_mu over diagrams
      with at most k rows, by direct enumeration of LR fillings.  Labels
      t = 1..len(mu) are placed as horizontal strips top to bottom; the
      ballot condition is enforced through the cumulative-count
      inequality  #{t in rows <= i}  <=  #{t-1 in rows <= i-1}.
    - n-point coinvariant dimensions, as the multiplicity of the
      determinant-power diagram in the iterated product.
    - Weyl dimensions by hook content.

  Products are tracked as gl-diagrams; sl-identification (row
  subtraction) happens only at comparison points.
*/

#pragma once

#include "weight.hpp"

#include <map>
#include <mutex>

namespace cbdiv {

namespace detail {

/// Enumerate LR fillings of mu's rows onto lambda, at most k rows.
/// Calls out(nu) once per filling.  Each label gets its own snapshot of
/// the shape and its own cumulative counters; `shape` itself is shared
/// and restored on backtracking.
template <class F>
void lr_expand(const std::vector<int>& lambda, const std::vector<int>& mu, int k, F&& out) {
    std::vector<int> shape(lambda);
    shape.resize(static_cast<std::size_t>(k), 0);
    std::size_t nlabels = mu.size();

    std::function<void(std::size_t, const std::vector<int>&)> place_label;
    std::function<void(std::size_t, std::size_t, int, const std::vector<int>&,
                       const std::vector<int>&, std::vector<int>&)>
        place_row;

    // Place label t as a horizontal strip: choose m boxes in row i
    // (top to bottom), subject to shape, strip and ballot constraints.
    place_row = [&](std::size_t label, std::size_t i, int remaining, const std::vector<int>& before,
                    const std::vector<int>& prev_cum, std::vector<int>& cur_cum) {
        if (i == static_cast<std::size_t>(k)) {
            if (remaining == 0) place_label(label + 1, cur_cum);
            return;
        }
        int max_add = remaining;
        // keep weakly decreasing rows
        if (i > 0) max_add = std::min(max_add, shape[i - 1] - shape[i]);
        // horizontal strip relative to the shape before this label
        if (i > 0) max_add = std::min(max_add, before[i - 1] - shape[i]);
        // rows above the label index stay closed via the ballot condition
        if (label > 0 && i == 0) max_add = 0;
        for (int m = 0; m <= max_add; ++m) {
            // ballot: t's in rows <= i+1 cannot exceed (t-1)'s in rows <= i
            cur_cum[i + 1] = cur_cum[i] + m;
            if (label > 0 && cur_cum[i + 1] > prev_cum[i]) break;
            shape[i] += m;
            place_row(label, i + 1, remaining - m, before, prev_cum, cur_cum);
            shape[i] -= m;
        }
    };

    place_label = [&](std::size_t label, const std::vector<int>& prev_cum) {
        if (label == nlabels) {
            out(shape);
            return;
        }
        std::vector<int> before(shape);
        std::vector<int> cur_cum(static_cast<std::size_t>(k) + 1, 0);
        place_row(label, 0, mu[label], before, prev_cum, cur_cum);
    };

    std::vector<int> empty_cum(static_cast<std::size_t>(k) + 1, 0);
    place_label(0, empty_cum);
}

inline std::vector<int> trimmed_rows(const Weight& w) {
    std::vector<int> rows(w.rows);
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return rows;
}

} // namespace detail

/// s_lambda * s_mu over gl_k diagrams (at most k rows).  Inputs are
/// taken as literal diagrams; memoized.
inline const std::map<Weight, Int>& lr_product(const Weight& lambda, const Weight& mu, int k) {
    using Key = std::tuple<std::vector<int>, std::vector<int>, int>;
    static std::map<Key, std::map<Weight, Int>> memo;
    static std::mutex mtx;

    std::vector<int> lrows = detail::trimmed_rows(lambda);
    std::vector<int> mrows = detail::trimmed_rows(mu);
    if (static_cast<int>(lrows.size()) > k || static_cast<int>(mrows.size()) > k)
        throw validation_error("lr_product: diagram has more rows than the algebra allows");
    // fewer fillings when the shorter diagram supplies the strips
    Int lsz = 0, msz = 0;
    for (int v : lrows) lsz += v;
    for (int v : mrows) msz += v;
    if (msz > lsz) std::swap(lrows, mrows);

    Key key{lrows, mrows, k};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    std::map<Weight, Int> result;
    detail::lr_expand(lrows, mrows, k, [&](const std::vector<int>& nu) {
        std::vector<int> rows(nu);
        rows.resize(static_cast<std::size_t>(k), 0);
        result[Weight(std::move(rows))] += 1;
    });

    std::lock_guard<std::mutex> lock(mtx);
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

/// Littlewood-Richardson coefficient c^nu_{lambda,mu} for gl-diagrams
/// of a common length.
inline Int lr_coefficient(const Weight& lambda, const Weight& mu, const Weight& nu) {
    int k = std::max({lambda.length(), mu.length(), nu.length()});
    if (size_of(lambda) + size_of(mu) != size_of(nu)) return 0;
    const auto& expansion = lr_product(lambda, mu, k);
    std::vector<int> rows = detail::trimmed_rows(nu);
    rows.resize(static_cast<std::size_t>(k), 0);
    auto it = expansion.find(Weight(std::move(rows)));
    return it == expansion.end() ? Int(0) : it->second;
}

/// dim of the sl-coinvariants of the tensor product: the multiplicity
/// of the determinant power (d,...,d), d = total size / k.  Zero when
/// k does not divide the total size.
inline Int coinvariant_dim(const WeightTuple& tuple_in) {
    if (tuple_in.n() < 1) throw validation_error("coinvariant_dim: empty tuple");
    WeightTuple tuple = normalize(tuple_in);
    int k = tuple.rank_plus_one;
    Int total = total_size(tuple);
    if (total % k != 0) return 0;
    Int d = total / k;

    std::map<Weight, Int> state{{tuple.weights[0], Int(1)}};
    for (int i = 1; i < tuple.n(); ++i) {
        std::map<Weight, Int> next;
        for (const auto& [w, c] : state)
            for (const auto& [nu, m] : lr_product(w, tuple.weights[static_cast<std::size_t>(i)], k))
                next[nu] += c * m;
        state = std::move(next);
    }
    std::vector<int> rect(static_cast<std::size_t>(k), static_cast<int>(to_long(d)));
    auto it = state.find(Weight(std::move(rect)));
    return it == state.end() ? Int(0) : it->second;
}

/// dim V_lambda for sl_k by the hook content formula.
inline Int weyl_dim(const Weight& lambda_in, const LeveledAlgebra& alg) {
    Weight lam = normalize(lambda_in);
    if (lam.length() != alg.rank_plus_one)
        throw validation_error("weyl_dim: weight length does not match algebra rank");
    int k = alg.rank_plus_one;
    std::vector<int> rows = detail::trimmed_rows(lam);
    // column lengths for leg computation
    std::vector<int> cols;
    if (!rows.empty()) {
        cols.resize(static_cast<std::size_t>(rows[0]), 0);
        for (int v : rows)
            for (int j = 0; j < v; ++j) ++cols[static_cast<std::size_t>(j)];
    }
    Int num = 1, den = 1;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j) {
            int arm = rows[i] - j - 1;
            int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            num *= k + j - static_cast<int>(i);
            den *= arm + leg + 1;
        }
    return exact_div(num, den);
}

} // namespace cbdiv
