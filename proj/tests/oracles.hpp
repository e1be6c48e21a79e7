/*
  oracles.hpp (test-only)

  Independent reference computations the unit tests check the library
  against.  Nothing here shares code paths with the implementation:

    - characters as weight-multiplicity maps built from semistandard
      tableaux, multiplied by convolution and decomposed greedily by
      highest weight;
    - the Casimir scalar from the inverse Cartan matrix of type A;
    - the closed-form three-point rule for sl_2;
    - walk counting on the level alcove for sl_2 one-row tuples.
*/

#pragma once

#include "cbdiv/weight.hpp"

#include <map>
#include <vector>

namespace oracle {

using cbdiv::Int;
using cbdiv::Rat;
using cbdiv::Weight;

using GlWeight = std::vector<int>;
using CharMap = std::map<GlWeight, Int>;

/// Character of the gl_k irreducible with diagram lambda, by
/// enumerating semistandard tableaux with entries in 1..k.
inline CharMap character(const Weight& lambda, int k) {
    std::vector<int> rows(lambda.rows);
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    CharMap out;
    if (rows.empty()) {
        out[GlWeight(static_cast<std::size_t>(k), 0)] = 1;
        return out;
    }
    std::vector<std::vector<int>> fill(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) fill[i].assign(static_cast<std::size_t>(rows[i]), 0);

    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
        if (r == rows.size()) {
            GlWeight w(static_cast<std::size_t>(k), 0);
            for (const auto& row : fill)
                for (int e : row) ++w[static_cast<std::size_t>(e - 1)];
            out[w] += 1;
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == fill[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);                      // rows weakly increase
        if (r > 0 && c < fill[r - 1].size()) lo = std::max(lo, fill[r - 1][c] + 1); // columns strict
        for (int e = lo; e <= k; ++e) {
            fill[r][c] = e;
            rec(nr, nc);
        }
    };
    rec(0, 0);
    return out;
}

inline CharMap multiply(const CharMap& a, const CharMap& b) {
    CharMap out;
    for (const auto& [wa, ma] : a)
        for (const auto& [wb, mb] : b) {
            GlWeight w(wa);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
            out[w] += ma * mb;
        }
    return out;
}

/// Greedy decomposition of a character into irreducibles: repeatedly
/// strip the character of the lexicographically greatest dominant
/// weight present.  Returns diagram -> multiplicity.
inline std::map<Weight, Int> decompose(CharMap chi, int k) {
    std::map<Weight, Int> out;
    for (;;) {
        const GlWeight* top = nullptr;
        for (auto it = chi.rbegin(); it != chi.rend(); ++it) {
            if (it->second == 0) continue;
            bool dominant = true;
            for (std::size_t i = 0; i + 1 < it->first.size(); ++i)
                if (it->first[i] < it->first[i + 1]) dominant = false;
            if (!dominant) throw std::logic_error("oracle decompose: top weight not dominant");
            top = &it->first;
            break;
        }
        if (!top) return out;
        std::vector<int> rows(*top);
        Weight lambda{rows};
        Int mult = chi[*top];
        if (mult < 0) throw std::logic_error("oracle decompose: negative multiplicity");
        out[lambda] = mult;
        CharMap piece = character(lambda, k);
        for (const auto& [w, m] : piece) {
            chi[w] -= mult * m;
            if (chi[w] == 0) chi.erase(w);
        }
    }
}

/// Tensor multiplicities via character arithmetic.
inline std::map<Weight, Int> tensor_decompose(const Weight& a, const Weight& b, int k) {
    return decompose(multiply(character(a, k), character(b, k)), k);
}

/// Multiplicity of the trivial sl_k representation in a tensor product
/// of diagrams: the determinant-power multiplicity of the decomposition.
inline Int invariant_dim(const std::vector<Weight>& ws, int k) {
    CharMap chi = character(ws.at(0), k);
    long total = 0;
    for (const auto& w : ws)
        for (int v : w.rows) total += v;
    for (std::size_t i = 1; i < ws.size(); ++i) chi = multiply(chi, character(ws[i], k));
    if (total % k != 0) return 0;
    std::vector<int> rect(static_cast<std::size_t>(k), static_cast<int>(total / static_cast<long>(k)));
    auto dec = decompose(std::move(chi), k);
    auto it = dec.find(Weight{rect});
    return it == dec.end() ? Int(0) : it->second;
}

/// dim V_lambda as the total weight multiplicity of the character.
inline Int dimension(const Weight& lambda, int k) {
    Int total = 0;
    for (const auto& [w, m] : character(lambda, k)) total += m;
    return total;
}

/// Casimir scalar from the inverse Cartan matrix of A_r:
/// (w_i, w_j) = min(i,j) - i*j/(r+1).
inline Rat casimir_from_cartan(const Weight& lambda, int r) {
    Weight lam = cbdiv::normalize(lambda);
    std::vector<long> labels;
    for (int i = 0; i + 1 < lam.length(); ++i) labels.push_back(lam.row(i) - lam.row(i + 1));
    auto g = [&](int i, int j) {
        return Rat(std::min(i, j)) - Rat(static_cast<long>(i) * j, r + 1);
    };
    Rat out = 0;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            out += Rat(labels[static_cast<std::size_t>(i - 1)]) *
                   Rat(labels[static_cast<std::size_t>(j - 1)]) * g(i, j);
            // 2 (lambda, rho) = 2 sum_i a_i (w_i, w_j summed over j)
        }
    for (int i = 1; i <= r; ++i) {
        Rat row = 0;
        for (int j = 1; j <= r; ++j) row += g(i, j);
        out += 2 * Rat(labels[static_cast<std::size_t>(i - 1)]) * row;
    }
    return out;
}

/// Closed-form sl_2 three-point rule at level ell (one-row sizes).
inline bool sl2_threepoint(int a, int b, int c, int ell) {
    return (a + b + c) % 2 == 0 && a + b >= c && a + c >= b && b + c >= a && a + b + c <= 2 * ell;
}

/// n-point sl_2 rank of one-row tuples by walk counting on {0..ell}.
inline Int sl2_walk_rank(const std::vector<int>& sizes, int ell) {
    std::vector<Int> state(static_cast<std::size_t>(ell) + 1, Int(0));
    state[0] = 1;
    for (int step : sizes) {
        std::vector<Int> next(state.size(), Int(0));
        for (int a = 0; a <= ell; ++a) {
            if (state[static_cast<std::size_t>(a)] == 0) continue;
            for (int b = 0; b <= ell; ++b)
                if (sl2_threepoint(a, step, b, ell))
                    next[static_cast<std::size_t>(b)] += state[static_cast<std::size_t>(a)];
        }
        state = std::move(next);
    }
    return state[0];
}

} // namespace oracle
