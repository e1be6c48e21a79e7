/*
  weight.hpp

  Type A weight arithmetic on Young diagrams.

  A weight of sl_{r+1} is stored as a weakly decreasing row vector of
  length r+1.  Two diagrams differing by a constant row give the same
  sl-weight; the normalized representative (last row zero) is canonical.
  The Killing form is computed in gl coordinates with the trace
  correction |lambda||mu|/(r+1), normalized so (theta,theta) = 2.
*/

#pragma once

#include "arith.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <sstream>
#include <vector>

namespace cbdiv {

struct LeveledAlgebra {
    int rank_plus_one = 2; // r+1
    int level = 1;         // ell

    LeveledAlgebra() = default;
    LeveledAlgebra(int k, int ell) : rank_plus_one(k), level(ell) {
        if (k < 2) throw validation_error("algebra rank r+1 must be >= 2");
        if (ell < 1) throw validation_error("level must be >= 1");
    }

    auto operator<=>(const LeveledAlgebra&) const = default;
};

struct Weight {
    std::vector<int> rows; // weakly decreasing, nonnegative

    Weight() = default;
    explicit Weight(std::vector<int> r) : rows(std::move(r)) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] < 0) throw validation_error("weight rows must be nonnegative");
            if (i + 1 < rows.size() && rows[i] < rows[i + 1])
                throw validation_error("weight rows must be weakly decreasing");
        }
    }

    int length() const { return static_cast<int>(rows.size()); }
    int row(int i) const { return rows[static_cast<std::size_t>(i)]; } // 0-based
    bool is_zero() const {
        return std::all_of(rows.begin(), rows.end(), [](int v) { return v == 0; });
    }

    auto operator<=>(const Weight&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) os << ',';
            os << rows[i];
        }
        os << ']';
        return os.str();
    }
};

/// Zero weight of sl_{r+1} (all rows zero).
inline Weight zero_weight(int rank_plus_one) {
    return Weight(std::vector<int>(static_cast<std::size_t>(rank_plus_one), 0));
}

/// Fundamental weight omega_a as the normalized diagram 1^a 0^(r+1-a).
inline Weight fundamental_weight(int rank_plus_one, int a) {
    if (a < 1 || a > rank_plus_one - 1)
        throw validation_error("fundamental weight index out of range");
    std::vector<int> rows(static_cast<std::size_t>(rank_plus_one), 0);
    for (int i = 0; i < a; ++i) rows[static_cast<std::size_t>(i)] = 1;
    return Weight(std::move(rows));
}

inline Weight add(const Weight& a, const Weight& b) {
    if (a.length() != b.length()) throw validation_error("weight length mismatch in add");
    std::vector<int> rows(a.rows);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] += b.rows[i];
    return Weight(std::move(rows));
}

inline Weight scale(const Weight& a, int n) {
    std::vector<int> rows(a.rows);
    for (auto& v : rows) v *= n;
    return Weight(std::move(rows));
}

/// lambda - lambda^(r+1) * (1,...,1); canonical representative of the
/// sl-weight.
inline Weight normalize(const Weight& lam) {
    if (lam.rows.empty()) throw validation_error("empty weight");
    int last = lam.rows.back();
    std::vector<int> rows(lam.rows);
    for (auto& v : rows) v -= last;
    return Weight(std::move(rows));
}

inline bool is_normalized(const Weight& lam) {
    return !lam.rows.empty() && lam.rows.back() == 0;
}

/// Total number of boxes of the diagram (all rows).
inline Int size_of(const Weight& lam) {
    long s = 0;
    for (int v : lam.rows) s += v;
    return Int(s);
}

/// lambda(H_theta) = lambda^(1) - lambda^(r+1); pairing with the
/// co-root of the highest root, in type A.
inline int theta_pairing(const Weight& lam) {
    if (lam.rows.empty()) throw validation_error("empty weight");
    return lam.rows.front() - lam.rows.back();
}

/// Membership in the level-ell alcove P_ell(sl_{r+1}).
inline bool is_admissible(const Weight& lam, const LeveledAlgebra& alg) {
    if (lam.length() != alg.rank_plus_one)
        throw validation_error("weight length does not match algebra rank");
    return theta_pairing(lam) <= alg.level;
}

/// Highest weight of the dual representation: lambda*^(a) =
/// lambda^(1) - lambda^(r+2-a).  Involution on normalized weights.
inline Weight dual(const Weight& lam_in) {
    Weight lam = normalize(lam_in);
    int k = lam.length();
    std::vector<int> rows(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a)
        rows[static_cast<std::size_t>(a)] = lam.row(0) - lam.row(k - 1 - a);
    return Weight(std::move(rows));
}

/// Conjugate diagram, emitted with r rows swapped for ell columns:
/// a normalized weight of P_ell(sl_{r+1}) becomes one of P_r(sl_{ell+1}).
inline Weight transpose(const Weight& lam_in, const LeveledAlgebra& alg) {
    Weight lam = normalize(lam_in);
    if (!is_admissible(lam, alg))
        throw validation_error("transpose: weight does not fit the r x ell box");
    std::vector<int> rows(static_cast<std::size_t>(alg.level + 1), 0);
    for (int j = 1; j <= alg.level; ++j) {
        int count = 0;
        for (int v : lam.rows)
            if (v >= j) ++count;
        rows[static_cast<std::size_t>(j - 1)] = count;
    }
    return Weight(std::move(rows));
}

/// Casimir scalar (lambda, lambda + 2 rho), exact.
inline Rat casimir(const Weight& lam_in, const LeveledAlgebra& alg) {
    Weight lam = normalize(lam_in);
    if (lam.length() != alg.rank_plus_one)
        throw validation_error("casimir: weight length does not match algebra rank");
    int k = alg.rank_plus_one;
    Int sq = 0, lin = 0, sz = size_of(lam);
    for (int i = 1; i <= k; ++i) {
        Int v = lam.row(i - 1);
        sq += v * v;
        lin += v * (k + 1 - 2 * i);
    }
    return Rat(sq + lin) - Rat(sz * sz, k);
}

/// Trace anomaly h_lambda = c(lambda) / (2(ell + r + 1)).
inline Rat conformal_weight(const Weight& lam_in, const LeveledAlgebra& alg) {
    Weight lam = normalize(lam_in);
    if (!is_admissible(lam, alg))
        throw validation_error("conformal_weight: weight not admissible at this level");
    return casimir(lam, alg) / Rat(2 * (alg.level + alg.rank_plus_one));
}

/// All normalized weights in the r x ell box, lexicographically.
/// Count is binomial(r + ell, r).
inline std::vector<Weight> enumerate_alcove(const LeveledAlgebra& alg) {
    int r = alg.rank_plus_one - 1;
    std::vector<Weight> out;
    std::vector<int> rows(static_cast<std::size_t>(alg.rank_plus_one), 0);
    std::function<void(int, int)> rec = [&](int i, int cap) {
        if (i == r) {
            out.push_back(Weight(rows));
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            rows[static_cast<std::size_t>(i)] = v;
            rec(i + 1, v);
        }
        rows[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, alg.level);
    std::sort(out.begin(), out.end());
    return out;
}

struct WeightTuple {
    int rank_plus_one = 2;
    std::vector<Weight> weights;

    WeightTuple() = default;
    WeightTuple(int k, std::vector<Weight> ws) : rank_plus_one(k), weights(std::move(ws)) {
        for (const auto& w : weights)
            if (w.length() != k)
                throw validation_error("tuple weight length does not match algebra rank");
    }

    int n() const { return static_cast<int>(weights.size()); }
    auto operator<=>(const WeightTuple&) const = default;
};

inline WeightTuple normalize(const WeightTuple& t) {
    std::vector<Weight> ws;
    ws.reserve(t.weights.size());
    for (const auto& w : t.weights) ws.push_back(normalize(w));
    return WeightTuple(t.rank_plus_one, std::move(ws));
}

inline WeightTuple dualize(const WeightTuple& t) {
    std::vector<Weight> ws;
    ws.reserve(t.weights.size());
    for (const auto& w : t.weights) ws.push_back(dual(w));
    return WeightTuple(t.rank_plus_one, std::move(ws));
}

inline Int total_size(const WeightTuple& t) {
    Int s = 0;
    for (const auto& w : t.weights) s += size_of(w);
    return s;
}

inline bool all_equal_weights(const WeightTuple& t) {
    for (const auto& w : t.weights)
        if (normalize(w) != normalize(t.weights.front())) return false;
    return true;
}

/// A conformal blocks bundle V_{sl_{r+1}, lambda_vec, ell} is identified
/// by its algebra, level, and ordered weight tuple.
struct BundleSpec {
    LeveledAlgebra algebra;
    WeightTuple weights;

    BundleSpec() = default;
    BundleSpec(LeveledAlgebra alg, WeightTuple t) : algebra(alg), weights(std::move(t)) {
        if (weights.rank_plus_one != alg.rank_plus_one)
            throw validation_error("tuple rank does not match algebra");
        for (const auto& w : weights.weights)
            if (!is_admissible(normalize(w), alg))
                throw validation_error("weight " + w.str() + " not admissible at level " +
                                       std::to_string(alg.level));
    }

    int n() const { return weights.n(); }
    auto operator<=>(const BundleSpec&) const = default;
};

inline BundleSpec make_spec(int rank_plus_one, int level, std::vector<Weight> ws) {
    return BundleSpec(LeveledAlgebra(rank_plus_one, level),
                      WeightTuple(rank_plus_one, std::move(ws)));
}

} // namespace cbdiv
