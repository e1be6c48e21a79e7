/*
  fcurve.hpp

  F-curves on the moduli of stable n-pointed rational curves: ordered
  set partitions of {1,...,n} into four nonempty blocks, stored in a
  canonical form (each block sorted, blocks ordered by least element).
  The numerical class only depends on the unordered partition.

  boundary_pairing implements the standard rule for delta_I . F:
  +1 when I or its complement is a union of two blocks, -1 when it is
  a single block, 0 otherwise.
*/

#pragma once

#include "arith.hpp"

#include <array>
#include <functional>
#include <set>
#include <vector>

namespace cbdiv {

struct FCurve {
    int n = 4;
    std::array<std::vector<int>, 4> blocks; // canonical: sorted, ordered by minimum

    FCurve() = default;
    FCurve(int n_, std::array<std::vector<int>, 4> bl) : n(n_), blocks(std::move(bl)) {
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        int covered = 0;
        for (auto& b : blocks) {
            if (b.empty()) throw validation_error("F-curve blocks must be nonempty");
            std::sort(b.begin(), b.end());
            for (int p : b) {
                if (p < 1 || p > n || seen[static_cast<std::size_t>(p)])
                    throw validation_error("F-curve blocks must partition {1,...,n}");
                seen[static_cast<std::size_t>(p)] = true;
                ++covered;
            }
        }
        if (covered != n) throw validation_error("F-curve blocks must cover {1,...,n}");
        std::sort(blocks.begin(), blocks.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    }

    std::array<int, 4> block_sizes() const {
        std::array<int, 4> s{};
        for (int i = 0; i < 4; ++i) s[static_cast<std::size_t>(i)] =
            static_cast<int>(blocks[static_cast<std::size_t>(i)].size());
        std::sort(s.begin(), s.end());
        return s;
    }

    auto operator<=>(const FCurve&) const = default;

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < 4; ++i) {
            if (i) out += '|';
            for (std::size_t j = 0; j < blocks[i].size(); ++j) {
                if (j) out += ',';
                out += std::to_string(blocks[i][j]);
            }
        }
        return out;
    }
};

/// Representative curve with consecutive blocks of the given sizes.
inline FCurve fcurve_from_sizes(int n, std::array<int, 4> sizes) {
    std::sort(sizes.begin(), sizes.end());
    if (sizes[0] < 1 || sizes[0] + sizes[1] + sizes[2] + sizes[3] != n)
        throw validation_error("block sizes must be positive and sum to n");
    std::array<std::vector<int>, 4> blocks;
    int next = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < sizes[static_cast<std::size_t>(i)]; ++j)
            blocks[static_cast<std::size_t>(i)].push_back(next++);
    return FCurve(n, std::move(blocks));
}

/// All block-size classes: multisets n1 <= n2 <= n3 <= n4 summing to n.
inline std::vector<std::array<int, 4>> block_size_classes(int n) {
    std::vector<std::array<int, 4>> out;
    for (int a = 1; 4 * a <= n; ++a)
        for (int b = a; a + 3 * b <= n; ++b)
            for (int c = b; a + b + 2 * c <= n; ++c) {
                int d = n - a - b - c;
                if (d >= c) out.push_back({a, b, c, d});
            }
    return out;
}

/// Every unordered set partition of {1,...,n} into four nonempty blocks.
inline std::vector<FCurve> all_fcurves(int n) {
    if (n < 4) throw validation_error("F-curves need n >= 4");
    std::vector<FCurve> out;
    std::array<std::vector<int>, 4> blocks;
    int used = 0;
    std::function<void(int)> rec = [&](int p) {
        if (p > n) {
            if (used == 4) out.push_back(FCurve(n, blocks));
            return;
        }
        int remaining = n - p + 1;
        for (int b = 0; b < 4; ++b) {
            bool fresh = blocks[static_cast<std::size_t>(b)].empty();
            // point 1 pins block 0; each later point may open at most the
            // first unused block, killing permutations of empty blocks
            if (fresh && b > used) break;
            if (fresh && remaining < 4 - used) return;
            blocks[static_cast<std::size_t>(b)].push_back(p);
            if (fresh) ++used;
            rec(p + 1);
            blocks[static_cast<std::size_t>(b)].pop_back();
            if (fresh) --used;
        }
    };
    rec(1);
    return out;
}

/// delta_I . F for a boundary divisor index I (2 <= |I| <= n-2).
inline int boundary_pairing(const std::vector<int>& I, const FCurve& F) {
    std::size_t isz = I.size();
    if (isz < 2 || isz > static_cast<std::size_t>(F.n) - 2)
        throw validation_error("boundary index must have between 2 and n-2 points");
    std::set<int> iset(I.begin(), I.end());
    if (iset.size() != isz) throw validation_error("boundary index has repeated points");
    for (int p : iset)
        if (p < 1 || p > F.n) throw validation_error("boundary index point out of range");

    // which blocks lie inside I; a block meeting both I and its
    // complement makes the pairing zero
    int inside = 0, inside_count = 0;
    for (int b = 0; b < 4; ++b) {
        const auto& block = F.blocks[static_cast<std::size_t>(b)];
        std::size_t hits = 0;
        for (int p : block)
            if (iset.count(p)) ++hits;
        if (hits == block.size()) {
            ++inside;
            inside_count += static_cast<int>(block.size());
        } else if (hits != 0) {
            return 0;
        }
    }
    if (inside == 1 || inside == 3) return -1;           // I or I^c is a single block
    if (inside == 2) return 1;                           // I and I^c are unions of two blocks
    return 0;
}

/// B_j . F summed over all size-j subsets of {1,...,n}; for a curve
/// with block sizes s this is
///   #{pairs a<b : s_a + s_b = j} - #{a : s_a = j} - #{a : s_a = n-j}.
inline int boundary_sum_pairing(int j, const FCurve& F) {
    int n = F.n;
    if (j < 2 || j > n - 2) throw validation_error("B_j needs 2 <= j <= n-2");
    std::array<int, 4> s{};
    for (int b = 0; b < 4; ++b)
        s[static_cast<std::size_t>(b)] = static_cast<int>(F.blocks[static_cast<std::size_t>(b)].size());
    int value = 0;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b)
            if (s[static_cast<std::size_t>(a)] + s[static_cast<std::size_t>(b)] == j) ++value;
        if (s[static_cast<std::size_t>(a)] == j) --value;
        if (s[static_cast<std::size_t>(a)] == n - j) --value;
    }
    return value;
}

} // namespace cbdiv
