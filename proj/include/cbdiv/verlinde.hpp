/*
  verlinde.hpp

  Genus-zero Verlinde sums for sl_k at level ell, as an oracle
  independent of the LR/folding machinery.

    rank = sum over mu in P_ell of  P_mu * prod_i chi_{lambda_i}(mu)

  where P_mu = S_{0 mu}^2 is computed from the Weyl denominator
  sin-product and fixed by unitarity (sum_mu P_mu = 1), and
  chi_lambda(mu) = S_{lambda mu} / S_{0 mu} is evaluated as a ratio of
  k x k exponential determinants at the shifted point (mu + rho)/L,
  with traceless row exponents so all normalization constants and
  charge phases cancel.

  Evaluation is long double complex; the result must land within 1e-6
  of a nonnegative integer or a precision_error is thrown.  The guard
  band never silently widens.
*/

#pragma once

#include "fusion.hpp"

#include <cmath>
#include <complex>

namespace cbdiv {

namespace detail {

using Cplx = std::complex<long double>;

inline Cplx det_small(std::vector<std::vector<Cplx>> m) {
    std::size_t n = m.size();
    Cplx result{1.0L, 0.0L};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (std::abs(m[pivot][col]) < 1e-30L) return Cplx{0.0L, 0.0L};
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            result = -result;
        }
        result *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            Cplx f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return result;
}

/// Character and measure tables over the alcove, built once per algebra.
struct VerlindeData {
    std::vector<long double> measure;             // P_mu, sums to 1
    std::vector<std::vector<Cplx>> chi;           // chi[lambda id][mu id]

    explicit VerlindeData(FusionTable& table) {
        const auto& alg = table.algebra();
        int k = alg.rank_plus_one;
        long double L = alg.level + k;
        int count = table.count();
        const long double pi = 3.141592653589793238462643383279502884L;

        std::vector<std::vector<long double>> y(static_cast<std::size_t>(count));
        for (int m = 0; m < count; ++m) {
            const Weight& mu = table.weight(m);
            auto& ym = y[static_cast<std::size_t>(m)];
            ym.resize(static_cast<std::size_t>(k));
            for (int a = 0; a < k; ++a) ym[static_cast<std::size_t>(a)] = mu.row(a) + (k - 1 - a);
        }

        measure.resize(static_cast<std::size_t>(count));
        long double total = 0.0L;
        for (int m = 0; m < count; ++m) {
            long double u = 1.0L;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    u *= 2.0L * std::sin(pi * (y[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)] -
                                               y[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)]) / L);
            measure[static_cast<std::size_t>(m)] = u * u;
            total += u * u;
        }
        for (auto& p : measure) p /= total;

        // traceless row exponents for each alcove weight (plus rho)
        auto traceless = [&](const Weight& lam) {
            std::vector<long double> x(static_cast<std::size_t>(k));
            long double mean = 0.0L;
            for (int a = 0; a < k; ++a) {
                x[static_cast<std::size_t>(a)] = lam.row(a) + (k - 1 - a);
                mean += x[static_cast<std::size_t>(a)];
            }
            mean /= k;
            for (auto& v : x) v -= mean;
            return x;
        };

        auto eval_det = [&](const std::vector<long double>& x, const std::vector<long double>& ym) {
            std::vector<std::vector<Cplx>> mat(static_cast<std::size_t>(k),
                                               std::vector<Cplx>(static_cast<std::size_t>(k)));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    mat[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                        std::polar(1.0L, -2.0L * pi * x[static_cast<std::size_t>(a)] *
                                             ym[static_cast<std::size_t>(b)] / L);
            return det_small(std::move(mat));
        };

        std::vector<long double> rho = traceless(zero_weight(k));
        chi.assign(static_cast<std::size_t>(count),
                   std::vector<Cplx>(static_cast<std::size_t>(count)));
        for (int l = 0; l < count; ++l) {
            std::vector<long double> x = traceless(table.weight(l));
            for (int m = 0; m < count; ++m) {
                Cplx denom = eval_det(rho, y[static_cast<std::size_t>(m)]);
                chi[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)] =
                    eval_det(x, y[static_cast<std::size_t>(m)]) / denom;
            }
        }
    }
};

inline VerlindeData& verlinde_data(const LeveledAlgebra& alg) {
    static std::map<LeveledAlgebra, std::unique_ptr<VerlindeData>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[alg];
    if (!slot) slot = std::make_unique<VerlindeData>(fusion_table(alg));
    return *slot;
}

} // namespace detail

/// Rank by the genus-zero Verlinde sum.  Guard band 1e-6.
inline Int rank_verlinde(const BundleSpec& spec) {
    auto& table = fusion_table(spec.algebra);
    auto& data = detail::verlinde_data(spec.algebra);
    auto ids = table.ids_of(normalize(spec.weights));

    detail::Cplx total{0.0L, 0.0L};
    for (int m = 0; m < table.count(); ++m) {
        detail::Cplx term{data.measure[static_cast<std::size_t>(m)], 0.0L};
        for (int l : ids)
            term *= data.chi[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
        total += term;
    }

    const long double guard = 1e-6L;
    if (std::abs(total.imag()) > guard)
        throw precision_error("rank_verlinde: imaginary residue exceeds guard band");
    long double rounded = std::round(total.real());
    if (std::abs(total.real() - rounded) > guard)
        throw precision_error("rank_verlinde: value not within guard band of an integer");
    if (rounded < -0.5L) throw precision_error("rank_verlinde: negative rank");
    return Int(static_cast<long long>(rounded));
}

} // namespace cbdiv
