// Copyright 2026 the submaj authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <numeric>

#include "submaj/hermitian_eig.hpp"
#include "submaj/matrix.hpp"

namespace submaj {

/// Thin SVD: a = u * diag(singular_values) * v^*, with u (rows x k) and
/// v (cols x k) isometries, k = min(rows, cols), values sorted non-increasing.
struct SvdResult {
    Matrix u;
    std::vector<double> singular_values;
    Matrix v;
};

/// Singular values below kSvdRankRtol * s_max are reported as computed but
/// treated as zero by rank queries (stable support projections).
inline constexpr double kSvdRankRtol = 1e-13;

inline double rank_threshold(const std::vector<double>& singular_values) {
    double smax = singular_values.empty() ? 0.0 : singular_values.front();
    return kSvdRankRtol * smax;
}

namespace detail {

// Orthonormal completion: replace column `col` of u by a unit vector
// orthogonal to all columns in `keep`.
inline void complete_column(Matrix& u, std::size_t col, const std::vector<std::size_t>& keep) {
    const std::size_t m = u.rows();
    std::size_t best_k = 0;
    double best_norm = -1.0;
    std::vector<cplx> best(m), cand(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::fill(cand.begin(), cand.end(), cplx{});
        cand[k] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j : keep) {
                cplx dot = 0.0;
                for (std::size_t i = 0; i < m; ++i) dot += std::conj(u(i, j)) * cand[i];
                for (std::size_t i = 0; i < m; ++i) cand[i] -= dot * u(i, j);
            }
        }
        double nn = 0.0;
        for (const cplx& z : cand) nn += std::norm(z);
        nn = std::sqrt(nn);
        if (nn > best_norm) {
            best_norm = nn;
            best_k = k;
            best = cand;
        }
        if (nn > 0.9) break;  // clearly independent, no need to scan further
    }
    (void)best_k;
    for (std::size_t i = 0; i < m; ++i) u(i, col) = best[i] / best_norm;
}

}  // namespace detail

/// One-sided Jacobi SVD. Works on columns directly (no Gram matrix is formed),
/// which keeps small singular values at high relative accuracy.
inline SvdResult svd(const Matrix& a) {
    require_finite(a, "svd");

    if (a.rows() < a.cols()) {
        SvdResult t = svd(a.adjoint());
        return SvdResult{std::move(t.v), std::move(t.singular_values), std::move(t.u)};
    }

    const std::size_t m = a.rows(), n = a.cols();
    Matrix w = a;
    Matrix v = Matrix::identity(n);

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0;
                cplx gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += std::norm(w(i, p));
                    beta += std::norm(w(i, q));
                    gamma += std::conj(w(i, p)) * w(i, q);
                }
                if (alpha == 0.0 || beta == 0.0) continue;
                if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
                const auto rot = detail::make_jacobi_rotation(alpha, beta, gamma);
                detail::apply_rotation_columns(w, p, q, rot);
                detail::apply_rotation_columns(v, p, q, rot);
                rotated = true;
            }
        }
        if (!rotated) break;
    }

    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j) {
        double nn = 0.0;
        for (std::size_t i = 0; i < m; ++i) nn += std::norm(w(i, j));
        s[j] = std::sqrt(nn);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&s](std::size_t i, std::size_t j) { return s[i] > s[j]; });

    SvdResult res;
    res.singular_values.resize(n);
    res.u = Matrix(m, n);
    res.v = Matrix(n, n);
    const double smax = n == 0 ? 0.0 : s[order[0]];
    const double norm_eps = smax * static_cast<double>(m) * 1e-16;

    std::vector<std::size_t> normalized;
    std::vector<std::size_t> to_complete;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        res.singular_values[k] = s[j];
        for (std::size_t i = 0; i < n; ++i) res.v(i, k) = v(i, j);
        if (s[j] > norm_eps && s[j] > 0.0) {
            for (std::size_t i = 0; i < m; ++i) res.u(i, k) = w(i, j) / s[j];
            normalized.push_back(k);
        } else {
            to_complete.push_back(k);
        }
    }
    for (std::size_t k : to_complete) {
        detail::complete_column(res.u, k, normalized);
        normalized.push_back(k);
    }
    return res;
}

inline std::vector<double> singular_values(const Matrix& a) { return svd(a).singular_values; }

inline double operator_norm(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    auto s = singular_values(a);
    return s.empty() ? 0.0 : s.front();
}

inline std::size_t rank_of(const SvdResult& s) {
    const double thr = rank_threshold(s.singular_values);
    std::size_t r = 0;
    for (double x : s.singular_values)
        if (x > thr && x > 0.0) ++r;
    return r;
}

inline std::size_t rank_of(const Matrix& a) { return rank_of(svd(a)); }

/// Polar decomposition a = u * |a| with |a| = (a^* a)^{1/2} PSD and u a
/// partial isometry whose initial space is the support of |a|.
struct PolarResult {
    Matrix partial_isometry;
    Matrix modulus;
};

inline PolarResult polar(const Matrix& a) {
    require_square(a, "polar");
    require_finite(a, "polar");
    const std::size_t n = a.rows();
    SvdResult s = svd(a);
    const double thr = rank_threshold(s.singular_values);

    Matrix modulus(n, n);
    Matrix u(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx ms = 0.0, us = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const cplx vjk = std::conj(s.v(j, k));
                ms += s.v(i, k) * s.singular_values[k] * vjk;
                if (s.singular_values[k] > thr) us += s.u(i, k) * vjk;
            }
            modulus(i, j) = ms;
            u(i, j) = us;
        }
    return PolarResult{std::move(u), hermitian_part(modulus)};
}

}  // namespace submaj
