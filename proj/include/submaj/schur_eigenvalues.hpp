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

#include <utility>

#include "submaj/matrix.hpp"

namespace submaj {
namespace detail {

// Unitary plane rotation [[c, s], [-conj(s), c]] (c real) mapping (f, g) to (r, 0).
struct Givens {
    double c = 1.0;
    cplx s{0.0, 0.0};
};

inline Givens make_givens(cplx f, cplx g) {
    if (g == cplx{}) return {1.0, 0.0};
    if (f == cplx{}) return {0.0, std::conj(g) / std::abs(g)};
    const double d = std::sqrt(std::norm(f) + std::norm(g));
    const double af = std::abs(f);
    const cplx phase = f / af;
    return {af / d, phase * std::conj(g) / d};
}

// Both eigenvalues of [[a11, a12], [a21, a22]], larger modulus first.
inline std::pair<cplx, cplx> eig2x2(cplx a11, cplx a12, cplx a21, cplx a22) {
    const cplx mid = 0.5 * (a11 + a22);
    const cplx det = a11 * a22 - a12 * a21;
    const cplx disc = std::sqrt(mid * mid - det);
    cplx l1 = mid + disc, l2 = mid - disc;
    if (std::abs(l2) > std::abs(l1)) std::swap(l1, l2);
    if (l1 != cplx{}) l2 = det / l1;  // dodge cancellation in the smaller root
    return {l1, l2};
}

inline void hessenberg_reduce(Matrix& h) {
    const std::size_t n = h.rows();
    if (n < 3) return;
    std::vector<cplx> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(h(i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;

        const cplx alpha = h(k + 1, k);
        const cplx phase = (alpha == cplx{}) ? cplx{1.0, 0.0} : alpha / std::abs(alpha);
        const cplx beta = -phase * xnorm;

        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = h(i, k);
            if (i == k + 1) v[i] -= beta;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) continue;
        const double inv = 1.0 / std::sqrt(vnorm2);
        for (std::size_t i = k + 1; i < n; ++i) v[i] *= inv;

        // rows: h <- (I - 2 v v^*) h
        for (std::size_t j = k; j < n; ++j) {
            cplx dot = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
            dot *= 2.0;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= dot * v[i];
        }
        // columns: h <- h (I - 2 v v^*)
        for (std::size_t i = 0; i < n; ++i) {
            cplx dot = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
            dot *= 2.0;
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= dot * std::conj(v[j]);
        }
        h(k + 1, k) = beta;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

inline cplx wilkinson_shift(const Matrix& h, std::size_t hi) {
    auto [l1, l2] = eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    return std::abs(l1 - h(hi, hi)) < std::abs(l2 - h(hi, hi)) ? l1 : l2;
}

}  // namespace detail

/// All eigenvalues (with algebraic multiplicity) of a general complex square
/// matrix: Householder reduction to Hessenberg form, then single-shift QR
/// with Wilkinson shifts and deflation. Returned in no particular order.
inline std::vector<cplx> eigenvalues(const Matrix& a) {
    require_square(a, "eigenvalues");
    require_finite(a, "eigenvalues");
    const std::size_t n = a.rows();
    if (n == 0) return {};
    if (n == 1) return {a(0, 0)};

    Matrix h = a;
    detail::hessenberg_reduce(h);

    std::vector<cplx> eigs(n);
    const double hnorm = h.frobenius_norm();
    const double eps = 2.3e-16;

    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
    int iters = 0;
    long total = 0;
    const long max_total = 80 * static_cast<long>(n) + 200;

    while (hi >= 0) {
        if (hi == 0) {
            eigs[0] = h(0, 0);
            break;
        }
        // smallest l with a negligible subdiagonal at (l, l-1)
        std::ptrdiff_t l = hi;
        while (l > 0) {
            double small = eps * (std::abs(h(l - 1, l - 1)) + std::abs(h(l, l)));
            if (small == 0.0) small = eps * hnorm;
            if (std::abs(h(l, l - 1)) <= small) {
                h(l, l - 1) = 0.0;
                break;
            }
            --l;
        }

        if (l == hi) {
            eigs[hi] = h(hi, hi);
            --hi;
            iters = 0;
            continue;
        }
        if (l == hi - 1) {
            auto [l1, l2] =
                detail::eig2x2(h(l, l), h(l, hi), h(hi, l), h(hi, hi));
            eigs[hi] = l1;
            eigs[hi - 1] = l2;
            hi -= 2;
            iters = 0;
            continue;
        }

        ++iters;
        if (++total > max_total)
            throw std::runtime_error("eigenvalues: QR iteration did not converge");

        cplx mu;
        if (iters % 12 == 0) {
            mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));  // exceptional shift
        } else {
            mu = detail::wilkinson_shift(h, hi);
        }

        for (std::ptrdiff_t i = l; i <= hi; ++i) h(i, i) -= mu;

        std::vector<detail::Givens> gs(hi - l);
        for (std::ptrdiff_t k = l; k < hi; ++k) {
            const auto g = detail::make_givens(h(k, k), h(k + 1, k));
            gs[k - l] = g;
            for (std::ptrdiff_t j = k; j <= hi; ++j) {
                const cplx f = h(k, j), w = h(k + 1, j);
                h(k, j) = g.c * f + g.s * w;
                h(k + 1, j) = -std::conj(g.s) * f + g.c * w;
            }
            h(k + 1, k) = 0.0;
        }
        for (std::ptrdiff_t k = l; k < hi; ++k) {
            const auto& g = gs[k - l];
            for (std::ptrdiff_t i = l; i <= hi; ++i) {
                const cplx f = h(i, k), w = h(i, k + 1);
                h(i, k) = g.c * f + std::conj(g.s) * w;
                h(i, k + 1) = -g.s * f + g.c * w;
            }
        }
        for (std::ptrdiff_t i = l; i <= hi; ++i) h(i, i) += mu;
    }
    return eigs;
}

}  // namespace submaj
