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

#include "submaj/matrix.hpp"

namespace submaj {

/// Eigendecomposition of a Hermitian matrix: a = vectors * diag(eigenvalues) * vectors^*.
/// Eigenvalues are real and sorted ascending; eigenvector columns are orthonormal.
struct EigResult {
    std::vector<double> eigenvalues;
    Matrix vectors;
};

namespace detail {

// Unitary 2x2 rotation J (c real, zeta = unit phase) diagonalizing the
// Hermitian block [[app, apq], [conj(apq), aqq]] via J^* M J.
//
//   J = [[ c,            s         ],
//        [-s*conj(zeta), c*conj(zeta)]]
struct JacobiRotation {
    double c = 1.0;
    double s = 0.0;
    cplx zeta{1.0, 0.0};  // apq / |apq|
};

inline JacobiRotation make_jacobi_rotation(double app, double aqq, cplx apq) {
    JacobiRotation rot;
    const double r = std::abs(apq);
    if (r == 0.0) return rot;
    rot.zeta = apq / r;
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    rot.c = 1.0 / std::sqrt(1.0 + t * t);
    rot.s = t * rot.c;
    return rot;
}

// m <- m * J on columns (p, q).
inline void apply_rotation_columns(Matrix& m, std::size_t p, std::size_t q,
                                   const JacobiRotation& rot) {
    const cplx zc = std::conj(rot.zeta);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const cplx mp = m(i, p), mq = m(i, q);
        m(i, p) = rot.c * mp - rot.s * zc * mq;
        m(i, q) = rot.s * mp + rot.c * zc * mq;
    }
}

// m <- J^* m on rows (p, q).
inline void apply_rotation_rows(Matrix& m, std::size_t p, std::size_t q,
                                const JacobiRotation& rot) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const cplx mp = m(p, j), mq = m(q, j);
        m(p, j) = rot.c * mp - rot.s * rot.zeta * mq;
        m(q, j) = rot.s * mp + rot.c * rot.zeta * mq;
    }
}

inline double off_diagonal_norm(const Matrix& h) {
    double s = 0.0;
    for (std::size_t p = 0; p < h.rows(); ++p)
        for (std::size_t q = p + 1; q < h.cols(); ++q) s += 2.0 * std::norm(h(p, q));
    return std::sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi for complex Hermitian matrices. Quadratic convergence,
/// unconditionally stable, ample for the n <= 256 scope of this library.
inline EigResult eig_hermitian(const Matrix& a) {
    require_finite(a, "eig_hermitian");
    require_hermitian(a, "eig_hermitian");

    const std::size_t n = a.rows();
    Matrix h = hermitian_part(a);
    Matrix v = Matrix::identity(n);

    const double scale = h.frobenius_norm();
    const double stop = 1e-14 * (scale > 0.0 ? scale : 1.0);
    const int max_sweeps = 50;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (detail::off_diagonal_norm(h) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = h(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const auto rot =
                    detail::make_jacobi_rotation(h(p, p).real(), h(q, q).real(), apq);
                detail::apply_rotation_columns(h, p, q, rot);
                detail::apply_rotation_rows(h, p, q, rot);
                h(p, q) = 0.0;
                h(q, p) = 0.0;
                h(p, p) = cplx(h(p, p).real(), 0.0);
                h(q, q) = cplx(h(q, q).real(), 0.0);
                detail::apply_rotation_columns(v, p, q, rot);
            }
        }
    }

    EigResult res;
    res.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.eigenvalues[i] = h(i, i).real();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&res](std::size_t i, std::size_t j) {
        return res.eigenvalues[i] < res.eigenvalues[j];
    });

    EigResult sorted;
    sorted.eigenvalues.resize(n);
    sorted.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted.eigenvalues[k] = res.eigenvalues[order[k]];
        for (std::size_t i = 0; i < n; ++i) sorted.vectors(i, k) = v(i, order[k]);
    }
    return sorted;
}

/// vectors * diag(f(lambda)) * vectors^* for a scalar function f on the spectrum.
template <typename F>
Matrix spectral_apply(const EigResult& eig, F&& f) {
    const std::size_t n = eig.eigenvalues.size();
    std::vector<cplx> fl(n);
    for (std::size_t k = 0; k < n; ++k) fl[k] = f(eig.eigenvalues[k]);
    Matrix r(n, n);
    const Matrix& v = eig.vectors;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += v(i, k) * fl[k] * std::conj(v(j, k));
            r(i, j) = s;
        }
    return r;
}

inline double max_abs_eigenvalue(const EigResult& eig) {
    double m = 0.0;
    for (double l : eig.eigenvalues) m = std::max(m, std::abs(l));
    return m;
}

}  // namespace submaj
