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

#include "submaj/hermitian_eig.hpp"
#include "submaj/matrix.hpp"

namespace submaj {

/// Scaling and squaring with a truncated Taylor series. The input is halved
/// until its norm is below 1/2, so the series converges in < 30 terms at
/// full precision.
inline Matrix matrix_exp_series(const Matrix& a) {
    require_square(a, "matrix_exp");
    require_finite(a, "matrix_exp");
    const std::size_t n = a.rows();

    const double nrm = a.frobenius_norm();
    int halvings = 0;
    if (nrm > 0.5) halvings = static_cast<int>(std::ceil(std::log2(nrm))) + 1;

    Matrix x = std::pow(0.5, halvings) * a;
    Matrix sum = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (int k = 1; k <= 40; ++k) {
        term = (1.0 / k) * (term * x);
        sum = sum + term;
        if (term.frobenius_norm() <= 1e-18 * sum.frobenius_norm()) break;
    }
    for (int i = 0; i < halvings; ++i) sum = sum * sum;
    return sum;
}

inline Matrix matrix_exp_hermitian(const Matrix& a) {
    EigResult eig = eig_hermitian(a);
    return hermitian_part(spectral_apply(eig, [](double l) { return std::exp(l); }));
}

/// Hermitian inputs take the eigendecomposition route; everything else the
/// series route. The two agree on Hermitian inputs (cross-checked in tests).
inline Matrix matrix_exp(const Matrix& a) {
    require_square(a, "matrix_exp");
    require_finite(a, "matrix_exp");
    if (is_hermitian(a)) return matrix_exp_hermitian(a);
    return matrix_exp_series(a);
}

/// exp(z*b) for Hermitian b via its eigendecomposition; exact analytic
/// continuation in z, used on the interpolation strip.
inline Matrix exp_scaled_hermitian(const EigResult& eig_b, cplx z) {
    return spectral_apply(eig_b, [z](double l) { return std::exp(z * l); });
}

namespace detail {

inline void check_theta(double theta, const char* where) {
    if (!(theta >= 0.0 && theta <= 1.0))
        throw input_error(std::string(where) + ": theta must lie in [0, 1]");
}

// b^theta from a precomputed eigendecomposition of b. Eigenvalues in
// [-psd_tol, 0) are clamped to 0; anything lower is rejected by the caller.
inline Matrix psd_power_from_eig(const EigResult& eig, double theta) {
    return hermitian_part(spectral_apply(eig, [theta](double l) {
        const double c = std::max(l, 0.0);
        return std::pow(c, theta);  // pow(0, 0) == 1, so theta = 0 yields the identity
    }));
}

inline const char* kPsdMsg = ": matrix not PSD within tolerance (negative eigenvalue)";

inline void check_psd(const EigResult& eig, double tol, const char* where) {
    if (!eig.eigenvalues.empty() && eig.eigenvalues.front() < -tol)
        throw input_error(std::string(where) + kPsdMsg);
}

// Validated PSD operand: one eigendecomposition shared by all powers of it.
struct PsdOperand {
    EigResult eig;
};

inline PsdOperand validate_psd(const Matrix& b, const char* where) {
    require_hermitian(b, where);
    PsdOperand op{eig_hermitian(b)};
    check_psd(op.eig, psd_tolerance(b), where);
    return op;
}

inline Matrix power(const PsdOperand& b, double theta) {
    return psd_power_from_eig(b.eig, theta);
}

}  // namespace detail

/// Fractional power b^theta of a PSD Hermitian matrix, theta in [0, 1].
inline Matrix psd_power(const Matrix& b, double theta) {
    require_square(b, "psd_power");
    require_finite(b, "psd_power");
    detail::check_theta(theta, "psd_power");
    EigResult eig = eig_hermitian(b);
    detail::check_psd(eig, psd_tolerance(b), "psd_power");
    return detail::psd_power_from_eig(eig, theta);
}

}  // namespace submaj
