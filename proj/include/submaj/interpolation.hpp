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

#include "submaj/matrix_functions.hpp"
#include "submaj/profile.hpp"

namespace submaj {

/// Samples of F(z) = Tr(e^{zb} a e^{(1-z)b} c) on the strip 0 <= Re z <= 1.
/// bound_constant is the a-priori bound t ||a|| e^{2||b||} (t = support rank
/// of c) that every sample must respect.
struct StripGrid {
    std::vector<double> thetas;
    std::vector<double> imag_values;
    std::vector<std::vector<cplx>> values;  // values[theta_index][y_index]
    double bound_constant = 0.0;
};

inline constexpr double kThreeLinesRtol = 1e-8;

/// Evaluate F on a theta x y grid via the spectral calculus of Hermitian b:
/// with b = V diag(l) V^*, a~ = V^* a V, c~ = V^* c V,
///   F(z) = sum_{r,s} e^{z l_r} a~(r,s) e^{(1-z) l_s} c~(s,r).
/// Grid points are evaluated sequentially; the result is a pure function of
/// the inputs.
inline StripGrid strip_evaluate(const Matrix& a, const Matrix& b, const Matrix& c,
                                const std::vector<double>& thetas,
                                const std::vector<double>& imag_values) {
    require_square(a, "strip_evaluate");
    require_finite(a, "strip_evaluate");
    require_finite(c, "strip_evaluate");
    require_hermitian(b, "strip_evaluate");
    const std::size_t n = a.rows();
    if (b.rows() != n || c.rows() != n || !c.is_square())
        throw input_error("strip_evaluate: a, b, c must be square of equal size");

    const EigResult eig = eig_hermitian(b);
    const Matrix vh = eig.vectors.adjoint();
    const Matrix at = vh * a * eig.vectors;
    const Matrix ct = vh * c * eig.vectors;

    StripGrid grid;
    grid.thetas = thetas;
    grid.imag_values = imag_values;
    grid.values.assign(thetas.size(), std::vector<cplx>(imag_values.size()));

    for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
        for (std::size_t yi = 0; yi < imag_values.size(); ++yi) {
            const cplx z(thetas[ti], imag_values[yi]);
            const cplx w = cplx(1.0, 0.0) - z;
            std::vector<cplx> ez(n), ew(n);
            for (std::size_t r = 0; r < n; ++r) {
                ez[r] = std::exp(z * eig.eigenvalues[r]);
                ew[r] = std::exp(w * eig.eigenvalues[r]);
            }
            cplx f = 0.0;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s)
                    f += ez[r] * at(r, s) * ew[s] * ct(s, r);
            grid.values[ti][yi] = f;
        }
    }

    const double support_t = static_cast<double>(rank_of(c));
    grid.bound_constant =
        support_t * operator_norm(a) * std::exp(2.0 * max_abs_eigenvalue(eig));
    return grid;
}

struct ThreeLinesResult {
    bool holds = false;
    double interior_max = 0.0;
    double boundary_max = 0.0;
};

/// Interior-vs-boundary maximum comparison on an evaluated grid. The grid
/// must contain the boundary lines theta = 0 and theta = 1.
inline ThreeLinesResult three_lines_check(const StripGrid& grid) {
    bool has0 = false, has1 = false;
    for (double t : grid.thetas) {
        if (std::abs(t) <= 1e-12) has0 = true;
        if (std::abs(t - 1.0) <= 1e-12) has1 = true;
    }
    if (!has0 || !has1)
        throw input_error("three_lines_check: grid must contain theta = 0 and theta = 1");

    ThreeLinesResult res;
    for (std::size_t ti = 0; ti < grid.thetas.size(); ++ti) {
        const bool boundary =
            std::abs(grid.thetas[ti]) <= 1e-12 || std::abs(grid.thetas[ti] - 1.0) <= 1e-12;
        for (const cplx& v : grid.values[ti]) {
            const double m = std::abs(v);
            if (boundary)
                res.boundary_max = std::max(res.boundary_max, m);
            else
                res.interior_max = std::max(res.interior_max, m);
        }
    }
    res.holds =
        res.interior_max <= res.boundary_max + kThreeLinesRtol * (1.0 + res.boundary_max);
    return res;
}

/// e^{theta b} a e^{(1-theta) b} << a e^b for self-adjoint a, b.
inline SubmajorizationVerdict boundary_submajorization_bound(const Matrix& a, const Matrix& b,
                                                             double theta) {
    require_hermitian(a, "boundary_submajorization_bound");
    require_hermitian(b, "boundary_submajorization_bound");
    detail::check_theta(theta, "boundary_submajorization_bound");
    if (a.rows() != b.rows())
        throw input_error("boundary_submajorization_bound: size mismatch");

    const EigResult eig_b = eig_hermitian(b);
    const Matrix left = exp_scaled_hermitian(eig_b, theta) * a *
                        exp_scaled_hermitian(eig_b, 1.0 - theta);
    const Matrix right = a * exp_scaled_hermitian(eig_b, 1.0);
    return submajorizes(profile_of(left), profile_of(right));
}

}  // namespace submaj
