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

#include "submaj/profile.hpp"
#include "submaj/rng.hpp"
#include "submaj/svd.hpp"

namespace submaj {

/// Witness for the Ky Fan duality: a contraction c with support rank <= k
/// attaining |Tr(a c)| = sum of the top-k singular values of a.
struct ContractionCertificate {
    Matrix c;
    std::size_t support_rank = 0;
    double attained = 0.0;
};

namespace detail {
inline void check_k(const Matrix& a, int k, const char* where) {
    const std::size_t kmax = std::min(a.rows(), a.cols());
    if (k < 0 || static_cast<std::size_t>(k) > kmax)
        throw input_error(std::string(where) + ": k out of range 0.." + std::to_string(kmax));
}
}  // namespace detail

/// Optimal certificate built from the polar/SVD data: with a = u s v^*,
/// c = v_k u_k^* transfers the top-k range of a back onto its domain, so
/// Tr(a c) = s_1 + ... + s_k.
inline ContractionCertificate optimal_contraction(const Matrix& a, int k) {
    require_finite(a, "optimal_contraction");
    detail::check_k(a, k, "optimal_contraction");

    ContractionCertificate cert;
    cert.c = Matrix::zero(a.cols(), a.rows());
    cert.support_rank = static_cast<std::size_t>(k);
    if (k == 0) return cert;

    const SvdResult s = svd(a);
    double attained = 0.0;
    for (int i = 0; i < k; ++i) attained += s.singular_values[i];
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) {
            cplx z = 0.0;
            for (int t = 0; t < k; ++t) z += s.v(i, t) * std::conj(s.u(j, t));
            cert.c(i, j) = z;
        }
    cert.attained = attained;
    return cert;
}

/// Best |Tr(a c)| over seeded random contractions c = u diag(s) v^* with
/// support rank <= k; a stochastic lower bound for the duality supremum.
inline double random_contraction_bound(const Matrix& a, int k, int samples,
                                       std::uint64_t seed) {
    require_finite(a, "random_contraction_bound");
    if (samples < 1) throw input_error("random_contraction_bound: samples must be >= 1");
    detail::check_k(a, k, "random_contraction_bound");
    if (k == 0) return 0.0;

    const std::size_t m = a.rows(), n = a.cols();
    double best = 0.0;
    for (int trial = 0; trial < samples; ++trial) {
        Rng rng(derive_stream(seed, {static_cast<std::uint64_t>(trial)}));
        const Matrix u = haar_unitary(n, rng);
        const Matrix v = haar_unitary(m, rng);
        std::vector<double> s(k);
        for (int i = 0; i < k; ++i) s[i] = rng.uniform();

        // c = sum_i s_i u_i v_i^*  (n x m), then Tr(a c)
        cplx tr = 0.0;
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t cidx = 0; cidx < n; ++cidx) {
                cplx centry = 0.0;
                for (int i = 0; i < k; ++i)
                    centry += s[i] * u(cidx, i) * std::conj(v(r, i));
                tr += a(r, cidx) * centry;
            }
        best = std::max(best, std::abs(tr));
    }
    return best;
}

/// Supremum side of the duality: the constructed optimal certificate attains
/// it; random contractions can only approach it from below.
inline double ky_fan_via_duality(const Matrix& a, int k, int samples, std::uint64_t seed) {
    require_finite(a, "ky_fan_via_duality");
    if (samples < 0) throw input_error("ky_fan_via_duality: samples must be >= 0");
    detail::check_k(a, k, "ky_fan_via_duality");
    double best = optimal_contraction(a, k).attained;
    if (samples > 0 && k > 0)
        best = std::max(best, random_contraction_bound(a, k, samples, seed));
    return best;
}

}  // namespace submaj
