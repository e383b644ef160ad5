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

#include <functional>

#include "submaj/matrix_functions.hpp"
#include "submaj/schur_eigenvalues.hpp"

namespace submaj {

/// Eigenvalues with algebraic multiplicity, ordered by non-increasing
/// modulus; ties broken by argument, then by input order.
struct EigenvalueMultiset {
    std::vector<cplx> values;
};

inline EigenvalueMultiset eigenvalues_ordered(const Matrix& a) {
    std::vector<cplx> v = eigenvalues(a);
    std::stable_sort(v.begin(), v.end(), [](const cplx& x, const cplx& y) {
        const double ax = std::abs(x), ay = std::abs(y);
        if (ax != ay) return ax > ay;
        return std::arg(x) < std::arg(y);
    });
    return EigenvalueMultiset{std::move(v)};
}

namespace detail {

// Smallest threshold under which the two value lists admit a perfect
// matching with every matched pair within that threshold (Kuhn's algorithm
// over the candidate thresholds). Used as a fallback when greedy pairing is
// defeated by clustered eigenvalues.
inline double bipartite_minmax_distance(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    const std::size_t n = x.size();
    if (n == 0) return 0.0;
    std::vector<std::vector<double>> d(n, std::vector<double>(n));
    std::vector<double> cand;
    cand.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            d[i][j] = std::abs(x[i] - y[j]);
            cand.push_back(d[i][j]);
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    auto feasible = [&](double thr) {
        std::vector<int> match_y(n, -1);
        std::vector<char> used(n, 0);
        std::function<bool(std::size_t)> try_kuhn = [&](std::size_t i) -> bool {
            for (std::size_t j = 0; j < n; ++j) {
                if (used[j] || d[i][j] > thr) continue;
                used[j] = 1;
                if (match_y[j] < 0 || try_kuhn(static_cast<std::size_t>(match_y[j]))) {
                    match_y[j] = static_cast<int>(i);
                    return true;
                }
            }
            return false;
        };
        for (std::size_t i = 0; i < n; ++i) {
            std::fill(used.begin(), used.end(), 0);
            if (!try_kuhn(i)) return false;
        }
        return true;
    };

    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (feasible(cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return cand[lo];
}

// Greedy nearest-neighbor pairing of two modulus-sorted multisets, with the
// optimal bipartite fallback before declaring a mismatch.
inline double match_multisets(const std::vector<cplx>& x, const std::vector<cplx>& y,
                              double tol) {
    const std::size_t n = x.size();
    std::vector<char> taken(n, 0);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best_j = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (taken[j]) continue;
            const double dd = std::abs(x[i] - y[j]);
            if (dd < best_d) {
                best_d = dd;
                best_j = j;
            }
        }
        taken[best_j] = 1;
        worst = std::max(worst, best_d);
    }
    if (worst <= tol) return worst;
    return std::min(worst, bipartite_minmax_distance(x, y));
}

}  // namespace detail

struct MultisetMatch {
    bool holds = false;
    double max_mismatch = 0.0;
};

/// Lambda(ab) = Lambda(ba): the eigenvalue multisets of ab and ba coincide.
inline MultisetMatch lambda_ab_equals_ba(const Matrix& a, const Matrix& b, double tol) {
    require_square(a, "lambda_ab_equals_ba");
    require_square(b, "lambda_ab_equals_ba");
    if (a.rows() != b.rows()) throw input_error("lambda_ab_equals_ba: size mismatch");
    const auto lab = eigenvalues_ordered(a * b);
    const auto lba = eigenvalues_ordered(b * a);
    const double worst = detail::match_multisets(lab.values, lba.values, tol);
    return MultisetMatch{worst <= tol, worst};
}

struct TraceIdentityResult {
    bool holds = false;
    double dev_ab_ba = 0.0;      // |Tr(ab) - Tr(ba)|
    double dev_ab_interp = 0.0;  // |Tr(ab) - Tr(b^{1-theta} a b^{theta})|
    double tolerance = 0.0;
};

/// Tr(ab) = Tr(ba) = Tr(b^{1-theta} a b^{theta}) for PSD b.
inline TraceIdentityResult trace_theta_identity(const Matrix& a, const Matrix& b,
                                                double theta) {
    require_square(a, "trace_theta_identity");
    require_finite(a, "trace_theta_identity");
    detail::check_theta(theta, "trace_theta_identity");
    const auto bp = detail::validate_psd(b, "trace_theta_identity");
    if (a.rows() != b.rows()) throw input_error("trace_theta_identity: size mismatch");

    const cplx t_ab = (a * b).trace();
    const cplx t_ba = (b * a).trace();
    const cplx t_mid =
        (detail::power(bp, 1.0 - theta) * a * detail::power(bp, theta)).trace();

    TraceIdentityResult r;
    r.dev_ab_ba = std::abs(t_ab - t_ba);
    r.dev_ab_interp = std::abs(t_ab - t_mid);
    r.tolerance = 1e-10 * (1.0 + std::abs(t_ab));
    r.holds = r.dev_ab_ba <= r.tolerance && r.dev_ab_interp <= r.tolerance;
    return r;
}

/// Three-way multiset identity Lambda(ab) = Lambda(ba) =
/// Lambda(b^{1-theta} a b^{theta}) for PSD b.
inline MultisetMatch lambda_interpolated(const Matrix& a, const Matrix& b, double theta,
                                         double tol) {
    require_square(a, "lambda_interpolated");
    require_finite(a, "lambda_interpolated");
    detail::check_theta(theta, "lambda_interpolated");
    const auto bp = detail::validate_psd(b, "lambda_interpolated");
    if (a.rows() != b.rows()) throw input_error("lambda_interpolated: size mismatch");

    const auto lab = eigenvalues_ordered(a * b);
    const auto lba = eigenvalues_ordered(b * a);
    const auto lmid = eigenvalues_ordered(detail::power(bp, 1.0 - theta) * a *
                                          detail::power(bp, theta));

    double worst = detail::match_multisets(lab.values, lba.values, tol);
    worst = std::max(worst, detail::match_multisets(lab.values, lmid.values, tol));
    worst = std::max(worst, detail::match_multisets(lba.values, lmid.values, tol));
    return MultisetMatch{worst <= tol, worst};
}

}  // namespace submaj
