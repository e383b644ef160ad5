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

#include <limits>

#include "submaj/svd.hpp"

namespace submaj {

/// Singular value profile: non-increasing, non-negative values, read as
/// the step function mu(t) = values[n] for t in [n, n+1) and 0 beyond.
struct SingularProfile {
    std::vector<double> values;

    SingularProfile() = default;
    explicit SingularProfile(std::vector<double> v) : values(std::move(v)) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!(values[i] >= 0.0) || !std::isfinite(values[i]))
                throw input_error("SingularProfile: values must be finite and >= 0");
            if (i > 0 && values[i] > values[i - 1])
                throw input_error("SingularProfile: values must be non-increasing");
        }
    }

    static SingularProfile from_unsorted(std::vector<double> v) {
        std::sort(v.begin(), v.end(), std::greater<>());
        return SingularProfile(std::move(v));
    }

    std::size_t size() const { return values.size(); }

    /// Step-function value, 0 beyond the support.
    double at(std::size_t i) const { return i < values.size() ? values[i] : 0.0; }

    double total() const {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
};

inline SingularProfile profile_of(const Matrix& a) {
    return SingularProfile(singular_values(a));
}

/// Partial-sum (Ky Fan) function t -> integral of mu over [0, t]:
/// piecewise linear, concave, with breakpoints at the integers.
struct KyFanFunction {
    std::vector<std::size_t> breakpoints;  // 0..n
    std::vector<double> partial_sums;      // partial_sums[k] = sum of top-k values

    static KyFanFunction of(const SingularProfile& p) {
        KyFanFunction f;
        const std::size_t n = p.size();
        f.breakpoints.resize(n + 1);
        f.partial_sums.resize(n + 1);
        f.partial_sums[0] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            f.breakpoints[k] = k;
            f.partial_sums[k + 1] = f.partial_sums[k] + p.values[k];
        }
        f.breakpoints[n] = n;
        return f;
    }

    double at(double t) const {
        if (t < 0.0) throw input_error("KyFanFunction: t must be >= 0");
        const std::size_t n = partial_sums.size() - 1;
        if (t >= static_cast<double>(n)) return partial_sums[n];
        const auto k = static_cast<std::size_t>(t);
        const double frac = t - static_cast<double>(k);
        return partial_sums[k] + frac * (partial_sums[k + 1] - partial_sums[k]);
    }
};

/// Exact integral of the step function over [0, t].
inline double ky_fan(const SingularProfile& p, double t) {
    if (t < 0.0) throw input_error("ky_fan: t must be >= 0");
    double sum = 0.0;
    double remaining = t;
    for (double v : p.values) {
        if (remaining <= 0.0) break;
        sum += v * std::min(remaining, 1.0);
        remaining -= 1.0;
    }
    return sum;
}

struct SubmajorizationVerdict {
    bool holds = true;
    double worst_t = 0.0;
    double margin = 0.0;  // max over breakpoints t >= 1 of K_left(t) - K_right(t)
    double tolerance_used = 0.0;
};

/// Default tolerance for comparisons whose profiles came out of SVDs:
/// singular values carry O(n * eps * ||a||) rounding.
inline double default_submajorization_tol(const SingularProfile& right) {
    return 1e-9 * std::max(1.0, right.total());
}

/// Hardy-Littlewood submajorization left << right. Both Ky Fan functions are
/// piecewise linear with integer breakpoints, so the maximum of their
/// difference is attained at a breakpoint; checking t = 1..N (N = common
/// support end) is exact, no grid search needed.
inline SubmajorizationVerdict submajorizes(const SingularProfile& left,
                                           const SingularProfile& right, double tol) {
    if (!(tol >= 0.0)) throw input_error("submajorizes: tol must be >= 0");
    const std::size_t n = std::max(left.size(), right.size());
    SubmajorizationVerdict v;
    v.tolerance_used = tol;
    double kl = 0.0, kr = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_t = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        kl += left.at(k - 1);
        kr += right.at(k - 1);
        const double diff = kl - kr;
        if (diff > best) {
            best = diff;
            best_t = k;
        }
    }
    if (n == 0) {
        v.margin = 0.0;
        v.worst_t = 0.0;
    } else {
        v.margin = best;
        v.worst_t = static_cast<double>(best_t);
    }
    v.holds = v.margin <= tol;
    return v;
}

inline SubmajorizationVerdict submajorizes(const SingularProfile& left,
                                           const SingularProfile& right) {
    return submajorizes(left, right, default_submajorization_tol(right));
}

/// Pointwise maximum on the integer grid (shorter profile zero-padded).
inline SingularProfile profile_max(const SingularProfile& p, const SingularProfile& q) {
    const std::size_t n = std::max(p.size(), q.size());
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::max(p.at(i), q.at(i));
    return SingularProfile(std::move(v));
}

/// Pointwise product on the integer grid (zero-padded).
inline SingularProfile profile_product(const SingularProfile& p, const SingularProfile& q) {
    const std::size_t n = std::max(p.size(), q.size());
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = p.at(i) * q.at(i);
    return SingularProfile(std::move(v));
}

/// Profile of a block-diagonal direct sum: merge and re-sort.
inline SingularProfile profile_direct_sum(const SingularProfile& p, const SingularProfile& q) {
    std::vector<double> v;
    v.reserve(p.size() + q.size());
    v.insert(v.end(), p.values.begin(), p.values.end());
    v.insert(v.end(), q.values.begin(), q.values.end());
    std::sort(v.begin(), v.end(), std::greater<>());
    return SingularProfile(std::move(v));
}

/// sigma_2: (a0, a1, ...) -> (a0, a0, a1, a1, ...)
inline SingularProfile sigma2(const SingularProfile& p) {
    std::vector<double> v;
    v.reserve(2 * p.size());
    for (double x : p.values) {
        v.push_back(x);
        v.push_back(x);
    }
    return SingularProfile(std::move(v));
}

/// Fully symmetric norms on profiles: schatten(p), ky_fan(k), operator norm.
struct NormDescriptor {
    enum class Kind { schatten, ky_fan, operator_norm };
    Kind kind = Kind::operator_norm;
    double p = 0.0;
    int k = 0;

    static NormDescriptor schatten(double p) {
        if (std::isinf(p)) return op_norm();  // schatten(inf) == operator norm
        if (!(p >= 1.0)) throw input_error("NormDescriptor: schatten p must be >= 1");
        return {Kind::schatten, p, 0};
    }
    static NormDescriptor ky_fan(int k) {
        if (k < 1) throw input_error("NormDescriptor: ky_fan k must be >= 1");
        return {Kind::ky_fan, 0.0, k};
    }
    static NormDescriptor op_norm() { return {Kind::operator_norm, 0.0, 0}; }

    std::string label() const {
        switch (kind) {
            case Kind::schatten: return "schatten(" + std::to_string(p) + ")";
            case Kind::ky_fan: return "ky_fan(" + std::to_string(k) + ")";
            default: return "operator";
        }
    }
};

inline double symmetric_norm(const SingularProfile& prof, const NormDescriptor& spec) {
    switch (spec.kind) {
        case NormDescriptor::Kind::schatten: {
            double s = 0.0;
            for (double v : prof.values) s += std::pow(v, spec.p);
            return std::pow(s, 1.0 / spec.p);
        }
        case NormDescriptor::Kind::ky_fan: {
            double s = 0.0;
            for (std::size_t i = 0; i < static_cast<std::size_t>(spec.k); ++i) s += prof.at(i);
            return s;
        }
        default:
            return prof.values.empty() ? 0.0 : prof.values.front();
    }
}

inline double symmetric_norm(const Matrix& a, const NormDescriptor& spec) {
    return symmetric_norm(profile_of(a), spec);
}

/// ||x||_p^p = sum of s_i^p, the quantity in the half-power corollary.
inline double schatten_p_power(const SingularProfile& prof, double p) {
    if (!(p >= 1.0) || std::isinf(p))
        throw input_error("schatten_p_power: p must be finite and >= 1");
    double s = 0.0;
    for (double v : prof.values) s += std::pow(v, p);
    return s;
}

}  // namespace submaj
