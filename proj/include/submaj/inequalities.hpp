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
#include "submaj/rng.hpp"

namespace submaj {

/// Outcome of one named inequality on one set of inputs.
///
/// Single-comparison verdicts report margin = lhs - rhs against
/// tolerance_used; verdicts that bundle several checks report
/// margin = max over checks of (violation - per-check tolerance) against
/// tolerance_used = 0. Either way: holds <=> margin <= tolerance_used.
struct InequalityVerdict {
    std::string name;
    bool holds = false;
    double margin = 0.0;
    double tolerance_used = 0.0;
    double theta = std::numeric_limits<double>::quiet_NaN();
    double p = std::numeric_limits<double>::quiet_NaN();
    double worst_t = -1.0;
    std::string inputs_digest;
};

namespace detail {

inline std::string digest_of(std::initializer_list<const Matrix*> ms) {
    std::string s;
    for (const Matrix* m : ms) {
        if (!s.empty()) s += ':';
        s += std::to_string(m->rows()) + "x" + std::to_string(m->cols()) + "-" +
             digest_hex(matrix_digest(*m));
    }
    return s;
}

inline InequalityVerdict from_submajorization(std::string name,
                                              const SubmajorizationVerdict& v, double theta,
                                              std::string digest) {
    InequalityVerdict out;
    out.name = std::move(name);
    out.holds = v.holds;
    out.margin = v.margin;
    out.tolerance_used = v.tolerance_used;
    out.worst_t = v.worst_t;
    out.theta = theta;
    out.inputs_digest = std::move(digest);
    return out;
}

}  // namespace detail

/// For self-adjoint a and PSD b, the two-sided theta-weighted product is
/// submajorized by the plain product: b^theta a b^(1-theta) << a b.
inline InequalityVerdict theta_product_selfadjoint(const Matrix& a, const Matrix& b,
                                                    double theta) {
    require_hermitian(a, "theta_product_selfadjoint");
    detail::check_theta(theta, "theta_product_selfadjoint");
    const auto bp = detail::validate_psd(b, "theta_product_selfadjoint");
    if (a.rows() != b.rows()) throw input_error("theta_product_selfadjoint: size mismatch");

    const Matrix left = detail::power(bp, theta) * a * detail::power(bp, 1.0 - theta);
    const auto verdict = submajorizes(profile_of(left), profile_of(a * b));
    return detail::from_submajorization("theta_product_selfadjoint", verdict, theta,
                                        detail::digest_of({&a, &b}));
}

/// For arbitrary a and PSD b the one-sided comparison can fail; the valid
/// bound is b^theta a b^(1-theta) << max{mu(ab), mu(ba)}.
inline InequalityVerdict theta_product_general(const Matrix& a, const Matrix& b, double theta) {
    require_square(a, "theta_product_general");
    require_finite(a, "theta_product_general");
    detail::check_theta(theta, "theta_product_general");
    const auto bp = detail::validate_psd(b, "theta_product_general");
    if (a.rows() != b.rows()) throw input_error("theta_product_general: size mismatch");

    const Matrix left = detail::power(bp, theta) * a * detail::power(bp, 1.0 - theta);
    const SingularProfile right =
        profile_max(profile_of(a * b), profile_of(b * a));
    const auto verdict = submajorizes(profile_of(left), right);
    return detail::from_submajorization("theta_product_general", verdict, theta,
                                        detail::digest_of({&a, &b}));
}

/// The 2x2 counterexample: a = [[0,1],[0,0]], b = diag(lambda, mu) with
/// lambda > mu. Then a e^b = e^mu a while e^{theta b} a e^{(1-theta) b}
/// = e^{theta lambda + (1-theta) mu} a, so the submajorization against a e^b
/// fails for every theta in (0, 1] with margin
/// e^{theta lambda + (1-theta) mu} - e^mu.
inline InequalityVerdict counterexample_tr(double lambda, double mu, double theta) {
    if (!(lambda > mu))
        throw input_error("counterexample_tr: requires lambda > mu");
    detail::check_theta(theta, "counterexample_tr");

    const Matrix a{{0.0, 1.0}, {0.0, 0.0}};
    const Matrix b = Matrix::diagonal(std::vector<double>{lambda, mu});
    const EigResult eig_b = eig_hermitian(b);

    const Matrix left = exp_scaled_hermitian(eig_b, theta) * a *
                        exp_scaled_hermitian(eig_b, 1.0 - theta);
    const Matrix right = a * exp_scaled_hermitian(eig_b, 1.0);

    const SingularProfile lp = profile_of(left);
    const SingularProfile rp = profile_of(right);

    const double expect_left = std::exp(theta * lambda + (1.0 - theta) * mu);
    const double expect_right = std::exp(mu);
    const double rtol = 1e-12;
    if (std::abs(lp.at(0) - expect_left) > rtol * (1.0 + expect_left) ||
        lp.at(1) > rtol * (1.0 + expect_left) ||
        std::abs(rp.at(0) - expect_right) > rtol * (1.0 + expect_right) ||
        rp.at(1) > rtol * (1.0 + expect_right))
        throw std::runtime_error("counterexample_tr: profiles deviate from closed form");

    const auto verdict = submajorizes(lp, rp);
    return detail::from_submajorization("counterexample_tr", verdict, theta,
                                        detail::digest_of({&a, &b}));
}

/// Witness that the *pointwise* inequality mu(b^{1/2} a b^{1/2}) <= mu(ab)
/// can fail while the self-adjoint submajorization bound still holds.
struct PointwiseWitness {
    bool found = false;
    Matrix a;
    Matrix b;
    std::size_t index = 0;    // which singular value is exceeded
    double excess = 0.0;      // by how much, beyond the acceptance tolerance
    int trials_used = 0;
};

inline PointwiseWitness counterexample_pointwise_search(std::uint64_t seed, int trials) {
    if (trials < 1) throw input_error("counterexample_pointwise_search: trials must be >= 1");
    PointwiseWitness w;
    for (int t = 0; t < trials; ++t) {
        const Matrix a =
            gen_hermitian(2, derive_stream(seed, {static_cast<std::uint64_t>(t), 0}), 2.0);
        const Matrix b = gen_psd(2, derive_stream(seed, {static_cast<std::uint64_t>(t), 1}), false);
        const Matrix sqrtb = psd_power(b, 0.5);
        const SingularProfile sl = profile_of(sqrtb * a * sqrtb);
        const SingularProfile sr = profile_of(a * b);
        const double rtol = 1e-9 * (1.0 + sr.at(0));
        for (std::size_t i = 0; i < sl.size(); ++i) {
            if (sl.at(i) > sr.at(i) + rtol) {
                // keep only witnesses on which the submajorization bound re-verifies
                if (!theta_product_selfadjoint(a, b, 0.5).holds) continue;
                w.found = true;
                w.a = a;
                w.b = b;
                w.index = i;
                w.excess = sl.at(i) - sr.at(i) - rtol;
                w.trials_used = t + 1;
                return w;
            }
        }
    }
    w.trials_used = trials;
    return w;
}

/// Two-weight max bound via a block embedding: with bold_a = [[0,0],[a,0]] and
/// bold_b = diag(b0, b1) in B(H + H), mu(bold_a bold_b) = mu(a b0) and
/// mu(bold_b bold_a) = mu(b1 a), giving
/// b1^theta a b0^(1-theta) << max{mu(a b0), mu(b1 a)}.
inline InequalityVerdict two_weight_max_bound(const Matrix& a, const Matrix& b0,
                                               const Matrix& b1, double theta) {
    require_square(a, "two_weight_max_bound");
    require_finite(a, "two_weight_max_bound");
    detail::check_theta(theta, "two_weight_max_bound");
    const auto bp0 = detail::validate_psd(b0, "two_weight_max_bound");
    const auto bp1 = detail::validate_psd(b1, "two_weight_max_bound");
    const std::size_t n = a.rows();
    if (b0.rows() != n || b1.rows() != n)
        throw input_error("two_weight_max_bound: size mismatch");

    const Matrix zero = Matrix::zero(n, n);
    const Matrix bold_a = block2x2(zero, zero, a, zero);
    const Matrix bold_b = block2x2(b0, zero, zero, b1);

    const SingularProfile p_ab0 = profile_of(a * b0);
    const SingularProfile p_b1a = profile_of(b1 * a);

    // profile identities of the block construction (exact up to rounding)
    const SingularProfile block_ab = profile_of(bold_a * bold_b);
    const SingularProfile block_ba = profile_of(bold_b * bold_a);
    const double id_tol = 1e-9 * (1.0 + std::max(p_ab0.at(0), p_b1a.at(0)));
    for (std::size_t i = 0; i < 2 * n; ++i) {
        if (std::abs(block_ab.at(i) - p_ab0.at(i)) > id_tol ||
            std::abs(block_ba.at(i) - p_b1a.at(i)) > id_tol)
            throw std::runtime_error("two_weight_max_bound: block profile identity failed");
    }

    const Matrix left = detail::power(bp1, theta) * a * detail::power(bp0, 1.0 - theta);
    const auto verdict = submajorizes(profile_of(left), profile_max(p_ab0, p_b1a));
    return detail::from_submajorization("two_weight_max_bound", verdict, theta,
                                        detail::digest_of({&a, &b0, &b1}));
}

/// Two-weight direct-sum bound:
/// mu(b0^theta a b1^(1-theta)) (+) mu(b1^theta a* b0^(1-theta))
///   << mu(a b1) (+) mu(b0 a),
/// and for a = a*, theta = 1/2 additionally
/// sigma_2(mu(b0^{1/2} a b1^{1/2})) << mu(a b1) (+) mu(a b0).
inline InequalityVerdict two_weight_direct_sum(const Matrix& a, const Matrix& b0,
                                                const Matrix& b1, double theta) {
    require_square(a, "two_weight_direct_sum");
    require_finite(a, "two_weight_direct_sum");
    detail::check_theta(theta, "two_weight_direct_sum");
    const auto bp0 = detail::validate_psd(b0, "two_weight_direct_sum");
    const auto bp1 = detail::validate_psd(b1, "two_weight_direct_sum");
    const std::size_t n = a.rows();
    if (b0.rows() != n || b1.rows() != n)
        throw input_error("two_weight_direct_sum: size mismatch");

    const SingularProfile left = profile_direct_sum(
        profile_of(detail::power(bp0, theta) * a * detail::power(bp1, 1.0 - theta)),
        profile_of(detail::power(bp1, theta) * a.adjoint() * detail::power(bp0, 1.0 - theta)));
    const SingularProfile right =
        profile_direct_sum(profile_of(a * b1), profile_of(b0 * a));
    const auto main = submajorizes(left, right);

    InequalityVerdict out;
    out.name = "two_weight_direct_sum";
    out.theta = theta;
    out.inputs_digest = detail::digest_of({&a, &b0, &b1});

    if (is_hermitian(a) && std::abs(theta - 0.5) <= 1e-12) {
        const SingularProfile doubled =
            sigma2(profile_of(detail::power(bp0, 0.5) * a * detail::power(bp1, 0.5)));
        const SingularProfile right2 =
            profile_direct_sum(profile_of(a * b1), profile_of(a * b0));
        const auto variant = submajorizes(doubled, right2);
        out.holds = main.holds && variant.holds;
        const double e1 = main.margin - main.tolerance_used;
        const double e2 = variant.margin - variant.tolerance_used;
        out.margin = std::max(e1, e2);
        out.tolerance_used = 0.0;
        out.worst_t = e1 >= e2 ? main.worst_t : variant.worst_t;
    } else {
        out.holds = main.holds;
        out.margin = main.margin;
        out.tolerance_used = main.tolerance_used;
        out.worst_t = main.worst_t;
    }
    return out;
}

/// Hoelder-type interpolation in a fully symmetric norm:
/// ||b0^theta a b1^(1-theta)|| <= ||b0 a||^theta ||a b1||^(1-theta),
/// plus the partial-sum inequality behind it at every integer breakpoint.
inline InequalityVerdict holder_norm_interpolation(const Matrix& a, const Matrix& b0,
                                                   const Matrix& b1, double theta,
                                                   const NormDescriptor& spec) {
    require_square(a, "holder_norm_interpolation");
    require_finite(a, "holder_norm_interpolation");
    detail::check_theta(theta, "holder_norm_interpolation");
    const auto bp0 = detail::validate_psd(b0, "holder_norm_interpolation");
    const auto bp1 = detail::validate_psd(b1, "holder_norm_interpolation");
    const std::size_t n = a.rows();
    if (b0.rows() != n || b1.rows() != n)
        throw input_error("holder_norm_interpolation: size mismatch");

    const Matrix mid = detail::power(bp0, theta) * a * detail::power(bp1, 1.0 - theta);
    const SingularProfile pm = profile_of(mid);
    const SingularProfile p0 = profile_of(b0 * a);
    const SingularProfile p1 = profile_of(a * b1);

    const double lhs = symmetric_norm(pm, spec);
    const double rhs =
        std::pow(symmetric_norm(p0, spec), theta) * std::pow(symmetric_norm(p1, spec), 1.0 - theta);
    double margin = lhs - rhs - 1e-9 * (1.0 + rhs);
    double worst_t = -1.0;

    const std::size_t nmax = std::max({pm.size(), p0.size(), p1.size()});
    double kl = 0.0, k0 = 0.0, k1 = 0.0;
    for (std::size_t t = 1; t <= nmax; ++t) {
        kl += pm.at(t - 1);
        k0 += p0.at(t - 1);
        k1 += p1.at(t - 1);
        const double bound = std::pow(k0, theta) * std::pow(k1, 1.0 - theta);
        const double excess = kl - bound - 1e-9 * (1.0 + bound);
        if (excess > margin) {
            margin = excess;
            worst_t = static_cast<double>(t);
        }
    }

    InequalityVerdict out;
    out.name = "holder_norm_interpolation";
    out.theta = theta;
    out.margin = margin;
    out.tolerance_used = 0.0;
    out.holds = margin <= 0.0;
    out.worst_t = worst_t;
    out.p = spec.kind == NormDescriptor::Kind::schatten ? spec.p
                                                        : std::numeric_limits<double>::quiet_NaN();
    out.inputs_digest = detail::digest_of({&a, &b0, &b1}) + ":" + spec.label();
    return out;
}

/// Half-power corollary in Schatten p:
/// 2 ||b0^{1/2} a b1^{1/2}||_p^p <= ||a b1||_p^p + ||b0 a||_p^p.
inline InequalityVerdict schatten_half_power(const Matrix& a, const Matrix& b0,
                                             const Matrix& b1, double p) {
    require_hermitian(a, "schatten_half_power");
    if (!(p >= 1.0) || std::isinf(p))
        throw input_error("schatten_half_power: p must be finite and >= 1");
    const auto bp0 = detail::validate_psd(b0, "schatten_half_power");
    const auto bp1 = detail::validate_psd(b1, "schatten_half_power");
    const std::size_t n = a.rows();
    if (b0.rows() != n || b1.rows() != n)
        throw input_error("schatten_half_power: size mismatch");

    const Matrix mid = detail::power(bp0, 0.5) * a * detail::power(bp1, 0.5);
    const double lhs = 2.0 * schatten_p_power(profile_of(mid), p);
    const double rhs = schatten_p_power(profile_of(a * b1), p) +
                       schatten_p_power(profile_of(b0 * a), p);

    InequalityVerdict out;
    out.name = "schatten_half_power";
    out.p = p;
    out.margin = lhs - rhs;
    out.tolerance_used = 1e-9 * (1.0 + rhs);
    out.holds = out.margin <= out.tolerance_used;
    out.inputs_digest = detail::digest_of({&a, &b0, &b1});
    return out;
}

/// Golden-Thompson in symmetric-norm form:
/// ||e^{theta b} e^a e^{(1-theta) b}|| <= ||e^a e^b||, plus the underlying
/// submajorization e^{theta b} e^a e^{(1-theta) b} << e^a e^b.
inline InequalityVerdict golden_thompson_symmetric(const Matrix& a, const Matrix& b,
                                                   double theta, const NormDescriptor& spec) {
    require_hermitian(a, "golden_thompson_symmetric");
    require_hermitian(b, "golden_thompson_symmetric");
    detail::check_theta(theta, "golden_thompson_symmetric");
    if (a.rows() != b.rows()) throw input_error("golden_thompson_symmetric: size mismatch");

    const EigResult eig_b = eig_hermitian(b);
    const Matrix ea = matrix_exp_hermitian(a);
    const Matrix left_m = exp_scaled_hermitian(eig_b, theta) * ea *
                          exp_scaled_hermitian(eig_b, 1.0 - theta);
    const Matrix right_m = ea * exp_scaled_hermitian(eig_b, 1.0);

    const SingularProfile lp = profile_of(left_m);
    const SingularProfile rp = profile_of(right_m);

    const double lhs = symmetric_norm(lp, spec);
    const double rhs = symmetric_norm(rp, spec);
    const double norm_excess = lhs - rhs - 1e-9 * (1.0 + rhs);
    const auto sub = submajorizes(lp, rp);
    const double sub_excess = sub.margin - sub.tolerance_used;

    InequalityVerdict out;
    out.name = "golden_thompson_symmetric";
    out.theta = theta;
    out.margin = std::max(norm_excess, sub_excess);
    out.tolerance_used = 0.0;
    out.holds = out.margin <= 0.0;
    out.worst_t = sub_excess >= norm_excess ? sub.worst_t : -1.0;
    out.p = spec.kind == NormDescriptor::Kind::schatten ? spec.p
                                                        : std::numeric_limits<double>::quiet_NaN();
    out.inputs_digest = detail::digest_of({&a, &b}) + ":" + spec.label();
    return out;
}

/// ||e^{a+b}||_p <= ||e^a e^b||_p for Hermitian a, b and all p in [1, inf];
/// p = inf means the operator norm.
inline InequalityVerdict golden_thompson_exp_sum(const Matrix& a, const Matrix& b, double p) {
    require_hermitian(a, "golden_thompson_exp_sum");
    require_hermitian(b, "golden_thompson_exp_sum");
    if (!(p >= 1.0)) throw input_error("golden_thompson_exp_sum: p must be >= 1 (or inf)");
    if (a.rows() != b.rows()) throw input_error("golden_thompson_exp_sum: size mismatch");

    const NormDescriptor spec = NormDescriptor::schatten(p);
    const double lhs = symmetric_norm(profile_of(matrix_exp_hermitian(a + b)), spec);
    const double rhs =
        symmetric_norm(profile_of(matrix_exp_hermitian(a) * matrix_exp_hermitian(b)), spec);

    InequalityVerdict out;
    out.name = "golden_thompson_exp_sum";
    out.p = p;
    out.margin = lhs - rhs;
    out.tolerance_used = 1e-8 * (1.0 + rhs);
    out.holds = out.margin <= out.tolerance_used;
    out.inputs_digest = detail::digest_of({&a, &b});
    return out;
}

}  // namespace submaj
