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

#include <atomic>
#include <chrono>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "submaj/duality.hpp"
#include "submaj/inequalities.hpp"
#include "submaj/interpolation.hpp"
#include "submaj/json_io.hpp"
#include "submaj/spectral_traces.hpp"

namespace submaj {

/// One seeded verification campaign: which suites, which sizes, how many
/// trials, and the theta / p grids every applicable verdict runs over.
struct CampaignConfig {
    std::uint64_t seed = 42;
    std::vector<std::size_t> sizes = {2, 3, 4, 8, 16};
    int trials_per_size = 200;
    std::vector<double> theta_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::vector<double> p_grid = {1.0, 1.5, 2.0, 3.0,
                                  std::numeric_limits<double>::infinity()};
    std::vector<std::string> suites;  // defaulted to all registered suites
    int threads = 2;
    int duality_samples = 4;
    // Optional absolute tolerance replacing the per-comparison default in
    // single-comparison verdicts (margin is reported unchanged).
    std::optional<double> submajorization_tol_override;

    CampaignConfig();
    void validate() const;
};

struct VerdictRecord {
    std::string name;
    bool holds = false;
    bool expected_holds = true;
    double margin = 0.0;
    double tolerance = 0.0;
    double worst_t = -1.0;
    double theta = std::numeric_limits<double>::quiet_NaN();
    double p = std::numeric_limits<double>::quiet_NaN();

    bool unexpected() const { return holds != expected_holds; }
};

struct TrialReport {
    std::string suite;
    std::size_t size = 0;
    int trial = 0;
    std::uint64_t campaign_seed = 0;
    std::uint64_t derived_seed = 0;
    std::vector<std::string> generators;
    std::vector<VerdictRecord> verdicts;
    double wall_time_ms = 0.0;
};

struct SuiteSummary {
    std::string name;
    bool expects_violation = false;
    long trials = 0;
    long verdicts = 0;
    long unexpected = 0;
    double worst_margin = -std::numeric_limits<double>::infinity();
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<TrialReport> trials;
    std::vector<SuiteSummary> suites;
    long total_verdicts = 0;
    long unexpected = 0;
    double worst_margin = -std::numeric_limits<double>::infinity();
    double wall_time_ms = 0.0;
};

namespace harness {

struct TrialBody {
    std::vector<std::string> generators;
    std::vector<VerdictRecord> verdicts;
};

inline std::uint64_t trial_stream(const CampaignConfig& cfg, std::string_view suite,
                                  std::size_t n, int trial, std::uint64_t role) {
    return derive_stream(cfg.seed, {hash_label(suite), static_cast<std::uint64_t>(n),
                                    static_cast<std::uint64_t>(trial), role});
}

inline VerdictRecord record(const InequalityVerdict& v, bool expected_holds = true) {
    VerdictRecord r;
    r.name = v.name;
    r.holds = v.holds;
    r.expected_holds = expected_holds;
    r.margin = v.margin;
    r.tolerance = v.tolerance_used;
    r.worst_t = v.worst_t;
    r.theta = v.theta;
    r.p = v.p;
    return r;
}

inline VerdictRecord record_submaj(std::string name, const SubmajorizationVerdict& v,
                                   double theta) {
    VerdictRecord r;
    r.name = std::move(name);
    r.holds = v.holds;
    r.margin = v.margin;
    r.tolerance = v.tolerance_used;
    r.worst_t = v.worst_t;
    r.theta = theta;
    return r;
}

/// Random contraction of support rank <= k: u diag(s) v^* with Haar u, v and
/// s uniform on [0, 1].
inline Matrix gen_contraction(std::size_t n, std::size_t k, Rng& rng) {
    const Matrix u = haar_unitary(n, rng);
    const Matrix v = haar_unitary(n, rng);
    std::vector<double> s(k);
    for (auto& x : s) x = rng.uniform();
    Matrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx z = 0.0;
            for (std::size_t t = 0; t < k; ++t) z += s[t] * u(i, t) * std::conj(v(j, t));
            c(i, j) = z;
        }
    return c;
}

// --- suite bodies ---------------------------------------------------------

inline TrialBody suite_theta_product_selfadjoint(const CampaignConfig& cfg, std::size_t n,
                                                 int trial) {
    TrialBody body;
    const bool singular = trial % 4 == 3;
    const Matrix a =
        gen_hermitian(n, trial_stream(cfg, "theta_product_selfadjoint", n, trial, 0), 2.0);
    const Matrix b =
        gen_psd(n, trial_stream(cfg, "theta_product_selfadjoint", n, trial, 1), singular);
    body.generators = {"hermitian(cap=2)", singular ? "psd(singular)" : "psd"};
    for (double theta : cfg.theta_grid)
        body.verdicts.push_back(record(theta_product_selfadjoint(a, b, theta)));
    return body;
}

inline TrialBody suite_theta_product_general(const CampaignConfig& cfg, std::size_t n,
                                              int trial) {
    TrialBody body;
    const bool singular = trial % 4 == 3;
    const Matrix a = gen_ginibre(n, trial_stream(cfg, "theta_product_general", n, trial, 0));
    const Matrix b =
        gen_psd(n, trial_stream(cfg, "theta_product_general", n, trial, 1), singular);
    body.generators = {"ginibre", singular ? "psd(singular)" : "psd"};
    for (double theta : cfg.theta_grid)
        body.verdicts.push_back(record(theta_product_general(a, b, theta)));
    return body;
}

inline TrialBody suite_counterexample_tr(const CampaignConfig& cfg, std::size_t n, int trial) {
    TrialBody body;
    Rng rng(trial_stream(cfg, "counterexample_tr", n, trial, 0));
    const double mu = -1.0 + 2.0 * rng.uniform();
    const double lambda = mu + 0.25 + 2.0 * rng.uniform();
    body.generators = {"lambda=" + std::to_string(lambda), "mu=" + std::to_string(mu)};
    for (double theta : cfg.theta_grid)
        body.verdicts.push_back(record(counterexample_tr(lambda, mu, theta),
                                       /*expected_holds=*/false));
    return body;
}

inline TrialBody suite_counterexample_pointwise(const CampaignConfig& cfg, std::size_t n,
                                                int trial) {
    TrialBody body;
    body.generators = {"hermitian(2x2)", "psd(2x2)"};
    const auto w = counterexample_pointwise_search(
        trial_stream(cfg, "counterexample_pointwise", n, trial, 0), 4000);
    VerdictRecord r;
    r.name = "counterexample_pointwise";
    r.holds = !w.found;  // the pointwise inequality held on every draw
    r.expected_holds = false;
    r.margin = w.found ? w.excess : 0.0;
    body.verdicts.push_back(std::move(r));
    return body;
}

inline TrialBody suite_two_weight_max_bound(const CampaignConfig& cfg, std::size_t n,
                                             int trial) {
    TrialBody body;
    const Matrix a = gen_ginibre(n, trial_stream(cfg, "two_weight_max_bound", n, trial, 0));
    const Matrix b0 =
        gen_psd(n, trial_stream(cfg, "two_weight_max_bound", n, trial, 1), trial % 5 == 4);
    const Matrix b1 =
        gen_psd(n, trial_stream(cfg, "two_weight_max_bound", n, trial, 2), trial % 7 == 6);
    body.generators = {"ginibre", "psd", "psd"};
    for (double theta : cfg.theta_grid)
        body.verdicts.push_back(record(two_weight_max_bound(a, b0, b1, theta)));
    return body;
}

inline TrialBody suite_two_weight_direct_sum(const CampaignConfig& cfg, std::size_t n,
                                              int trial) {
    TrialBody body;
    const bool herm = trial % 2 == 0;
    const std::uint64_t sa = trial_stream(cfg, "two_weight_direct_sum", n, trial, 0);
    const Matrix a = herm ? gen_hermitian(n, sa, 2.0) : gen_ginibre(n, sa);
    const Matrix b0 =
        gen_psd(n, trial_stream(cfg, "two_weight_direct_sum", n, trial, 1), trial % 5 == 4);
    const Matrix b1 =
        gen_psd(n, trial_stream(cfg, "two_weight_direct_sum", n, trial, 2), trial % 7 == 6);
    body.generators = {herm ? "hermitian(cap=2)" : "ginibre", "psd", "psd"};

    const auto bp0 = detail::validate_psd(b0, "two_weight_direct_sum");
    const auto bp1 = detail::validate_psd(b1, "two_weight_direct_sum");
    const SingularProfile max_bound = profile_max(
        profile_direct_sum(profile_of(a * b1), profile_of(a.adjoint() * b0)),
        profile_direct_sum(profile_of(b0 * a), profile_of(b1 * a.adjoint())));

    for (double theta : cfg.theta_grid) {
        body.verdicts.push_back(record(two_weight_direct_sum(a, b0, b1, theta)));
        // the same left side against the max-of-block-profiles bound, so the
        // report carries both margins for comparison
        const SingularProfile left = profile_direct_sum(
            profile_of(detail::power(bp0, theta) * a * detail::power(bp1, 1.0 - theta)),
            profile_of(detail::power(bp1, theta) * a.adjoint() *
                       detail::power(bp0, 1.0 - theta)));
        body.verdicts.push_back(
            record_submaj("two_weight_direct_sum_vs_max", submajorizes(left, max_bound), theta));
    }
    return body;
}

inline TrialBody suite_holder_interpolation(const CampaignConfig& cfg, std::size_t n,
                                            int trial) {
    TrialBody body;
    const Matrix a = gen_ginibre(n, trial_stream(cfg, "holder_interpolation", n, trial, 0));
    const Matrix b0 =
        gen_psd(n, trial_stream(cfg, "holder_interpolation", n, trial, 1), trial % 5 == 4);
    const Matrix b1 =
        gen_psd(n, trial_stream(cfg, "holder_interpolation", n, trial, 2), false);
    body.generators = {"ginibre", "psd", "psd"};

    std::vector<NormDescriptor> specs = {NormDescriptor::schatten(1.0),
                                         NormDescriptor::schatten(2.0),
                                         NormDescriptor::schatten(3.0)};
    for (std::size_t k = 1; k <= n; ++k)
        specs.push_back(NormDescriptor::ky_fan(static_cast<int>(k)));

    for (double theta : cfg.theta_grid)
        for (const auto& spec : specs)
            body.verdicts.push_back(record(holder_norm_interpolation(a, b0, b1, theta, spec)));
    return body;
}

inline TrialBody suite_schatten_half_power(const CampaignConfig& cfg, std::size_t n,
                                           int trial) {
    TrialBody body;
    const Matrix a = gen_hermitian(n, trial_stream(cfg, "schatten_half_power", n, trial, 0), 2.0);
    const Matrix b0 =
        gen_psd(n, trial_stream(cfg, "schatten_half_power", n, trial, 1), trial % 4 == 3);
    const Matrix b1 =
        gen_psd(n, trial_stream(cfg, "schatten_half_power", n, trial, 2), false);
    body.generators = {"hermitian(cap=2)", "psd", "psd"};
    for (double p : cfg.p_grid) {
        if (std::isinf(p)) continue;  // stated for finite p only
        body.verdicts.push_back(record(schatten_half_power(a, b0, b1, p)));
    }
    return body;
}

inline TrialBody suite_golden_thompson_symmetric(const CampaignConfig& cfg, std::size_t n,
                                                 int trial) {
    TrialBody body;
    const Matrix a =
        gen_hermitian(n, trial_stream(cfg, "golden_thompson_symmetric", n, trial, 0), 2.0);
    const Matrix b =
        gen_hermitian(n, trial_stream(cfg, "golden_thompson_symmetric", n, trial, 1), 2.0);
    // the norm rotates through the p grid trial by trial
    const double p = cfg.p_grid[static_cast<std::size_t>(trial) % cfg.p_grid.size()];
    const NormDescriptor spec = NormDescriptor::schatten(p);
    body.generators = {"hermitian(cap=2)", "hermitian(cap=2)", "norm=" + spec.label()};
    for (double theta : cfg.theta_grid)
        body.verdicts.push_back(record(golden_thompson_symmetric(a, b, theta, spec)));
    return body;
}

inline TrialBody suite_golden_thompson_exp_sum(const CampaignConfig& cfg, std::size_t n,
                                               int trial) {
    TrialBody body;
    const Matrix a =
        gen_hermitian(n, trial_stream(cfg, "golden_thompson_exp_sum", n, trial, 0), 2.0);
    const Matrix b =
        gen_hermitian(n, trial_stream(cfg, "golden_thompson_exp_sum", n, trial, 1), 2.0);
    body.generators = {"hermitian(cap=2)", "hermitian(cap=2)"};
    for (double p : cfg.p_grid)
        body.verdicts.push_back(record(golden_thompson_exp_sum(a, b, p)));
    return body;
}

inline TrialBody suite_three_lines(const CampaignConfig& cfg, std::size_t n, int trial) {
    TrialBody body;
    const std::size_t m = std::min<std::size_t>(n, 8);
    const Matrix a = gen_ginibre(m, trial_stream(cfg, "three_lines", n, trial, 0));
    const Matrix b = gen_hermitian(m, trial_stream(cfg, "three_lines", n, trial, 1), 1.0);
    Rng rng(trial_stream(cfg, "three_lines", n, trial, 2));
    const std::size_t k = 1 + rng.next_u64() % m;
    const Matrix c = gen_contraction(m, k, rng);
    body.generators = {"ginibre", "hermitian(cap=1)",
                       "contraction(rank<=" + std::to_string(k) + ")"};

    std::vector<double> thetas;
    thetas.push_back(0.0);
    for (double t : cfg.theta_grid) thetas.push_back(t);
    thetas.push_back(1.0);
    std::vector<double> ys;
    for (double y = -8.0; y <= 8.0 + 1e-12; y += 0.25) ys.push_back(y);

    const StripGrid grid = strip_evaluate(a, b, c, thetas, ys);
    const ThreeLinesResult tl = three_lines_check(grid);

    VerdictRecord r1;
    r1.name = "three_lines";
    r1.holds = tl.holds;
    r1.margin = tl.interior_max - tl.boundary_max;
    r1.tolerance = kThreeLinesRtol * (1.0 + tl.boundary_max);
    body.verdicts.push_back(std::move(r1));

    double fmax = 0.0;
    for (const auto& row : grid.values)
        for (const cplx& v : row) fmax = std::max(fmax, std::abs(v));
    VerdictRecord r2;
    r2.name = "strip_bound";
    r2.margin = fmax - grid.bound_constant;
    r2.tolerance = kThreeLinesRtol * (1.0 + grid.bound_constant);
    r2.holds = r2.margin <= r2.tolerance;
    body.verdicts.push_back(std::move(r2));
    return body;
}

inline TrialBody suite_boundary_submajorization(const CampaignConfig& cfg, std::size_t n,
                                                int trial) {
    TrialBody body;
    const Matrix a =
        gen_hermitian(n, trial_stream(cfg, "boundary_submajorization", n, trial, 0), 2.0);
    const Matrix b =
        gen_hermitian(n, trial_stream(cfg, "boundary_submajorization", n, trial, 1), 2.0);
    const Matrix a_gen =
        gen_ginibre(n, trial_stream(cfg, "boundary_submajorization", n, trial, 2));
    body.generators = {"hermitian(cap=2)", "hermitian(cap=2)", "ginibre"};

    const EigResult eig_b = eig_hermitian(b);
    const Matrix eb = exp_scaled_hermitian(eig_b, 1.0);
    for (double theta : cfg.theta_grid) {
        body.verdicts.push_back(
            record_submaj("boundary_submajorization",
                          boundary_submajorization_bound(a, b, theta), theta));
        // the max-variant holds with no self-adjointness assumption on a
        const Matrix left = exp_scaled_hermitian(eig_b, theta) * a_gen *
                            exp_scaled_hermitian(eig_b, 1.0 - theta);
        const SingularProfile right =
            profile_max(profile_of(a_gen * eb), profile_of(eb * a_gen));
        body.verdicts.push_back(record_submaj(
            "boundary_submajorization_max", submajorizes(profile_of(left), right), theta));
    }
    return body;
}

inline TrialBody suite_duality(const CampaignConfig& cfg, std::size_t n, int trial) {
    TrialBody body;
    const Matrix a = gen_ginibre(n, trial_stream(cfg, "duality", n, trial, 0));
    body.generators = {"ginibre"};
    const SingularProfile prof = profile_of(a);

    for (std::size_t k = 0; k <= n; ++k) {
        const double ref = ky_fan(prof, static_cast<double>(k));
        const std::uint64_t s = trial_stream(cfg, "duality", n, trial, 100 + k);
        const double val =
            ky_fan_via_duality(a, static_cast<int>(k), cfg.duality_samples, s);
        VerdictRecord r1;
        r1.name = "duality_equality";
        r1.worst_t = static_cast<double>(k);
        r1.margin = std::abs(val - ref);
        r1.tolerance = 1e-10 * (1.0 + ref);
        r1.holds = r1.margin <= r1.tolerance;
        body.verdicts.push_back(std::move(r1));

        if (k >= 1 && cfg.duality_samples >= 1) {
            const double rb =
                random_contraction_bound(a, static_cast<int>(k), cfg.duality_samples, s);
            VerdictRecord r2;
            r2.name = "contraction_upper_bound";
            r2.worst_t = static_cast<double>(k);
            r2.margin = rb - ref;
            r2.tolerance = 1e-10 * (1.0 + ref);
            r2.holds = r2.margin <= r2.tolerance;
            body.verdicts.push_back(std::move(r2));
        }
    }

    // certificate validity at the half-rank point
    const int k = static_cast<int>(n / 2 + 1);
    const auto cert = optimal_contraction(a, k);
    VerdictRecord r3;
    r3.name = "certificate_valid";
    r3.worst_t = static_cast<double>(k);
    const double cnorm = operator_norm(cert.c);
    const double attained_err =
        std::abs(cert.attained - ky_fan(prof, static_cast<double>(k)));
    r3.margin = std::max(cnorm - 1.0, attained_err);
    r3.tolerance = 1e-10 * (1.0 + cert.attained);
    r3.holds = r3.margin <= r3.tolerance && cert.support_rank == static_cast<std::size_t>(k);
    body.verdicts.push_back(std::move(r3));
    return body;
}

inline TrialBody suite_spectral_traces(const CampaignConfig& cfg, std::size_t n, int trial) {
    TrialBody body;
    const Matrix a = gen_ginibre(n, trial_stream(cfg, "spectral_traces", n, trial, 0));
    const Matrix b = gen_ginibre(n, trial_stream(cfg, "spectral_traces", n, trial, 1));
    const Matrix b_psd =
        gen_psd(n, trial_stream(cfg, "spectral_traces", n, trial, 2), trial % 4 == 3);
    body.generators = {"ginibre", "ginibre", "psd"};
    const double theta = cfg.theta_grid[static_cast<std::size_t>(trial) % cfg.theta_grid.size()];

    const double tol_ab = 1e-8 * (1.0 + operator_norm(a) * operator_norm(b));
    const auto m1 = lambda_ab_equals_ba(a, b, tol_ab);
    VerdictRecord r1;
    r1.name = "lambda_ab_equals_ba";
    r1.holds = m1.holds;
    r1.margin = m1.max_mismatch;
    r1.tolerance = tol_ab;
    body.verdicts.push_back(std::move(r1));

    const double tol_interp = 1e-8 * (1.0 + operator_norm(a) * operator_norm(b_psd));
    const auto m2 = lambda_interpolated(a, b_psd, theta, tol_interp);
    VerdictRecord r2;
    r2.name = "lambda_interpolated";
    r2.holds = m2.holds;
    r2.margin = m2.max_mismatch;
    r2.tolerance = tol_interp;
    r2.theta = theta;
    body.verdicts.push_back(std::move(r2));

    const auto t3 = trace_theta_identity(a, b_psd, theta);
    VerdictRecord r3;
    r3.name = "trace_theta_identity";
    r3.holds = t3.holds;
    r3.margin = std::max(t3.dev_ab_ba, t3.dev_ab_interp);
    r3.tolerance = t3.tolerance;
    r3.theta = theta;
    body.verdicts.push_back(std::move(r3));
    return body;
}

struct SuiteDef {
    std::string name;
    bool expects_violation = false;
    bool runs_once_per_trial = false;  // size-independent suites run at one size only
    TrialBody (*fn)(const CampaignConfig&, std::size_t, int) = nullptr;
};

inline const std::vector<SuiteDef>& suite_registry() {
    static const std::vector<SuiteDef> defs = {
        {"theta_product_selfadjoint", false, false, &suite_theta_product_selfadjoint},
        {"theta_product_general", false, false, &suite_theta_product_general},
        {"counterexample_tr", true, true, &suite_counterexample_tr},
        {"counterexample_pointwise", true, true, &suite_counterexample_pointwise},
        {"two_weight_max_bound", false, false, &suite_two_weight_max_bound},
        {"two_weight_direct_sum", false, false, &suite_two_weight_direct_sum},
        {"holder_interpolation", false, false, &suite_holder_interpolation},
        {"schatten_half_power", false, false, &suite_schatten_half_power},
        {"golden_thompson_symmetric", false, false, &suite_golden_thompson_symmetric},
        {"golden_thompson_exp_sum", false, false, &suite_golden_thompson_exp_sum},
        {"three_lines", false, false, &suite_three_lines},
        {"boundary_submajorization", false, false, &suite_boundary_submajorization},
        {"duality", false, false, &suite_duality},
        {"spectral_traces", false, false, &suite_spectral_traces},
    };
    return defs;
}

inline const SuiteDef* find_suite(std::string_view name) {
    for (const auto& d : suite_registry())
        if (d.name == name) return &d;
    return nullptr;
}

}  // namespace harness

inline std::vector<std::string> default_suite_names() {
    std::vector<std::string> names;
    for (const auto& d : harness::suite_registry()) names.push_back(d.name);
    return names;
}

/// Campaign suite exercising a given inequality operation, for addressing
/// single operations from the command line.
inline std::string suite_for_inequality(const std::string& op) {
    if (op == "counterexample_pointwise_search") return "counterexample_pointwise";
    if (op == "holder_norm_interpolation") return "holder_interpolation";
    if (harness::find_suite(op)) return op;
    throw input_error("unknown inequality '" + op + "'");
}

inline CampaignConfig::CampaignConfig() : suites(default_suite_names()) {}

inline void CampaignConfig::validate() const {
    if (sizes.empty()) throw input_error("campaign: sizes must be non-empty");
    for (std::size_t n : sizes)
        if (n < 1) throw input_error("campaign: sizes must all be >= 1");
    if (trials_per_size < 1) throw input_error("campaign: trials_per_size must be >= 1");
    for (double t : theta_grid)
        if (!(t >= 0.0 && t <= 1.0)) throw input_error("campaign: theta_grid must lie in [0,1]");
    for (double p : p_grid)
        if (!(p >= 1.0)) throw input_error("campaign: p_grid entries must be >= 1 (or inf)");
    if (duality_samples < 0) throw input_error("campaign: duality_samples must be >= 0");
    for (const auto& s : suites)
        if (!harness::find_suite(s)) throw input_error("campaign: unknown suite '" + s + "'");
}

/// Run one trial of one suite; pure function of (config, suite, size, trial).
inline TrialReport run_trial(const CampaignConfig& cfg, const std::string& suite,
                             std::size_t size, int trial) {
    const auto* def = harness::find_suite(suite);
    if (!def) throw input_error("run_trial: unknown suite '" + suite + "'");
    const auto t0 = std::chrono::steady_clock::now();
    harness::TrialBody body = def->fn(cfg, size, trial);

    TrialReport rep;
    rep.suite = suite;
    rep.size = size;
    rep.trial = trial;
    rep.campaign_seed = cfg.seed;
    rep.derived_seed = harness::trial_stream(cfg, suite, size, trial, 0);
    rep.generators = std::move(body.generators);
    rep.verdicts = std::move(body.verdicts);
    for (auto& v : rep.verdicts) {
        v.expected_holds = !def->expects_violation;
        if (cfg.submajorization_tol_override && v.tolerance > 0.0) {
            v.tolerance = *cfg.submajorization_tol_override;
            v.holds = v.margin <= v.tolerance;
        }
    }
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

/// Execute all configured suites over all (size, trial) combinations.
/// Trials are independent and scheduled over a worker pool; the report is
/// assembled in a fixed order, so identical configs give identical verdict
/// sets regardless of thread count.
inline CampaignReport run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    struct Key {
        std::string suite;
        std::size_t size;
        int trial;
    };
    std::vector<Key> keys;
    for (const auto& suite : cfg.suites) {
        const auto* def = harness::find_suite(suite);
        const std::size_t min_size = *std::min_element(cfg.sizes.begin(), cfg.sizes.end());
        for (std::size_t size : cfg.sizes) {
            if (def->runs_once_per_trial && size != min_size) continue;
            for (int trial = 0; trial < cfg.trials_per_size; ++trial)
                keys.push_back({suite, size, trial});
        }
    }

    std::vector<TrialReport> results(keys.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= keys.size()) return;
            try {
                results[i] = run_trial(cfg, keys[i].suite, keys[i].size, keys[i].trial);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, std::max<std::size_t>(keys.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t + 1 < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    CampaignReport report;
    report.config = cfg;
    report.trials = std::move(results);

    for (const auto& suite : cfg.suites) {
        const auto* def = harness::find_suite(suite);
        SuiteSummary sum;
        sum.name = suite;
        sum.expects_violation = def->expects_violation;
        report.suites.push_back(sum);
    }
    for (const auto& trial : report.trials) {
        auto& sum = *std::find_if(report.suites.begin(), report.suites.end(),
                                  [&](const SuiteSummary& s) { return s.name == trial.suite; });
        sum.trials += 1;
        for (const auto& v : trial.verdicts) {
            sum.verdicts += 1;
            report.total_verdicts += 1;
            if (v.unexpected()) {
                sum.unexpected += 1;
                report.unexpected += 1;
            }
            if (v.expected_holds) {
                const double excess = v.margin - v.tolerance;
                sum.worst_margin = std::max(sum.worst_margin, excess);
                report.worst_margin = std::max(report.worst_margin, excess);
            }
        }
    }
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

// --- serialization ---------------------------------------------------------

inline json campaign_config_to_json(const CampaignConfig& cfg) {
    json j;
    j["seed"] = cfg.seed;
    j["sizes"] = cfg.sizes;
    j["trials_per_size"] = cfg.trials_per_size;
    j["theta_grid"] = cfg.theta_grid;
    json pg = json::array();
    for (double p : cfg.p_grid) {
        if (std::isinf(p))
            pg.push_back("inf");
        else
            pg.push_back(p);
    }
    j["p_grid"] = std::move(pg);
    j["suites"] = cfg.suites;
    j["threads"] = cfg.threads;
    j["duality_samples"] = cfg.duality_samples;
    if (cfg.submajorization_tol_override)
        j["submajorization_tol_override"] = *cfg.submajorization_tol_override;
    return j;
}

inline CampaignConfig campaign_config_from_json(const json& j) {
    CampaignConfig cfg;
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("sizes")) cfg.sizes = j.at("sizes").get<std::vector<std::size_t>>();
    if (j.contains("trials_per_size")) cfg.trials_per_size = j.at("trials_per_size").get<int>();
    if (j.contains("theta_grid"))
        cfg.theta_grid = j.at("theta_grid").get<std::vector<double>>();
    if (j.contains("p_grid")) {
        cfg.p_grid.clear();
        for (const auto& e : j.at("p_grid")) {
            if (e.is_string() && e.get<std::string>() == "inf")
                cfg.p_grid.push_back(std::numeric_limits<double>::infinity());
            else
                cfg.p_grid.push_back(e.get<double>());
        }
    }
    if (j.contains("suites")) cfg.suites = j.at("suites").get<std::vector<std::string>>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("duality_samples"))
        cfg.duality_samples = j.at("duality_samples").get<int>();
    if (j.contains("submajorization_tol_override"))
        cfg.submajorization_tol_override = j.at("submajorization_tol_override").get<double>();
    return cfg;
}

namespace detail {
inline json finite_or(double x, const char* inf_tag) {
    if (std::isnan(x)) return nullptr;
    if (std::isinf(x)) return inf_tag;
    return x;
}
}  // namespace detail

inline json verdict_to_json(const VerdictRecord& v) {
    json j;
    j["name"] = v.name;
    j["holds"] = v.holds;
    j["expected_holds"] = v.expected_holds;
    j["margin"] = v.margin;
    j["tolerance"] = v.tolerance;
    j["worst_t"] = v.worst_t;
    j["theta"] = detail::finite_or(v.theta, "inf");
    j["p"] = detail::finite_or(v.p, "inf");
    // theta endpoints verify the literal statement only; flag them
    if (v.theta == 0.0 || v.theta == 1.0) j["boundary_theta"] = true;
    return j;
}

inline json trial_report_to_json(const TrialReport& t) {
    json j;
    j["suite"] = t.suite;
    j["size"] = t.size;
    j["trial"] = t.trial;
    j["campaign_seed"] = t.campaign_seed;
    j["seed"] = t.derived_seed;
    j["generators"] = t.generators;
    json vs = json::array();
    for (const auto& v : t.verdicts) vs.push_back(verdict_to_json(v));
    j["verdicts"] = std::move(vs);
    j["wall_time_ms"] = t.wall_time_ms;
    return j;
}

inline json campaign_report_to_json(const CampaignReport& r) {
    json j;
    j["schema_version"] = 1;
    j["config"] = campaign_config_to_json(r.config);
    json suites = json::array();
    for (const auto& s : r.suites) {
        json js;
        js["name"] = s.name;
        js["expects_violation"] = s.expects_violation;
        js["trials"] = s.trials;
        js["verdicts"] = s.verdicts;
        js["unexpected"] = s.unexpected;
        js["worst_margin"] =
            std::isinf(s.worst_margin) ? json(nullptr) : json(s.worst_margin);
        suites.push_back(std::move(js));
    }
    j["suites"] = std::move(suites);
    json summary;
    summary["total_verdicts"] = r.total_verdicts;
    summary["unexpected"] = r.unexpected;
    summary["worst_margin"] =
        std::isinf(r.worst_margin) ? json(nullptr) : json(r.worst_margin);
    summary["wall_time_ms"] = r.wall_time_ms;
    j["summary"] = std::move(summary);
    json trials = json::array();
    for (const auto& t : r.trials) trials.push_back(trial_report_to_json(t));
    j["trials"] = std::move(trials);
    return j;
}

inline std::string campaign_report_to_csv(const CampaignReport& r) {
    std::ostringstream out;
    out << "suite,size,trial,name,theta,p,holds,expected_holds,margin,tolerance,worst_t\n";
    for (const auto& t : r.trials)
        for (const auto& v : t.verdicts) {
            out << t.suite << ',' << t.size << ',' << t.trial << ',' << v.name << ',';
            if (std::isnan(v.theta))
                out << ',';
            else
                out << v.theta << ',';
            if (std::isnan(v.p))
                out << ',';
            else if (std::isinf(v.p))
                out << "inf,";
            else
                out << v.p << ',';
            out << (v.holds ? "true" : "false") << ',' << (v.expected_holds ? "true" : "false")
                << ',' << v.margin << ',' << v.tolerance << ',' << v.worst_t << '\n';
        }
    return out.str();
}

/// Re-run one trial from its descriptor "suite:size:trial" (same campaign
/// seed and grids), reproducing its verdicts standalone.
inline TrialReport replay_trial(const CampaignConfig& cfg, const std::string& descriptor) {
    const auto c1 = descriptor.find(':');
    const auto c2 = descriptor.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw input_error("replay: descriptor must be suite:size:trial");
    const std::string suite = descriptor.substr(0, c1);
    std::size_t size = 0;
    int trial = -1;
    try {
        size = static_cast<std::size_t>(std::stoul(descriptor.substr(c1 + 1, c2 - c1 - 1)));
        trial = std::stoi(descriptor.substr(c2 + 1));
    } catch (const std::exception&) {
        throw input_error("replay: bad size/trial in descriptor");
    }
    if (!harness::find_suite(suite)) throw input_error("replay: unknown suite '" + suite + "'");
    if (size < 1 || trial < 0) throw input_error("replay: size must be >= 1 and trial >= 0");
    return run_trial(cfg, suite, size, trial);
}

}  // namespace submaj
