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

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "submaj/submaj.hpp"

namespace {

using namespace submaj;

int cmd_verify(const CampaignConfig& cfg, const std::string& json_path,
               const std::string& csv_path, const std::string& replay_desc, bool quiet) {
    if (!replay_desc.empty()) {
        const TrialReport trial = replay_trial(cfg, replay_desc);
        std::cout << trial_report_to_json(trial).dump(2) << "\n";
        for (const auto& v : trial.verdicts)
            if (v.unexpected()) return 1;
        return 0;
    }

    const CampaignReport report = run_campaign(cfg);
    if (!json_path.empty()) save_json_file(json_path, campaign_report_to_json(report));
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw input_error("cannot write file: " + csv_path);
        out << campaign_report_to_csv(report);
    }

    if (!quiet) {
        std::printf("%-28s %10s %10s %12s %14s\n", "suite", "trials", "verdicts", "unexpected",
                    "worst margin");
        for (const auto& s : report.suites) {
            std::printf("%-28s %10ld %10ld %12ld %14.3e%s\n", s.name.c_str(), s.trials,
                        s.verdicts, s.unexpected,
                        std::isinf(s.worst_margin) ? 0.0 : s.worst_margin,
                        s.expects_violation ? "  [expects violation]" : "");
        }
        std::printf("total: %ld verdicts, %ld unexpected, %.1f ms\n", report.total_verdicts,
                    report.unexpected, report.wall_time_ms);
    }
    return report.unexpected == 0 ? 0 : 1;
}

int cmd_check(const std::string& left_path, const std::string& right_path, double tol,
              bool tol_set) {
    const SingularProfile left = load_profile_or_matrix(left_path);
    const SingularProfile right = load_profile_or_matrix(right_path);
    const SubmajorizationVerdict v =
        tol_set ? submajorizes(left, right, tol) : submajorizes(left, right);
    std::printf("left << right: %s (margin=%.12g at t=%g, tol=%.3g)\n",
                v.holds ? "holds" : "fails", v.margin, v.worst_t, v.tolerance_used);
    return v.holds ? 0 : 1;
}

int cmd_certify(const std::string& path, int k, int samples, std::uint64_t seed,
                const std::string& json_path) {
    const Matrix a = load_matrix(path);
    const ContractionCertificate cert = optimal_contraction(a, k);
    const double reference = ky_fan(profile_of(a), static_cast<double>(k));
    double attained = cert.attained;
    if (samples > 0 && k > 0)
        attained = std::max(attained, random_contraction_bound(a, k, samples, seed));

    json j;
    j["c"] = matrix_to_json(cert.c);
    j["support_rank"] = cert.support_rank;
    j["attained"] = attained;
    j["ky_fan_reference"] = reference;
    if (!json_path.empty())
        save_json_file(json_path, j);
    else
        std::cout << j.dump(2) << "\n";
    return std::abs(attained - reference) <= 1e-10 * (1.0 + reference) ? 0 : 1;
}

int cmd_strip(const std::string& a_path, const std::string& b_path, const std::string& c_path,
              double ymax, double ystep, double theta_step, const std::string& out_path) {
    const Matrix a = load_matrix(a_path);
    const Matrix b = load_matrix(b_path);
    const Matrix c = load_matrix(c_path);

    std::vector<double> thetas;
    for (double t = 0.0; t < 1.0 - 1e-12; t += theta_step) thetas.push_back(t);
    thetas.push_back(1.0);
    std::vector<double> ys;
    for (double y = -ymax; y <= ymax + 1e-12; y += ystep) ys.push_back(y);

    const StripGrid grid = strip_evaluate(a, b, c, thetas, ys);
    std::ostringstream csv;
    csv << "theta,y,re,im,abs\n";
    for (std::size_t ti = 0; ti < grid.thetas.size(); ++ti)
        for (std::size_t yi = 0; yi < grid.imag_values.size(); ++yi) {
            const cplx v = grid.values[ti][yi];
            csv << grid.thetas[ti] << ',' << grid.imag_values[yi] << ',' << v.real() << ','
                << v.imag() << ',' << std::abs(v) << '\n';
        }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw input_error("cannot write file: " + out_path);
        out << csv.str();
    } else {
        std::cout << csv.str();
    }
    return 0;
}

int cmd_spectral(const std::string& a_path, const std::string& b_path, double tol, bool tol_set,
                 const std::string& json_path) {
    const Matrix a = load_matrix(a_path);
    const Matrix b = load_matrix(b_path);
    if (!tol_set) tol = 1e-8 * (1.0 + operator_norm(a) * operator_norm(b));

    const auto lab = eigenvalues_ordered(a * b);
    const auto lba = eigenvalues_ordered(b * a);
    const auto match = lambda_ab_equals_ba(a, b, tol);

    json j;
    auto dump_values = [](const EigenvalueMultiset& m) {
        json arr = json::array();
        for (const cplx& z : m.values) arr.push_back({z.real(), z.imag()});
        return arr;
    };
    j["lambda_ab"] = dump_values(lab);
    j["lambda_ba"] = dump_values(lba);
    j["holds"] = match.holds;
    j["max_mismatch"] = match.max_mismatch;
    j["tolerance"] = tol;
    if (!json_path.empty())
        save_json_file(json_path, j);
    else
        std::cout << j.dump(2) << "\n";
    return match.holds ? 0 : 1;
}

int cmd_reproduce(const std::string& what, double lambda, double mu, double theta) {
    if (what != "counterexample-tr")
        throw input_error("reproduce: unknown target '" + what + "' (try counterexample-tr)");

    const InequalityVerdict v = counterexample_tr(lambda, mu, theta);

    const Matrix a{{0.0, 1.0}, {0.0, 0.0}};
    const Matrix b = Matrix::diagonal(std::vector<double>{lambda, mu});
    const EigResult eig_b = eig_hermitian(b);
    const SingularProfile left = profile_of(exp_scaled_hermitian(eig_b, theta) * a *
                                            exp_scaled_hermitian(eig_b, 1.0 - theta));
    const SingularProfile right = profile_of(a * exp_scaled_hermitian(eig_b, 1.0));

    std::printf("counterexample-tr with lambda=%g, mu=%g, theta=%g\n", lambda, mu, theta);
    std::printf("a = [[0,1],[0,0]], b = diag(lambda, mu)\n");
    std::printf("left profile  mu(e^{theta b} a e^{(1-theta) b}) = [%.17g, %.17g]\n",
                left.at(0), left.at(1));
    std::printf("right profile mu(a e^b)                         = [%.17g, %.17g]\n",
                right.at(0), right.at(1));
    std::printf("margin = %.17g at t = %g\n", v.margin, v.worst_t);
    std::printf("verdict: submajorization %s\n", v.holds ? "holds" : "fails");
    return v.holds ? 1 : 0;  // reproducing the counterexample means it fails
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix submajorization and symmetric-norm inequality harness"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run seeded verification campaigns");
    CampaignConfig cfg;
    std::string config_path, json_path, csv_path, replay_desc;
    bool quiet = false;
    verify->add_option("--config", config_path, "campaign config JSON (mirrors all flags)");
    verify->add_option("--suite", cfg.suites, "suites to run (default: all)")
        ->delimiter(',');
    std::vector<std::string> inequalities;
    verify->add_option("--inequality", inequalities,
                       "address single inequality operations by name")
        ->delimiter(',');
    verify->add_option("--seed", cfg.seed, "campaign seed");
    verify->add_option("--sizes", cfg.sizes, "matrix sizes")->delimiter(',');
    verify->add_option("--trials", cfg.trials_per_size, "trials per size");
    verify->add_option("--theta-grid", cfg.theta_grid, "theta grid")->delimiter(',');
    verify->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
    verify->add_option("--duality-samples", cfg.duality_samples,
                       "random contractions per duality check");
    double tol_override = -1.0;
    verify->add_option("--tol", tol_override,
                       "override the submajorization comparison tolerance");
    verify->add_option("--json", json_path, "write the full report as JSON");
    verify->add_option("--csv", csv_path, "write per-verdict rows as CSV");
    verify->add_option("--replay", replay_desc, "re-run one trial (suite:size:trial)");
    verify->add_flag("--quiet", quiet, "suppress the summary table");

    // check
    auto* check = app.add_subcommand("check", "submajorization verdict between two files");
    std::string check_a, check_b;
    double check_tol = 0.0;
    check->add_option("left", check_a, "matrix or profile JSON file")->required();
    check->add_option("right", check_b, "matrix or profile JSON file")->required();
    auto* check_tol_opt = check->add_option("--tol", check_tol, "comparison tolerance");

    // certify
    auto* certify = app.add_subcommand("certify", "Ky Fan duality certificate");
    std::string cert_path, cert_json;
    int cert_k = 0, cert_samples = 0;
    std::uint64_t cert_seed = 42;
    certify->add_option("matrix", cert_path, "matrix JSON file")->required();
    certify->add_option("--k", cert_k, "support rank bound")->required();
    certify->add_option("--samples", cert_samples, "random contractions to try as well");
    certify->add_option("--seed", cert_seed, "seed for the random contractions");
    certify->add_option("--json", cert_json, "write the certificate to a file");

    // strip
    auto* strip = app.add_subcommand("strip", "sample F(z) on the interpolation strip as CSV");
    std::string strip_a, strip_b, strip_c, strip_out;
    double ymax = 8.0, ystep = 0.25, theta_step = 0.1;
    strip->add_option("a", strip_a, "matrix JSON file")->required();
    strip->add_option("b", strip_b, "Hermitian matrix JSON file")->required();
    strip->add_option("c", strip_c, "matrix JSON file")->required();
    strip->add_option("--ymax", ymax, "imaginary range half-width");
    strip->add_option("--ystep", ystep, "imaginary grid step");
    strip->add_option("--theta-step", theta_step, "real-part grid step");
    strip->add_option("--out", strip_out, "write CSV here instead of stdout");

    // spectral
    auto* spectral = app.add_subcommand("spectral", "Lambda(ab) vs Lambda(ba) match report");
    std::string spec_a, spec_b, spec_json;
    double spec_tol = 0.0;
    spectral->add_option("a", spec_a, "matrix JSON file")->required();
    spectral->add_option("b", spec_b, "matrix JSON file")->required();
    auto* spec_tol_opt = spectral->add_option("--tol", spec_tol, "matching tolerance");
    spectral->add_option("--json", spec_json, "write the report to a file");

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "reproduce a named counterexample");
    std::string what = "counterexample-tr";
    double r_lambda = 2.0, r_mu = 0.0, r_theta = 0.5;
    reproduce->add_option("what", what, "counterexample-tr");
    reproduce->add_option("--lambda", r_lambda, "larger diagonal entry of b");
    reproduce->add_option("--mu", r_mu, "smaller diagonal entry of b");
    reproduce->add_option("--theta", r_theta, "interpolation parameter");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            if (!config_path.empty()) {
                CampaignConfig from_file = campaign_config_from_json(load_json_file(config_path));
                // explicit flags win over the config file
                if (verify->count("--suite") == 0) cfg.suites = from_file.suites;
                if (verify->count("--seed") == 0) cfg.seed = from_file.seed;
                if (verify->count("--sizes") == 0) cfg.sizes = from_file.sizes;
                if (verify->count("--trials") == 0)
                    cfg.trials_per_size = from_file.trials_per_size;
                if (verify->count("--theta-grid") == 0) cfg.theta_grid = from_file.theta_grid;
                if (verify->count("--threads") == 0) cfg.threads = from_file.threads;
                if (verify->count("--duality-samples") == 0)
                    cfg.duality_samples = from_file.duality_samples;
                cfg.p_grid = from_file.p_grid;
                if (from_file.submajorization_tol_override)
                    cfg.submajorization_tol_override = from_file.submajorization_tol_override;
            }
            if (!inequalities.empty()) {
                if (verify->count("--suite") == 0 && config_path.empty()) cfg.suites.clear();
                for (const auto& op : inequalities) {
                    const std::string suite = suite_for_inequality(op);
                    if (std::find(cfg.suites.begin(), cfg.suites.end(), suite) ==
                        cfg.suites.end())
                        cfg.suites.push_back(suite);
                }
            }
            if (tol_override >= 0.0) cfg.submajorization_tol_override = tol_override;
            return cmd_verify(cfg, json_path, csv_path, replay_desc, quiet);
        }
        if (check->parsed())
            return cmd_check(check_a, check_b, check_tol, check_tol_opt->count() > 0);
        if (certify->parsed())
            return cmd_certify(cert_path, cert_k, cert_samples, cert_seed, cert_json);
        if (strip->parsed())
            return cmd_strip(strip_a, strip_b, strip_c, ymax, ystep, theta_step, strip_out);
        if (spectral->parsed())
            return cmd_spectral(spec_a, spec_b, spec_tol, spec_tol_opt->count() > 0, spec_json);
        if (reproduce->parsed()) return cmd_reproduce(what, r_lambda, r_mu, r_theta);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
