#include <curvosc/dynamics.hpp>
#include <curvosc/identities.hpp>
#include <curvosc/report.hpp>
#include <curvosc/spectrum.hpp>
#include <curvosc/sturm_liouville.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using curvosc::report::fmt17;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // verification or oracle failure
constexpr int kExitUsage = 2;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << text;
}

void emit_json(const std::string& path, const json& j) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty())
        std::cout << text;
    else
        write_text(path, text);
}

std::string read_config_echo(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream is(path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

// Plain key=value configuration: each key becomes --key=value for the
// invoked subcommand unless the flag was given explicitly (flags win).
// '#' starts a comment; values may hold several whitespace-separated
// entries for sweep options.
std::vector<std::string> apply_config(std::vector<std::string> args,
                                      std::string& config_path) {
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config_path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            args.erase(args.begin() + i);
        } else {
            ++i;
        }
    }
    if (config_path.empty()) return args;
    std::ifstream is(config_path);
    if (!is) throw std::runtime_error("cannot read config file: " + config_path);
    std::string line;
    while (std::getline(is, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) continue;
        const std::string flag = "--" + key;
        bool given = false;
        for (const auto& a : args)
            given = given || a == flag || a.rfind(flag + "=", 0) == 0;
        if (given) continue;
        std::istringstream vs(value);
        std::string item;
        while (vs >> item) args.push_back(flag + "=" + item);
    }
    return args;
}

int error_report(const std::string& subcommand, const std::string& message) {
    json j;
    j["error"] = message;
    j["subcommand"] = subcommand;
    std::cerr << j.dump(2) << "\n";
    return kExitFailure;
}

int run_verify(const std::string& out) {
    const auto suite = curvosc::sym::run_identity_suite();
    const auto docs = curvosc::sym::known_discrepancies();
    for (const auto& c : suite)
        std::cout << (c.zero ? "ZERO     " : "NONZERO  ") << c.name << "\n";
    for (const auto& c : docs) {
        std::cout << (c.zero ? "ZERO     " : "NONZERO  ") << c.name
                  << "  [documented discrepancy, not counted]\n";
        for (const auto& r : c.residuals) std::cout << "         " << r << "\n";
    }
    const bool ok = curvosc::sym::all_zero(suite);
    std::cout << (ok ? "verification PASSED (" : "verification FAILED (")
              << suite.size() << " identities)\n";
    if (!out.empty())
        emit_json(out, curvosc::report::identity_json(suite, docs));
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical and quantum mechanics of an oscillator on "
                 "constant-curvature surfaces"};
    app.require_subcommand(1);
    std::string config_path;

    // verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify", "run the exact symbolic identity suite (kappa symbolic)");
    std::string verify_out;
    verify->add_option("--out", verify_out, "JSON report path");

    // simulate --------------------------------------------------------------
    auto* simulate =
        app.add_subcommand("simulate", "integrate a trajectory and report "
                                       "conserved-quantity drifts");
    double sim_kappa = 0.0, sim_alpha = 1.0, sim_tend = 100.0, sim_tol = 1e-10,
           sim_dt = 0.05;
    double x0 = 0.4, y0 = 0.0, vx0 = 0.0, vy0 = 0.3;
    std::string sim_out, sim_report;
    simulate->add_option("--kappa", sim_kappa, "curvature")->required();
    simulate->add_option("--alpha", sim_alpha, "potential strength");
    simulate->add_option("--x0", x0, "initial x");
    simulate->add_option("--y0", y0, "initial y");
    simulate->add_option("--vx0", vx0, "initial vx");
    simulate->add_option("--vy0", vy0, "initial vy");
    simulate->add_option("--t-end", sim_tend, "integration time")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--tol", sim_tol, "adaptive tolerance")
        ->check(CLI::Range(1e-13, 1e-6));
    simulate->add_option("--dt-sample", sim_dt, "output sampling interval")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--out", sim_out, "trajectory CSV path");
    simulate->add_option("--report", sim_report, "conservation JSON path");

    // spectrum ---------------------------------------------------------------
    auto* spectrum = app.add_subcommand(
        "spectrum", "closed-form spectrum tables, both sign branches");
    std::vector<double> spec_kappas;
    int spec_nmax = 3;
    double spec_m = 1.0, spec_alpha = 1.0, spec_hbar = 1.0;
    std::string spec_out;
    spectrum->add_option("--kappa", spec_kappas, "curvature sweep values")
        ->required()
        ->expected(-1);
    spectrum->add_option("--n-max", spec_nmax, "largest principal number n")
        ->check(CLI::NonNegativeNumber);
    spectrum->add_option("--mass", spec_m, "mass")->check(CLI::PositiveNumber);
    spectrum->add_option("--alpha", spec_alpha, "potential strength")
        ->check(CLI::PositiveNumber);
    spectrum->add_option("--hbar", spec_hbar, "hbar")->check(CLI::PositiveNumber);
    spectrum->add_option("--out", spec_out, "JSON report path");

    // oracle -----------------------------------------------------------------
    auto* oracle = app.add_subcommand(
        "oracle", "compare the eigensolver against both closed-form branches");
    std::vector<double> ora_kappas;
    int ora_mumax = 2, ora_levels = 4, ora_cells = 2000;
    std::string ora_out;
    oracle->add_option("--kappa", ora_kappas, "curvature sweep values")
        ->required()
        ->expected(-1);
    oracle->add_option("--mu-max", ora_mumax, "largest angular index")
        ->check(CLI::NonNegativeNumber);
    oracle->add_option("--levels", ora_levels, "radial levels per mu")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--cells", ora_cells, "coarse grid cells")
        ->check(CLI::Range(100, 200000));
    oracle->add_option("--out", ora_out, "JSON report path");

    // wavefunction -----------------------------------------------------------
    auto* wave = app.add_subcommand(
        "wavefunction", "sample a normalized closed-form eigenfunction");
    double wf_kappa = 0.1;
    int wf_nr = 0, wf_mu = 0, wf_rsamples = 64, wf_phisamples = 8, wf_sign = 1;
    std::string wf_branch = "euclid", wf_out, wf_norm_out;
    wave->add_option("--kappa", wf_kappa, "curvature")->required();
    wave->add_option("--nr", wf_nr, "radial index")->check(CLI::NonNegativeNumber);
    wave->add_option("--mu", wf_mu, "angular index")->check(CLI::NonNegativeNumber);
    wave->add_option("--sign", wf_sign, "angular sign branch (+1/-1)");
    wave->add_option("--branch", wf_branch, "paper | euclid")
        ->check(CLI::IsMember({"paper", "euclid"}));
    wave->add_option("--r-samples", wf_rsamples, "radial sample count")
        ->check(CLI::Range(2, 100000));
    wave->add_option("--phi-samples", wf_phisamples, "angular sample count")
        ->check(CLI::Range(1, 100000));
    wave->add_option("--out", wf_out, "CSV sample path");
    wave->add_option("--norm-report", wf_norm_out, "norm JSON path");

    for (auto* sub : app.get_subcommands({}))
        sub->add_option("--config", "plain key=value configuration file; "
                                    "explicit flags take precedence");

    std::vector<std::string> raw_args(argv + 1, argv + argc);
    try {
        raw_args = apply_config(std::move(raw_args), config_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    try {
        std::vector<std::string> reversed(raw_args.rbegin(), raw_args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }
    const std::string config_echo = read_config_echo(config_path);

    try {
        if (*verify) return run_verify(verify_out);

        if (*simulate) {
            const curvosc::mech::CartVel initial{x0, y0, vx0, vy0};
            const auto traj = curvosc::dyn::integrate(initial, sim_kappa,
                                                      sim_alpha, sim_tend,
                                                      sim_tol, sim_dt);
            const auto rep = curvosc::dyn::conservation_report(traj);
            json j = curvosc::report::conservation_json(traj, rep);
            j["initial_state"] = curvosc::report::state_json(initial, sim_kappa);
            if (!config_echo.empty()) j["config_echo"] = config_echo;
            if (!sim_out.empty()) {
                std::ofstream os(sim_out);
                if (!os) throw std::runtime_error("cannot open " + sim_out);
                curvosc::report::write_trajectory_csv(os, traj);
            } else {
                curvosc::report::write_trajectory_csv(std::cout, traj);
            }
            if (!sim_report.empty())
                emit_json(sim_report, j);
            else if (!sim_out.empty())
                emit_json("", j);
            if (traj.domain_exit)
                return error_report("simulate",
                                    "trajectory reached the chart boundary at t = " +
                                        fmt17(traj.t_reached));
            return kExitOk;
        }

        if (*spectrum) {
            if (spec_kappas.empty()) return kExitUsage;
            const curvosc::mech::PhysConstants consts{spec_m, spec_alpha, spec_hbar};
            json reports = json::array();
            for (double kappa : spec_kappas) {
                for (auto branch :
                     {curvosc::qm::Branch::paper, curvosc::qm::Branch::euclid}) {
                    for (int mu = 0; mu <= spec_nmax; ++mu) {
                        std::vector<curvosc::qm::SpectralLine> lines;
                        for (int nr = 0; 2 * nr + mu <= spec_nmax; ++nr)
                            lines.push_back(curvosc::qm::closed_form_line(
                                {nr, mu}, kappa, branch, consts));
                        reports.push_back(curvosc::report::spectrum_json(
                            kappa, mu, branch, lines));
                    }
                }
                std::cout << "kappa = " << fmt17(kappa) << "\n  n :";
                for (int n = 0; n <= spec_nmax; ++n) std::cout << "  " << n;
                std::cout << "\n  paper :";
                for (int n = 0; n <= spec_nmax; ++n)
                    std::cout << "  "
                              << fmt17(curvosc::qm::closed_form_energy(
                                     n, kappa, curvosc::qm::Branch::paper));
                std::cout << "\n  euclid:";
                for (int n = 0; n <= spec_nmax; ++n)
                    std::cout << "  "
                              << fmt17(curvosc::qm::closed_form_energy(
                                     n, kappa, curvosc::qm::Branch::euclid));
                std::cout << "\n";
            }
            json j;
            j["reports"] = reports;
            j["sign_convention"] =
                curvosc::report::sign_convention("unadjudicated: run oracle");
            if (!config_echo.empty()) j["config_echo"] = config_echo;
            if (!spec_out.empty()) emit_json(spec_out, j);
            return kExitOk;
        }

        if (*oracle) {
            if (ora_kappas.empty()) return kExitUsage;
            curvosc::qm::SLOptions opts;
            opts.cells = ora_cells;
            json comparisons = json::array();
            bool all_converged = true;
            bool branch_consistent = true;
            curvosc::qm::Branch first_branch = curvosc::qm::Branch::euclid;
            bool have_first = false;
            for (double kappa : ora_kappas) {
                for (int mu = 0; mu <= ora_mumax; ++mu) {
                    const auto cmp =
                        curvosc::qm::oracle_compare(mu, kappa, ora_levels, opts);
                    all_converged = all_converged && cmp.converged;
                    if (!have_first) {
                        first_branch = cmp.resolved;
                        have_first = true;
                    } else if (cmp.resolved != first_branch) {
                        branch_consistent = false;
                    }
                    comparisons.push_back(curvosc::report::oracle_json(cmp));
                    std::cout << "kappa=" << fmt17(kappa) << " mu=" << mu
                              << " resolved=" << curvosc::qm::to_string(cmp.resolved)
                              << " max|delta|=" << fmt17(cmp.max_delta_resolved)
                              << (cmp.converged ? "" : "  NOT CONVERGED") << "\n";
                }
            }
            json j;
            j["comparisons"] = comparisons;
            j["consistent_branch"] = branch_consistent;
            j["converged"] = all_converged;
            if (have_first && branch_consistent)
                j["sign_convention"] = curvosc::report::sign_convention(
                    curvosc::qm::to_string(first_branch));
            if (!config_echo.empty()) j["config_echo"] = config_echo;
            emit_json(ora_out, j);
            if (!all_converged)
                return error_report("oracle", "eigensolver grids did not agree");
            if (!branch_consistent)
                return error_report("oracle",
                                    "resolved branch differs across (mu, kappa)");
            return kExitOk;
        }

        if (*wave) {
            const curvosc::qm::Branch branch = wf_branch == "paper"
                                                   ? curvosc::qm::Branch::paper
                                                   : curvosc::qm::Branch::euclid;
            const curvosc::qm::QuantumNumbers qn{wf_nr, wf_mu, wf_sign};
            const double scale =
                curvosc::qm::normalization_constant(qn, wf_kappa, branch);
            const double rmax = curvosc::qm::default_rmax(wf_kappa);
            std::vector<double> radii, angles;
            for (int i = 1; i <= wf_rsamples; ++i)
                radii.push_back(rmax * i / (wf_rsamples + 1.0));
            for (int i = 0; i < wf_phisamples; ++i)
                angles.push_back(2.0 * M_PI * i / wf_phisamples);
            if (!wf_out.empty()) {
                std::ofstream os(wf_out);
                if (!os) throw std::runtime_error("cannot open " + wf_out);
                curvosc::report::write_wavefunction_csv(os, qn, wf_kappa, branch,
                                                        scale, radii, angles);
            } else {
                curvosc::report::write_wavefunction_csv(std::cout, qn, wf_kappa,
                                                        branch, scale, radii,
                                                        angles);
            }
            json j;
            j["kappa"] = fmt17(wf_kappa);
            j["N_r"] = wf_nr;
            j["mu"] = wf_mu;
            j["branch"] = wf_branch;
            j["normalization_constant"] = fmt17(scale);
            j["sign_convention"] = curvosc::report::sign_convention(wf_branch);
            if (!config_echo.empty()) j["config_echo"] = config_echo;
            emit_json(wf_norm_out, j);
            return kExitOk;
        }
    } catch (const curvosc::qm::NonNormalizableError& e) {
        return error_report(app.get_subcommands().front()->get_name(),
                            std::string("non-normalizable state: ") + e.what());
    } catch (const std::exception& e) {
        return error_report(app.get_subcommands().front()->get_name(), e.what());
    }
    return kExitUsage;
}
