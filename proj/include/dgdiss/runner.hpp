#pragma once

#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dgdiss/checks.hpp"
#include "dgdiss/config.hpp"
#include "dgdiss/ledger.hpp"
#include "dgdiss/problems/problems.hpp"
#include "dgdiss/timestep.hpp"

namespace dgdiss {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitSolverError = 2,
    kExitUsageError = 3,
};

/// Everything needed to run one configured problem.
struct ProblemSetup {
    EnergyModel model;
    Mesh1D mesh;
    std::vector<FESpace> spaces;
    State u0;
};

namespace detail {

inline const double kPi = 3.14159265358979323846;

inline std::function<double(double)> make_potential(const RunConfig& cfg) {
    if (cfg.potential == "zero") return [](double) { return 0.0; };
    if (cfg.potential == "linear") return [](double x) { return x; };
    return [](double x) { return x * x; };  // quadratic
}

inline std::string default_ic(ProblemKind problem) {
    switch (problem) {
        case ProblemKind::Heat: return "shifted_cosine";
        case ProblemKind::PorousMedium: return "sine_bump";
        case ProblemKind::FokkerPlanck: return "perturbed_cosine";
        case ProblemKind::CrossDiffusion: return "mixed_bands";
        case ProblemKind::Maxwell1d: return "standing_pulse";
        case ProblemKind::GasPipe: return "small_bump";
        case ProblemKind::GradientSystem: return "default";
    }
    return "";
}

/// Named initial conditions with documented closed forms. All presets are
/// pointwise maps interpolated into the problem's spaces.
inline State build_initial_state(const RunConfig& cfg, const EnergyModel& model, const std::vector<FESpace>& spaces) {
    const double L = spaces.front().mesh.length;
    const std::string ic = cfg.ic.empty() ? default_ic(cfg.problem) : cfg.ic;
    auto unknown = [&]() -> State {
        throw ArgumentError("unknown initial condition '" + ic + "' for problem " + model.name);
    };

    switch (cfg.problem) {
        case ProblemKind::Heat:
            if (ic == "uniform_two") return interpolate(spaces, {[](double) { return 2.0; }});
            if (ic == "shifted_cosine")
                return interpolate(spaces, {[L](double x) { return 2.0 + std::cos(kPi * x / L); }});
            return unknown();
        case ProblemKind::PorousMedium:
            if (ic == "uniform_one") return interpolate(spaces, {[](double) { return 1.0; }});
            if (ic == "sine_bump")
                return interpolate(spaces, {[L](double x) { return 1.0 + 0.5 * std::sin(kPi * x / L); }});
            return unknown();
        case ProblemKind::FokkerPlanck:
            if (ic == "steady") return interpolate(spaces, {[](double) { return 1.0; }});
            if (ic == "perturbed_cosine")
                return interpolate(spaces, {[L](double x) { return 1.0 + 0.1 * std::cos(kPi * x / L); }});
            return unknown();
        case ProblemKind::CrossDiffusion: {
            if (ic == "centered") return interpolate(spaces, {[](double) { return 0.0; }, [](double) { return 0.0; }});
            if (ic == "mixed_bands") {
                auto w1 = [L](double x) { return 0.3 + 0.2 * std::sin(kPi * x / L); };
                auto u1 = [w1](double x) { return crossdiff::u_of_w({w1(x), 0.3})[0]; };
                auto u2 = [w1](double x) { return crossdiff::u_of_w({w1(x), 0.3})[1]; };
                return interpolate(spaces, {u1, u2});
            }
            return unknown();
        }
        case ProblemKind::Maxwell1d:
            if (ic == "rest") return interpolate(spaces, {[](double) { return 0.0; }, [](double) { return 0.0; }});
            if (ic == "standing_pulse")
                return interpolate(spaces, {[L](double x) { return std::sin(kPi * x / L); }, [](double) { return 0.0; }});
            return unknown();
        case ProblemKind::GasPipe:
            if (ic == "rest") return interpolate(spaces, {[](double) { return 1.0; }, [](double) { return 0.0; }});
            if (ic == "small_bump")
                return interpolate(spaces,
                                   {[](double) { return 1.0; }, [L](double x) { return 0.1 * std::sin(kPi * x / L); }});
            return unknown();
        case ProblemKind::GradientSystem: {
            if (ic != "default") return unknown();
            State u0 = zero_state(spaces);
            if (cfg.system == "decay") {
                u0.coeffs[0][0] = 1.0;  // x0 = 1, u = grad H = x
            } else {
                u0.coeffs[0][0] = 2.0;  // x0 = (1, 0): u = (q + q^3, p) = (2, 0)
                u0.coeffs[1][0] = 0.0;
            }
            return u0;
        }
    }
    return unknown();
}

}  // namespace detail

/// Builds model, mesh, spaces and initial state for a parsed configuration.
/// Gradient systems are spatially constant and always use the single-element
/// unit mesh regardless of nx/L.
inline ProblemSetup build_setup(const RunConfig& cfg) {
    ProblemSetup setup;
    switch (cfg.problem) {
        case ProblemKind::Heat:
            setup.mesh = build_uniform_mesh(cfg.length, cfg.nx);
            setup.model = make_heat_log();
            break;
        case ProblemKind::PorousMedium:
            setup.mesh = build_uniform_mesh(cfg.length, cfg.nx);
            setup.model = make_porous_medium(cfg.m.value());
            break;
        case ProblemKind::FokkerPlanck:
            setup.mesh = build_uniform_mesh(cfg.length, cfg.nx);
            setup.model = make_fokker_planck(detail::make_potential(cfg), cfg.mass, setup.mesh);
            break;
        case ProblemKind::CrossDiffusion:
            setup.mesh = build_uniform_mesh(cfg.length, cfg.nx);
            setup.model = make_cross_diffusion();
            break;
        case ProblemKind::Maxwell1d: {
            setup.mesh = build_uniform_mesh(cfg.length, cfg.nx);
            const double sigma0 = cfg.sigma0;
            setup.model = make_maxwell1d(cfg.eps0, cfg.mu0, cfg.chi1, cfg.chi3, [sigma0](double) { return sigma0; });
            break;
        }
        case ProblemKind::GasPipe:
            setup.mesh = build_uniform_mesh(cfg.length, cfg.nx);
            setup.model = make_gas_pipe(cfg.gamma);
            break;
        case ProblemKind::GradientSystem:
            setup.mesh = build_uniform_mesh(1.0, 1);
            if (cfg.system == "decay") setup.model = make_gradient_decay();
            else if (cfg.system == "oscillator") setup.model = make_anharmonic_oscillator(0.0);
            else setup.model = make_anharmonic_oscillator(0.1);
            break;
    }
    setup.spaces = make_spaces(setup.model, setup.mesh);
    setup.u0 = detail::build_initial_state(cfg, setup.model, setup.spaces);
    return setup;
}

struct RunOutcome {
    int exit_code = kExitOk;
    bool check_pass = false;
    double final_energy = 0.0;
    double min_slack = 0.0;
    std::string summary;
    TransientResult result;
};

/// Executes one configured run: transient solve, dissipation-inequality
/// check at tolerance slack_tol*(1+|E0|), optional ledger CSV. The summary
/// is a single line; exit code 0 means all slabs solved and the check
/// passed.
inline RunOutcome run(const RunConfig& cfg) {
    RunOutcome outcome;
    const ProblemSetup setup = build_setup(cfg);

    DgOptions opts;
    opts.newton.tol = cfg.newton_tol;
    opts.newton.max_iterations = cfg.newton_maxit;

    const TimeGrid grid = uniform_time_grid(cfg.tau, cfg.n_steps);
    outcome.result = run_transient(setup.model, setup.spaces, grid, setup.u0, cfg.dg_order, opts);

    std::ostringstream summary;
    summary << problem_tag(cfg.problem) << " k=" << cfg.dg_order << " nx=" << cfg.nx << " tau=" << cfg.tau;

    if (!cfg.out.empty()) write_csv(outcome.result.ledger, cfg.out);

    if (!outcome.result.completed) {
        outcome.exit_code = kExitSolverError;
        summary << " FAILED at slab " << outcome.result.failed_slab << ": " << outcome.result.failure;
        outcome.summary = summary.str();
        return outcome;
    }

    const double e0 = outcome.result.ledger.front().energy;
    const double tol = cfg.slack_tol * (1.0 + std::abs(e0));
    const CheckReport report = check_dissipation_inequality(outcome.result.ledger, tol);
    outcome.check_pass = report.pass;
    outcome.final_energy = outcome.result.ledger.back().energy;

    double min_slack = 0.0;
    for (std::size_t i = 1; i < outcome.result.ledger.size(); ++i)
        min_slack = std::min(min_slack, outcome.result.ledger[i].slack);
    outcome.min_slack = min_slack;

    summary << " steps=" << cfg.n_steps << " final_energy=" << detail::format_double(outcome.final_energy)
            << " min_slack=" << detail::format_double(min_slack)
            << " dissipation_check=" << (report.pass ? "PASS" : "FAIL");
    outcome.exit_code = report.pass ? kExitOk : kExitCheckFailed;
    outcome.summary = summary.str();
    return outcome;
}

/// Runs the base configuration once per value of a numeric key. Each run
/// writes its CSV with `_<value>` appended to the stem; failures are
/// reported and do not stop the sweep.
inline int sweep(const RunConfig& base, const std::string& param, const std::vector<std::string>& value_tokens,
                 std::ostream& out) {
    int worst = kExitOk;
    for (const auto& token : value_tokens) {
        RunConfig cfg = base;
        double value = 0.0;
        try {
            value = detail::to_double(token, 0);
        } catch (const ConfigError&) {
            out << "sweep " << param << "=" << token << " ERROR: not a number\n";
            worst = std::max(worst, static_cast<int>(kExitUsageError));
            continue;
        }
        try {
            if (!set_numeric_key(cfg, param, value))
                throw ArgumentError("'" + param + "' is not a sweepable numeric key");
            if (!cfg.out.empty()) {
                const std::size_t dot = cfg.out.rfind('.');
                const std::string stem = dot == std::string::npos ? cfg.out : cfg.out.substr(0, dot);
                const std::string ext = dot == std::string::npos ? "" : cfg.out.substr(dot);
                cfg.out = stem + "_" + token + ext;
            }
            const RunOutcome outcome = run(cfg);
            out << "sweep " << param << "=" << token << " " << outcome.summary << "\n";
            worst = std::max(worst, outcome.exit_code);
        } catch (const std::exception& err) {
            out << "sweep " << param << "=" << token << " ERROR: " << err.what() << "\n";
            worst = std::max(worst, static_cast<int>(kExitSolverError));
        }
    }
    return worst;
}

/// Re-runs the dissipation-inequality check on a stored ledger CSV.
inline int check_csv(const std::string& path, double slack_tol_scale, std::ostream& out) {
    const EnergyLedger ledger = parse_csv(path);
    if (ledger.empty()) {
        out << "check " << path << ": empty ledger\n";
        return kExitCheckFailed;
    }
    const double tol = slack_tol_scale * (1.0 + std::abs(ledger.front().energy));
    const CheckReport report = check_dissipation_inequality(ledger, tol);
    out << "check " << path << ": " << (report.pass ? "PASS" : "FAIL") << " worst_violation="
        << detail::format_double(report.worst_violation) << " worst_pair_violation="
        << detail::format_double(report.worst_pair_violation) << " tol=" << detail::format_double(tol) << "\n";
    return report.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace dgdiss
