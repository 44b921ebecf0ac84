#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgdiss/errors.hpp"

namespace dgdiss {

enum class ProblemKind { Heat, PorousMedium, FokkerPlanck, CrossDiffusion, Maxwell1d, GasPipe, GradientSystem };

inline const char* problem_tag(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::Heat: return "heat";
        case ProblemKind::PorousMedium: return "pme";
        case ProblemKind::FokkerPlanck: return "fokker_planck";
        case ProblemKind::CrossDiffusion: return "cross_diffusion";
        case ProblemKind::Maxwell1d: return "maxwell1d";
        case ProblemKind::GasPipe: return "gas";
        case ProblemKind::GradientSystem: return "gradient";
    }
    return "?";
}

/// Validated description of one run. Parsed from plain `key = value` text
/// (one pair per line, `#` comments, whitespace-insensitive around `=`).
struct RunConfig {
    ProblemKind problem = ProblemKind::Heat;

    int nx = 16;
    double length = 1.0;
    double tau = 0.01;
    int n_steps = 50;
    int dg_order = 0;
    std::string ic;        ///< named preset; empty selects the problem default
    std::string out;       ///< ledger CSV path; empty writes nothing
    std::uint64_t seed = 42;

    double newton_tol = 1e-10;
    int newton_maxit = 50;
    double slack_tol = 1e-8;  ///< dissipation check tolerance scale: tol = slack_tol*(1+|E0|)

    std::optional<double> m;  ///< porous-medium exponent; required for pme
    double gamma = 2.0;
    double eps0 = 1.0, mu0 = 1.0, chi1 = 1.0, chi3 = 1.0, sigma0 = 1.0;
    std::string potential = "zero";  ///< fokker_planck: zero | linear | quadratic
    double mass = 1.0;
    std::string system = "decay";    ///< gradient: decay | oscillator | damped_oscillator
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

inline double to_double(const std::string& s, int line) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError(line, "expected a number, got '" + s + "'");
    return v;
}

inline long to_integer(const std::string& s, int line) {
    long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError(line, "expected an integer, got '" + s + "'");
    return v;
}

}  // namespace detail

inline RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    bool problem_seen = false;
    int m_line = 0;

    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
        ++lineno;

        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(lineno, "expected 'key = value'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(lineno, "missing key");
        if (value.empty()) throw ConfigError(lineno, "missing value for '" + key + "'");

        if (key == "problem") {
            problem_seen = true;
            if (value == "heat") cfg.problem = ProblemKind::Heat;
            else if (value == "pme") cfg.problem = ProblemKind::PorousMedium;
            else if (value == "fokker_planck") cfg.problem = ProblemKind::FokkerPlanck;
            else if (value == "cross_diffusion") cfg.problem = ProblemKind::CrossDiffusion;
            else if (value == "maxwell1d") cfg.problem = ProblemKind::Maxwell1d;
            else if (value == "gas") cfg.problem = ProblemKind::GasPipe;
            else if (value == "gradient") cfg.problem = ProblemKind::GradientSystem;
            else throw ConfigError(lineno, "unknown problem '" + value + "'");
        } else if (key == "nx") {
            cfg.nx = static_cast<int>(detail::to_integer(value, lineno));
            if (cfg.nx < 1) throw ConfigError(lineno, "nx must be at least 1");
        } else if (key == "L") {
            cfg.length = detail::to_double(value, lineno);
            if (!(cfg.length > 0.0)) throw ConfigError(lineno, "L must be positive");
        } else if (key == "tau") {
            cfg.tau = detail::to_double(value, lineno);
            if (!(cfg.tau > 0.0)) throw ConfigError(lineno, "tau must be positive");
        } else if (key == "n_steps") {
            cfg.n_steps = static_cast<int>(detail::to_integer(value, lineno));
            if (cfg.n_steps < 1) throw ConfigError(lineno, "n_steps must be at least 1");
        } else if (key == "dg_order") {
            const long k = detail::to_integer(value, lineno);
            if (k != 0 && k != 1) throw ConfigError(lineno, "dg_order must be 0 or 1");
            cfg.dg_order = static_cast<int>(k);
        } else if (key == "ic") {
            cfg.ic = value;
        } else if (key == "out") {
            cfg.out = value;
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(detail::to_integer(value, lineno));
        } else if (key == "newton_tol") {
            cfg.newton_tol = detail::to_double(value, lineno);
            if (!(cfg.newton_tol > 0.0)) throw ConfigError(lineno, "newton_tol must be positive");
        } else if (key == "newton_maxit") {
            cfg.newton_maxit = static_cast<int>(detail::to_integer(value, lineno));
            if (cfg.newton_maxit < 1) throw ConfigError(lineno, "newton_maxit must be at least 1");
        } else if (key == "slack_tol") {
            cfg.slack_tol = detail::to_double(value, lineno);
            if (!(cfg.slack_tol > 0.0)) throw ConfigError(lineno, "slack_tol must be positive");
        } else if (key == "m") {
            const double m = detail::to_double(value, lineno);
            if (!(m > 1.0)) throw ConfigError(lineno, "m must exceed 1");
            cfg.m = m;
            m_line = lineno;
        } else if (key == "gamma") {
            cfg.gamma = detail::to_double(value, lineno);
            if (!(cfg.gamma > 1.0)) throw ConfigError(lineno, "gamma must exceed 1");
        } else if (key == "eps0") {
            cfg.eps0 = detail::to_double(value, lineno);
            if (!(cfg.eps0 > 0.0)) throw ConfigError(lineno, "eps0 must be positive");
        } else if (key == "mu0") {
            cfg.mu0 = detail::to_double(value, lineno);
            if (!(cfg.mu0 > 0.0)) throw ConfigError(lineno, "mu0 must be positive");
        } else if (key == "chi1") {
            cfg.chi1 = detail::to_double(value, lineno);
            if (!(cfg.chi1 > 0.0)) throw ConfigError(lineno, "chi1 must be positive");
        } else if (key == "chi3") {
            cfg.chi3 = detail::to_double(value, lineno);
            if (!(cfg.chi3 > 0.0)) throw ConfigError(lineno, "chi3 must be positive");
        } else if (key == "sigma0") {
            cfg.sigma0 = detail::to_double(value, lineno);
            if (cfg.sigma0 < 0.0) throw ConfigError(lineno, "sigma0 must be nonnegative");
        } else if (key == "potential") {
            if (value != "zero" && value != "linear" && value != "quadratic")
                throw ConfigError(lineno, "unknown potential '" + value + "'");
            cfg.potential = value;
        } else if (key == "mass") {
            cfg.mass = detail::to_double(value, lineno);
            if (!(cfg.mass > 0.0)) throw ConfigError(lineno, "mass must be positive");
        } else if (key == "system") {
            if (value != "decay" && value != "oscillator" && value != "damped_oscillator")
                throw ConfigError(lineno, "unknown gradient system '" + value + "'");
            cfg.system = value;
        } else {
            throw ConfigError(lineno, "unknown key '" + key + "'");
        }
    }

    if (!problem_seen) throw ConfigError(lineno, "problem required");
    if (cfg.problem == ProblemKind::PorousMedium && !cfg.m) throw ConfigError(lineno, "m required");
    (void)m_line;
    return cfg;
}

/// Numeric keys a sweep may vary, mapped to setters. Integer-valued keys
/// reject non-integral values.
inline bool set_numeric_key(RunConfig& cfg, const std::string& key, double value) {
    auto as_int = [&](int lo) {
        const long i = static_cast<long>(value);
        if (static_cast<double>(i) != value || i < lo) throw ArgumentError("sweep: bad value for '" + key + "'");
        return static_cast<int>(i);
    };
    if (key == "nx") cfg.nx = as_int(1);
    else if (key == "L") cfg.length = value;
    else if (key == "tau") cfg.tau = value;
    else if (key == "n_steps") cfg.n_steps = as_int(1);
    else if (key == "dg_order") {
        cfg.dg_order = as_int(0);
        if (cfg.dg_order > 1) throw ArgumentError("sweep: dg_order must be 0 or 1");
    }
    else if (key == "newton_tol") cfg.newton_tol = value;
    else if (key == "newton_maxit") cfg.newton_maxit = as_int(1);
    else if (key == "slack_tol") cfg.slack_tol = value;
    else if (key == "m") cfg.m = value;
    else if (key == "gamma") cfg.gamma = value;
    else if (key == "eps0") cfg.eps0 = value;
    else if (key == "mu0") cfg.mu0 = value;
    else if (key == "chi1") cfg.chi1 = value;
    else if (key == "chi3") cfg.chi3 = value;
    else if (key == "sigma0") cfg.sigma0 = value;
    else if (key == "mass") cfg.mass = value;
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(value);
    else return false;
    return true;
}

}  // namespace dgdiss
