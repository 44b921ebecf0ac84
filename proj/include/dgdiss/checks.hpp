#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "dgdiss/ledger.hpp"
#include "dgdiss/timestep.hpp"

namespace dgdiss {

struct CheckReport {
    bool pass = false;
    double worst_violation = 0.0;     ///< largest single-step violation magnitude (0 if none)
    double worst_pair_violation = 0.0;///< largest violation over all telescoped (m,n) pairs
    std::vector<int> offending_steps; ///< step indices with slack < -tol
};

/// Verifies the discrete dissipation inequality on a run ledger: every
/// per-step slack must satisfy slack >= -tol, and by telescoping the same
/// must hold for every pair m < n (checked via prefix sums of the slack
/// column, which equal E(u^m) - E(u^n) - sum int D).
inline CheckReport check_dissipation_inequality(const EnergyLedger& ledger, double tol) {
    if (ledger.empty()) throw ArgumentError("check_dissipation_inequality: empty ledger");
    CheckReport report;
    report.pass = true;

    double prefix = 0.0;      // running sum of slacks
    double max_prefix = 0.0;  // max over m of prefix(m), prefix(0) = 0
    for (std::size_t n = 1; n < ledger.size(); ++n) {
        const double slack = ledger[n].slack;
        if (slack < -tol) {
            report.pass = false;
            report.offending_steps.push_back(ledger[n].step);
        }
        report.worst_violation = std::max(report.worst_violation, std::max(0.0, -slack));

        prefix += slack;
        const double worst_pair = max_prefix - prefix;  // = -min over m<n of sum_{m<i<=n} slack_i
        report.worst_pair_violation = std::max(report.worst_pair_violation, std::max(0.0, worst_pair));
        if (worst_pair > tol) report.pass = false;
        max_prefix = std::max(max_prefix, prefix);
    }
    return report;
}

/// Checks that a functional of the state is conserved along the trajectory:
/// |F(u^n) - F(u^0)| <= tol * (1 + |F(u^0)|) at every slab endpoint.
inline CheckReport check_conservation(const TransientResult& run, const std::function<double(const State&)>& functional,
                                      double tol) {
    if (run.trajectory.empty() && run.ledger.empty())
        throw ArgumentError("check_conservation: empty trajectory");
    CheckReport report;
    report.pass = true;
    const double f0 = functional(run.initial);
    const double scale = 1.0 + std::abs(f0);
    for (std::size_t n = 0; n < run.trajectory.size(); ++n) {
        const double fn = functional(run.trajectory[n].evaluate(run.trajectory[n].t_end));
        const double drift = std::abs(fn - f0);
        report.worst_violation = std::max(report.worst_violation, drift);
        if (drift > tol * scale) {
            report.pass = false;
            report.offending_steps.push_back(static_cast<int>(n) + 1);
        }
    }
    return report;
}

/// Least-squares fit of log(E^n - floor) against t^n over the rows with
/// E^n > floor. Returns (rate, r_squared); a constant column fits with
/// r_squared = 1. Needs at least three usable rows.
inline std::pair<double, double> fit_exponential_decay(const EnergyLedger& ledger, double floor) {
    std::vector<double> ts, ys;
    for (const auto& row : ledger) {
        if (row.energy > floor) {
            ts.push_back(row.t);
            ys.push_back(std::log(row.energy - floor));
        }
    }
    const int n = static_cast<int>(ts.size());
    if (n < 3) throw ArgumentError("fit_exponential_decay: fewer than 3 rows above the floor");

    double st = 0.0, sy = 0.0;
    for (int i = 0; i < n; ++i) { st += ts[i]; sy += ys[i]; }
    const double tbar = st / n, ybar = sy / n;
    double stt = 0.0, sty = 0.0;
    for (int i = 0; i < n; ++i) {
        stt += (ts[i] - tbar) * (ts[i] - tbar);
        sty += (ts[i] - tbar) * (ys[i] - ybar);
    }
    if (stt == 0.0) throw ArgumentError("fit_exponential_decay: degenerate time column");
    const double rate = sty / stt;

    double ss_res = 0.0, ss_tot = 0.0;
    for (int i = 0; i < n; ++i) {
        const double fit = ybar + rate * (ts[i] - tbar);
        ss_res += (ys[i] - fit) * (ys[i] - fit);
        ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
    }
    const double r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return {rate, r2};
}

}  // namespace dgdiss
