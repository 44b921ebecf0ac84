#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "dgdiss/errors.hpp"
#include "dgdiss/linalg.hpp"

namespace dgdiss {

struct NewtonOptions {
    double tol = 1e-10;            ///< absolute residual 2-norm target
    int max_iterations = 50;
    double fd_eps = 1e-6;          ///< relative FD step for the Jacobian
    int max_backtracks = 20;       ///< Armijo halvings per iteration
    double damping_floor = 9.5367431640625e-7;  ///< 2^-20, admissibility halving floor
};

struct NewtonResult {
    std::vector<double> x;
    int iterations = 0;
    double residual_norm = 0.0;
};

using ResidualFn = std::function<std::vector<double>(const std::vector<double>&)>;

/// Central-difference Jacobian, column j scaled by eps*(1+|x_j|).
inline DenseMatrix fd_jacobian(const ResidualFn& residual, const std::vector<double>& x, double eps = 1e-6) {
    const int n = static_cast<int>(x.size());
    DenseMatrix jac(n, n);
    std::vector<double> xp = x;
    for (int j = 0; j < n; ++j) {
        const double step = eps * (1.0 + std::abs(x[j]));
        xp[j] = x[j] + step;
        const std::vector<double> rp = residual(xp);
        xp[j] = x[j] - step;
        const std::vector<double> rm = residual(xp);
        xp[j] = x[j];
        const double scale = 1.0 / (2.0 * step);
        for (int i = 0; i < static_cast<int>(rp.size()); ++i) jac(i, j) = (rp[i] - rm[i]) * scale;
    }
    return jac;
}

/// Damped Newton iteration with FD Jacobian, LU solves and a backtracking
/// line search (Armijo decrease on ||r||_2). A trial point at which the
/// residual cannot be evaluated because a state constraint is violated is
/// handled by halving the step down to the damping floor, after which the
/// AdmissibilityError is rethrown. Returns immediately when the initial
/// guess already satisfies the tolerance.
inline NewtonResult newton_solve(const ResidualFn& residual, std::vector<double> guess,
                                 const NewtonOptions& opts = {}) {
    std::vector<double> r = residual(guess);
    double rnorm = norm2(r);
    std::vector<double> history{rnorm};

    for (int it = 0; it < opts.max_iterations; ++it) {
        if (rnorm <= opts.tol) return {std::move(guess), it, rnorm};

        const DenseMatrix jac = fd_jacobian(residual, guess, opts.fd_eps);
        std::vector<double> neg_r(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) neg_r[i] = -r[i];
        const std::vector<double> delta = lu_solve(jac, neg_r);

        double alpha = 1.0;
        int backtracks = 0;
        for (;;) {
            std::vector<double> trial = guess;
            for (std::size_t i = 0; i < trial.size(); ++i) trial[i] += alpha * delta[i];
            bool admissible = true;
            std::vector<double> r_trial;
            try {
                r_trial = residual(trial);
            } catch (const AdmissibilityError&) {
                admissible = false;
                if (alpha * 0.5 < opts.damping_floor) throw;
            } catch (const NewtonDivergenceError&) {
                // A nested solve inside the residual (entropy-variable back
                // transform) can fail at wild trial points; damp like an
                // admissibility violation.
                admissible = false;
                if (alpha * 0.5 < opts.damping_floor) throw;
            }
            if (admissible) {
                const double rn_trial = norm2(r_trial);
                if (rn_trial <= (1.0 - 1e-4 * alpha) * rnorm || rn_trial <= opts.tol) {
                    guess = std::move(trial);
                    r = std::move(r_trial);
                    rnorm = rn_trial;
                    break;
                }
                if (++backtracks > opts.max_backtracks) {
                    history.push_back(rn_trial);
                    throw NewtonDivergenceError(
                        "newton_solve: line search stalled at iteration " + std::to_string(it) +
                            " (residual " + std::to_string(rnorm) + ")",
                        history);
                }
            }
            alpha *= 0.5;
        }
        history.push_back(rnorm);
    }

    if (rnorm <= opts.tol) return {std::move(guess), opts.max_iterations, rnorm};
    throw NewtonDivergenceError("newton_solve: no convergence within " + std::to_string(opts.max_iterations) +
                                    " iterations (residual " + std::to_string(rnorm) + ")",
                                history);
}

}  // namespace dgdiss
