#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "dgdiss/linalg.hpp"
#include "dgdiss/model.hpp"

namespace dgdiss {

/// Hamiltonian/gradient system dx/dt = (J(x) - R(x)) grad H(x) rewritten in
/// entropy variables u = grad H(x): the evolution becomes
///     [hess H(x(u))]^{-1} d_t u = (J - R) u,
/// with energy E(u) = H(x(u)) and dissipation D(u) = <R u, u>. Spatially
/// constant: dim P0 fields on a single-element unit mesh, so quadrature sums
/// reduce to pointwise values. The back transform x(u) inverts grad H by a
/// damped Newton iteration with the analytic Hessian (tolerance 1e-12,
/// initial guess u); invertibility on the working domain is the caller's
/// responsibility and failures surface as NewtonDivergenceError.
///
/// J and R are validated at construction: J antisymmetric, R symmetric with
/// nonnegative eigenvalues. Constant J, R only (state-dependent operators
/// are not needed by the shipped systems).
inline EnergyModel make_gradient_system(std::function<double(const std::vector<double>&)> hamiltonian,
                                        std::function<std::vector<double>(const std::vector<double>&)> grad_h,
                                        std::function<DenseMatrix(const std::vector<double>&)> hess_h,
                                        DenseMatrix j_op, DenseMatrix r_op) {
    const int dim = j_op.rows();
    if (j_op.cols() != dim || r_op.rows() != dim || r_op.cols() != dim)
        throw ArgumentError("make_gradient_system: J and R must be square with matching dimension");
    if (!hamiltonian || !grad_h || !hess_h) throw ArgumentError("make_gradient_system: H, grad H, hess H required");
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) {
            if (std::abs(j_op(i, k) + j_op(k, i)) > 1e-12)
                throw ArgumentError("make_gradient_system: J must be antisymmetric");
            if (std::abs(r_op(i, k) - r_op(k, i)) > 1e-12)
                throw ArgumentError("make_gradient_system: R must be symmetric");
        }
    for (double ev : symmetric_eigenvalues(r_op))
        if (ev < -1e-12) throw ArgumentError("make_gradient_system: R must be positive semi-definite");

    // Damped Newton inversion of grad H; pure function of u.
    auto invert_grad = [grad_h, hess_h, dim](const std::vector<double>& u) {
        std::vector<double> x = u;
        std::vector<double> r = grad_h(x);
        for (int i = 0; i < dim; ++i) r[i] -= u[i];
        double rnorm = norm2(r);
        std::vector<double> history{rnorm};
        for (int it = 0; it < 50 && rnorm > 1e-12; ++it) {
            std::vector<double> neg_r(dim);
            for (int i = 0; i < dim; ++i) neg_r[i] = -r[i];
            const std::vector<double> delta = lu_solve(hess_h(x), neg_r);
            double alpha = 1.0;
            for (int bt = 0;; ++bt) {
                std::vector<double> x_trial = x;
                for (int i = 0; i < dim; ++i) x_trial[i] += alpha * delta[i];
                std::vector<double> r_trial = grad_h(x_trial);
                for (int i = 0; i < dim; ++i) r_trial[i] -= u[i];
                const double rn = norm2(r_trial);
                if (rn < rnorm || rn <= 1e-12) {
                    x = std::move(x_trial);
                    r = std::move(r_trial);
                    rnorm = rn;
                    break;
                }
                if (bt >= 40) throw NewtonDivergenceError("gradient system: grad H inversion stalled", history);
                alpha *= 0.5;
            }
            history.push_back(rnorm);
        }
        if (rnorm > 1e-12) throw NewtonDivergenceError("gradient system: grad H inversion did not converge", history);
        return x;
    };

    EnergyModel model;
    model.name = "gradient";
    model.n_fields = dim;
    model.space_spec.assign(dim, SpaceSpec{SpaceKind::P0, false, false});
    model.sampling_range.assign(dim, {-2.0, 2.0});

    model.energy_density = [hamiltonian, invert_grad](const PointValues& u, double) {
        return hamiltonian(invert_grad(u.val));
    };

    model.qstar_form = [hess_h, invert_grad, dim](const PointValues& u, const PointValues& rate,
                                                  const PointValues& test, double) {
        const std::vector<double> w = lu_solve(hess_h(invert_grad(u.val)), rate.val);
        double sum = 0.0;
        for (int i = 0; i < dim; ++i) sum += w[i] * test.val[i];
        return sum;
    };

    model.a_form = [j_op, r_op, dim](const PointValues& u, const PointValues& test, double) {
        double sum = 0.0;
        for (int i = 0; i < dim; ++i) {
            double yi = 0.0;
            for (int k = 0; k < dim; ++k) yi += (j_op(i, k) - r_op(i, k)) * u.val[k];
            sum += yi * test.val[i];
        }
        return sum;
    };
    return model;
}

/// Scalar linear decay dx/dt = -x: H(x) = x^2/2, J = 0, R = 1. Entropy
/// variables coincide with x.
inline EnergyModel make_gradient_decay() {
    return make_gradient_system(
        [](const std::vector<double>& x) { return 0.5 * x[0] * x[0]; },
        [](const std::vector<double>& x) { return std::vector<double>{x[0]}; },
        [](const std::vector<double>&) { return DenseMatrix{{1.0}}; }, DenseMatrix{{0.0}}, DenseMatrix{{1.0}});
}

/// Anharmonic oscillator H(q,p) = q^2/2 + q^4/4 + p^2/2 with canonical J and
/// optional momentum damping R = diag(0, r_damp). r_damp = 0 is the
/// conservative Hamiltonian case.
inline EnergyModel make_anharmonic_oscillator(double r_damp = 0.0) {
    if (r_damp < 0.0) throw ArgumentError("make_anharmonic_oscillator: damping must be nonnegative");
    return make_gradient_system(
        [](const std::vector<double>& x) {
            return 0.5 * x[0] * x[0] + 0.25 * x[0] * x[0] * x[0] * x[0] + 0.5 * x[1] * x[1];
        },
        [](const std::vector<double>& x) { return std::vector<double>{x[0] + x[0] * x[0] * x[0], x[1]}; },
        [](const std::vector<double>& x) {
            return DenseMatrix{{1.0 + 3.0 * x[0] * x[0], 0.0}, {0.0, 1.0}};
        },
        DenseMatrix{{0.0, 1.0}, {-1.0, 0.0}}, DenseMatrix{{0.0, 0.0}, {0.0, r_damp}});
}

}  // namespace dgdiss
