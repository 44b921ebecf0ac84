#pragma once

#include <cmath>

#include "dgdiss/linalg.hpp"
#include "dgdiss/model.hpp"

namespace dgdiss {
namespace gas {

/// Internal energy density P(rho) = rho * int_1^rho p(r)/r^2 dr for the
/// isentropic law p = rho^gamma, i.e. P(rho) = rho (rho^{gamma-1}-1)/(gamma-1).
inline double pressure_potential(double rho, double gamma) {
    return rho * (std::pow(rho, gamma - 1.0) - 1.0) / (gamma - 1.0);
}

inline double pressure_potential_derivative(double rho, double gamma) {
    return (gamma * std::pow(rho, gamma - 1.0) - 1.0) / (gamma - 1.0);
}

/// The factorization matrix with E'(rho,q) = Q(rho,q) (rho,q):
/// Q = [[P'(rho)/rho, -q/(2 rho^2)], [0, 1/rho]]; its adjoint acts by the
/// transpose.
inline DenseMatrix q_matrix(double rho, double q, double gamma) {
    return DenseMatrix{{pressure_potential_derivative(rho, gamma) / rho, -q / (2.0 * rho * rho)}, {0.0, 1.0 / rho}};
}

}  // namespace gas

/// Isentropic gas flow through a closed pipe: mass/momentum balance with
/// wall friction -q|q|/rho^2 and total energy E = int q^2/(2 rho) + P(rho).
/// rho lives in discontinuous P1 (the weak form carries no rho-derivative),
/// q in continuous P1 with q = 0 at both ends. The weak system, rows tested
/// by (eta, w):
///   <P'/rho d_t rho, eta> = -<P'/rho q', eta>
///   <1/rho d_t q - q^2/(2 rho^2) d_t rho, w>
///       = <q^2/(2 rho^2) + P', w'> - <q/(2 rho^2) q' + |q| q/rho^2, w>,
/// whose diagonal pairing collapses to -int |q|^3/rho^2 pointwise.
inline EnergyModel make_gas_pipe(double gamma) {
    if (!(gamma > 1.0)) throw ArgumentError("make_gas_pipe: adiabatic exponent gamma must exceed 1");

    EnergyModel model;
    model.name = "gas";
    model.n_fields = 2;  // (rho, q)
    model.space_spec = {SpaceSpec{SpaceKind::P1Discontinuous, false, false},
                        SpaceSpec{SpaceKind::P1Continuous, true, true}};
    model.sampling_range = {{0.5, 2.0}, {-1.0, 1.0}};
    model.admissibility = [](const std::vector<double>& v) { return v[0] > kPositivityFloor; };

    model.energy_density = [gamma](const PointValues& u, double) {
        const double rho = u.val[0], q = u.val[1];
        return q * q / (2.0 * rho) + gas::pressure_potential(rho, gamma);
    };

    model.qstar_form = [gamma](const PointValues& u, const PointValues& rate, const PointValues& test, double) {
        const double rho = u.val[0], q = u.val[1];
        const double pp = gas::pressure_potential_derivative(rho, gamma);
        // (Q^T rate) . test with Q as in gas::q_matrix.
        return (pp / rho) * rate.val[0] * test.val[0] +
               (-q / (2.0 * rho * rho) * rate.val[0] + rate.val[1] / rho) * test.val[1];
    };

    model.a_form = [gamma](const PointValues& u, const PointValues& test, double) {
        const double rho = u.val[0], q = u.val[1];
        const double dq = u.grad[1];
        const double pp = gas::pressure_potential_derivative(rho, gamma);
        return -(pp / rho) * dq * test.val[0]                                    // mass row
               + (q * q / (2.0 * rho * rho) + pp) * test.grad[1]                 // pressure/transport
               - (q / (2.0 * rho * rho) * dq + std::abs(q) * q / (rho * rho)) * test.val[1];
    };
    return model;
}

}  // namespace dgdiss
