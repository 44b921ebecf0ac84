#pragma once

#include <cmath>

#include "dgdiss/model.hpp"

namespace dgdiss {

/// Porous medium equation d_t rho = Lap(rho^m), m > 1, in the
/// non-conventional weighted form with energy E(rho) = int rho^m/(m-1),
/// Q(rho)v = m/(m-1) rho^{m-2} v and
/// <A(rho), v> = -( rho * c * d(rho^{m-1})/dx, c * d(rho^{m-2} v)/dx ),
/// c = m/(m-1). Neumann conditions are natural; rho must stay positive.
inline EnergyModel make_porous_medium(double m) {
    if (!(m > 1.0)) throw ArgumentError("make_porous_medium: exponent m must exceed 1");

    EnergyModel model;
    model.name = "pme";
    model.n_fields = 1;
    model.space_spec = {SpaceSpec{SpaceKind::P1Continuous, false, false}};
    model.sampling_range = {{0.5, 2.0}};
    model.admissibility = [](const std::vector<double>& v) { return v[0] > kPositivityFloor; };

    model.energy_density = [m](const PointValues& u, double) { return std::pow(u.val[0], m) / (m - 1.0); };

    const double c = m / (m - 1.0);
    model.qstar_form = [m, c](const PointValues& u, const PointValues& rate, const PointValues& test, double) {
        return c * std::pow(u.val[0], m - 2.0) * rate.val[0] * test.val[0];
    };

    model.a_form = [m, c](const PointValues& u, const PointValues& test, double) {
        const double rho = u.val[0];
        const double drho = u.grad[0];
        const double g1 = rho * c * (m - 1.0) * std::pow(rho, m - 2.0) * drho;  // rho * c * d(rho^{m-1})/dx
        const double g2 = c * ((m - 2.0) * std::pow(rho, m - 3.0) * drho * test.val[0] +
                               std::pow(rho, m - 2.0) * test.grad[0]);         // c * d(rho^{m-2} v)/dx
        return -g1 * g2;
    };
    return model;
}

}  // namespace dgdiss
