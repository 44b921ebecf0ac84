#pragma once

#include <cmath>

#include "dgdiss/model.hpp"

namespace dgdiss {

/// Heat equation driven by the negative logarithmic entropy
/// E(u) = -int log u. The factorization E'(u) = Q(u)u uses the
/// multiplication operator Q(u)v = -u^{-2} v, and the weak operator reads
/// <A(u), v> = -< u d(u^{-1})/dx, u d(u^{-2} v)/dx >, so the scheme solves
/// the equivalent nonlinear form of the linear heat equation. Homogeneous
/// Neumann conditions are natural; positivity is the only constraint.
inline EnergyModel make_heat_log() {
    EnergyModel model;
    model.name = "heat";
    model.n_fields = 1;
    model.space_spec = {SpaceSpec{SpaceKind::P1Continuous, false, false}};
    model.sampling_range = {{0.5, 3.0}};
    model.admissibility = [](const std::vector<double>& v) { return v[0] > kPositivityFloor; };

    model.energy_density = [](const PointValues& u, double) { return -std::log(u.val[0]); };

    model.qstar_form = [](const PointValues& u, const PointValues& rate, const PointValues& test, double) {
        const double uu = u.val[0];
        return -rate.val[0] * test.val[0] / (uu * uu);
    };

    model.a_form = [](const PointValues& u, const PointValues& test, double) {
        const double uu = u.val[0];
        const double du = u.grad[0];
        const double g1 = -du / uu;                                              // u * d(u^-1)/dx
        const double g2 = -2.0 * du * test.val[0] / (uu * uu) + test.grad[0] / uu;  // u * d(u^-2 v)/dx
        return -g1 * g2;
    };
    return model;
}

}  // namespace dgdiss
