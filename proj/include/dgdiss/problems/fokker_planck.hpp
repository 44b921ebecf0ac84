#pragma once

#include <cmath>
#include <functional>

#include "dgdiss/mesh.hpp"
#include "dgdiss/model.hpp"

namespace dgdiss {

/// Linear Fokker-Planck equation in the scaled variable u = rho/rho_inf,
/// rho_inf(x) = c e^{-V(x)}, with quadratic energy E(u) = int u^2/2 rho_inf
/// and weak form <rho_inf d_t u, v> = -<rho_inf u', v'>. The normalization
/// constant c is fixed so that the quadrature integral of rho_inf equals the
/// prescribed mass (matching the discrete initial mass is then the caller's
/// choice of `mass`). Q(u) is multiplication by rho_inf; no admissibility
/// constraint (the energy is quadratic).
inline EnergyModel make_fokker_planck(std::function<double(double)> potential, double mass, const Mesh1D& mesh,
                                      const Quadrature& quad = default_quadrature()) {
    if (!(mass > 0.0)) throw ArgumentError("make_fokker_planck: mass must be positive");
    if (!potential) throw ArgumentError("make_fokker_planck: potential required");

    const double weight_integral = integrate(mesh, [&](double x) { return std::exp(-potential(x)); }, quad);
    const double c = mass / weight_integral;
    auto rho_inf = [c, potential](double x) { return c * std::exp(-potential(x)); };

    EnergyModel model;
    model.name = "fokker_planck";
    model.n_fields = 1;
    model.space_spec = {SpaceSpec{SpaceKind::P1Continuous, false, false}};
    model.sampling_range = {{-2.0, 2.0}};

    model.energy_density = [rho_inf](const PointValues& u, double x) {
        return 0.5 * u.val[0] * u.val[0] * rho_inf(x);
    };
    model.qstar_form = [rho_inf](const PointValues&, const PointValues& rate, const PointValues& test, double x) {
        return rho_inf(x) * rate.val[0] * test.val[0];
    };
    model.a_form = [rho_inf](const PointValues& u, const PointValues& test, double x) {
        return -rho_inf(x) * u.grad[0] * test.grad[0];
    };
    return model;
}

}  // namespace dgdiss
