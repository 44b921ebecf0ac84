#pragma once

#include <functional>

#include "dgdiss/model.hpp"

namespace dgdiss {

/// Transverse 1D reduction of Maxwell's equations in a Kerr medium with
/// field-dependent conductivity: fields E = E_y(x) and H = H_z(x), curls
/// reduce to +-d/dx. Constitutive laws d(E) = eps0 (chi1 + chi3 E^2) E and
/// b(H) = mu0 H give the stored energy densities (path integrals of the
/// incremental laws)
///     dhat(E) = eps0 (chi1 E^2/2 + 3 chi3 E^4/4),   bhat(H) = mu0 H^2/2,
/// so Q = diag(d'(E), b'(H)) = diag(eps0 (chi1 + 3 chi3 E^2), mu0). The weak
/// operator is <A(E,H),(v,w)> = <H, v'> - <sigma(E) E, v> - <E', w>, with E
/// pinned at both walls (perfectly conducting box) and H in P0; the signs
/// make <A(E,H),(E,H)> = -int sigma(E) E^2. sigma == 0 is the conservative
/// case.
inline EnergyModel make_maxwell1d(double eps0, double mu0, double chi1, double chi3,
                                  std::function<double(double)> sigma) {
    if (!(eps0 > 0.0) || !(mu0 > 0.0) || !(chi1 > 0.0) || !(chi3 > 0.0))
        throw ArgumentError("make_maxwell1d: material constants must be positive");
    if (!sigma) throw ArgumentError("make_maxwell1d: conductivity function required");

    EnergyModel model;
    model.name = "maxwell1d";
    model.n_fields = 2;  // (E, H)
    model.space_spec = {SpaceSpec{SpaceKind::P1Continuous, true, true}, SpaceSpec{SpaceKind::P0, false, false}};
    model.sampling_range = {{-2.0, 2.0}, {-2.0, 2.0}};

    model.energy_density = [eps0, mu0, chi1, chi3](const PointValues& u, double) {
        const double e = u.val[0], h = u.val[1];
        return eps0 * (chi1 * e * e / 2.0 + 3.0 * chi3 * e * e * e * e / 4.0) + mu0 * h * h / 2.0;
    };

    model.qstar_form = [eps0, mu0, chi1, chi3](const PointValues& u, const PointValues& rate, const PointValues& test,
                                               double) {
        const double dprime = eps0 * (chi1 + 3.0 * chi3 * u.val[0] * u.val[0]);
        return dprime * rate.val[0] * test.val[0] + mu0 * rate.val[1] * test.val[1];
    };

    model.a_form = [sigma](const PointValues& u, const PointValues& test, double) {
        const double e = u.val[0], h = u.val[1];
        return h * test.grad[0] - sigma(e) * e * test.val[0] - u.grad[0] * test.val[1];
    };
    return model;
}

}  // namespace dgdiss
