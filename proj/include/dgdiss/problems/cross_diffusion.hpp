#pragma once

#include <array>
#include <cmath>

#include "dgdiss/linalg.hpp"
#include "dgdiss/model.hpp"

namespace dgdiss {
namespace crossdiff {

/// Entropy variables u_i = log(w_i / (1 - w_1 - w_2)) of a three-species
/// mixture with mass fractions w_1, w_2, w_3 = 1 - w_1 - w_2.
inline std::array<double, 2> u_of_w(const std::array<double, 2>& w) {
    const double w3 = 1.0 - w[0] - w[1];
    if (!(w[0] > 0.0) || !(w[1] > 0.0) || !(w3 > 0.0))
        throw ArgumentError("u_of_w: mass fractions must lie in the open simplex");
    return {std::log(w[0] / w3), std::log(w[1] / w3)};
}

/// Back transform w_i = e^{u_i} / (1 + e^{u_1} + e^{u_2}); lands in the open
/// simplex for every u. Evaluated in shifted form for overflow safety.
inline std::array<double, 2> w_of_u(const std::array<double, 2>& u) {
    const double m = std::max(0.0, std::max(u[0], u[1]));
    const double e0 = std::exp(-m);
    const double e1 = std::exp(u[0] - m);
    const double e2 = std::exp(u[1] - m);
    const double denom = e0 + e1 + e2;
    return {e1 / denom, e2 / denom};
}

/// Entropy density e(w) = sum_i w_i (log w_i - 1) over the three species.
inline double entropy_density(const std::array<double, 2>& w) {
    const double w3 = 1.0 - w[0] - w[1];
    return w[0] * (std::log(w[0]) - 1.0) + w[1] * (std::log(w[1]) - 1.0) + w3 * (std::log(w3) - 1.0);
}

/// Hessian e''(w) of the entropy density.
inline DenseMatrix entropy_hessian(const std::array<double, 2>& w) {
    const double w3 = 1.0 - w[0] - w[1];
    return DenseMatrix{{1.0 / w[0] + 1.0 / w3, 1.0 / w3}, {1.0 / w3, 1.0 / w[1] + 1.0 / w3}};
}

/// Closed-form inverse of the entropy Hessian,
/// [e''(w)]^{-1} = [[w1(1-w1), -w1 w2], [-w1 w2, w2(1-w2)]].
inline DenseMatrix entropy_hessian_inverse(const std::array<double, 2>& w) {
    return DenseMatrix{{w[0] * (1.0 - w[0]), -w[0] * w[1]}, {-w[0] * w[1], w[1] * (1.0 - w[1])}};
}

/// The diffusion matrix of the physical-variable system.
inline DenseMatrix a_matrix(const std::array<double, 2>& w) {
    const double d = 1.0 / (2.0 + 4.0 * w[0] + w[1]);
    return DenseMatrix{{d * (1.0 + 2.0 * w[0]), d * w[0]}, {d * 2.0 * w[1], d * (2.0 + w[1])}};
}

/// Diffusion matrix in entropy variables, B = A(w) [e''(w)]^{-1}; symmetric
/// positive semi-definite on the open simplex.
inline DenseMatrix b_matrix(const std::array<double, 2>& w) {
    const double d = 1.0 / (2.0 + 4.0 * w[0] + w[1]);
    const double w1 = w[0], w2 = w[1];
    const double off = -d * w1 * w2 * (2.0 * w1 + w2);
    return DenseMatrix{{d * w1 * (1.0 + w1 - 2.0 * w1 * w1 - w1 * w2), off},
                       {off, d * w2 * (2.0 - w2 - 2.0 * w1 * w2 - w2 * w2)}};
}

}  // namespace crossdiff

/// Cross-diffusion of a three-species mixture (two independent mass
/// fractions) in entropy variables: the unknowns are
/// u = e'(w), the energy is E(u) = int e(w(u)), Q(u) is multiplication by
/// [e''(w(u))]^{-1}, and <A(u), v> = -<B(u) u', v'>. The back transform
/// keeps 0 < w_i < 1 automatically, so every state is admissible.
inline EnergyModel make_cross_diffusion() {
    EnergyModel model;
    model.name = "cross_diffusion";
    model.n_fields = 2;
    model.space_spec = {SpaceSpec{SpaceKind::P1Continuous, false, false},
                        SpaceSpec{SpaceKind::P1Continuous, false, false}};
    model.sampling_range = {{-2.0, 2.0}, {-2.0, 2.0}};

    model.energy_density = [](const PointValues& u, double) {
        return crossdiff::entropy_density(crossdiff::w_of_u({u.val[0], u.val[1]}));
    };

    model.qstar_form = [](const PointValues& u, const PointValues& rate, const PointValues& test, double) {
        const DenseMatrix hinv = crossdiff::entropy_hessian_inverse(crossdiff::w_of_u({u.val[0], u.val[1]}));
        return (hinv(0, 0) * rate.val[0] + hinv(0, 1) * rate.val[1]) * test.val[0] +
               (hinv(1, 0) * rate.val[0] + hinv(1, 1) * rate.val[1]) * test.val[1];
    };

    model.a_form = [](const PointValues& u, const PointValues& test, double) {
        const DenseMatrix b = crossdiff::b_matrix(crossdiff::w_of_u({u.val[0], u.val[1]}));
        return -((b(0, 0) * u.grad[0] + b(0, 1) * u.grad[1]) * test.grad[0] +
                 (b(1, 0) * u.grad[0] + b(1, 1) * u.grad[1]) * test.grad[1]);
    };
    return model;
}

}  // namespace dgdiss
