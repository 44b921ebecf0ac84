#pragma once

#include <cmath>
#include <vector>

#include "dgdiss/errors.hpp"

namespace dgdiss {

/// Gauss-Legendre rule on the reference element [0,1].
/// Exact for polynomials of degree <= 2*n_points - 1; weights sum to 1.
struct Quadrature {
    std::vector<double> points;   ///< in (0,1)
    std::vector<double> weights;  ///< sum to 1

    int n_points() const { return static_cast<int>(points.size()); }
    int exact_degree() const { return 2 * n_points() - 1; }
};

/// Builds the n-point Gauss-Legendre rule on [0,1]. Nodes are the roots of
/// the Legendre polynomial P_n on [-1,1], found by Newton iteration from the
/// Chebyshev initial guess, then mapped affinely to [0,1].
inline Quadrature gauss_legendre(int n) {
    if (n < 1) throw ArgumentError("gauss_legendre: need at least one point");
    Quadrature q;
    q.points.resize(n);
    q.weights.resize(n);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));  // root guess on [-1,1]
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Evaluate P_n(x) and P_n'(x) by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // x runs from +1 side down; store in increasing order on [0,1].
        q.points[n - 1 - i] = 0.5 * (x + 1.0);
        q.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return q;
}

/// Default spatial rule: 3-point Gauss per element. The integrands are
/// non-polynomial, so the scheme is *defined* as this quadrature-evaluated
/// variational principle; the dissipation-inequality argument uses only the
/// resulting discrete pairings and survives unchanged.
inline const Quadrature& default_quadrature() {
    static const Quadrature q = gauss_legendre(3);
    return q;
}

}  // namespace dgdiss
