#pragma once

#include <functional>
#include <vector>

#include "dgdiss/errors.hpp"
#include "dgdiss/quadrature.hpp"

namespace dgdiss {

/// Uniform 1D mesh of (0, L).
struct Mesh1D {
    double length = 1.0;
    int n_elements = 1;
    std::vector<double> nodes;  ///< n_elements + 1 strictly increasing, nodes[0]=0, nodes[n]=L

    double spacing() const { return length / n_elements; }
};

inline Mesh1D build_uniform_mesh(double length, int n_elements) {
    if (!(length > 0.0)) throw ArgumentError("build_uniform_mesh: length must be positive");
    if (n_elements < 1) throw ArgumentError("build_uniform_mesh: need at least one element");
    Mesh1D mesh;
    mesh.length = length;
    mesh.n_elements = n_elements;
    mesh.nodes.resize(n_elements + 1);
    for (int i = 0; i <= n_elements; ++i) mesh.nodes[i] = length * static_cast<double>(i) / n_elements;
    mesh.nodes.back() = length;
    return mesh;
}

/// Composite Gauss approximation of the integral of f over (0, L).
/// Summation order is fixed (elements left to right, points in rule order)
/// so results are bitwise reproducible.
inline double integrate(const Mesh1D& mesh, const std::function<double(double)>& f, const Quadrature& quad = default_quadrature()) {
    const double h = mesh.spacing();
    double sum = 0.0;
    for (int e = 0; e < mesh.n_elements; ++e) {
        const double x0 = mesh.nodes[e];
        for (int q = 0; q < quad.n_points(); ++q) sum += quad.weights[q] * h * f(x0 + quad.points[q] * h);
    }
    return sum;
}

}  // namespace dgdiss
