#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "dgdiss/errors.hpp"
#include "dgdiss/linalg.hpp"
#include "dgdiss/mesh.hpp"

namespace dgdiss {

enum class SpaceKind {
    P0,                ///< piecewise constants, one DOF per element
    P1Continuous,      ///< continuous piecewise linears, nodal DOFs
    P1Discontinuous,   ///< discontinuous piecewise linears, two DOFs per element
};

/// A scalar finite element space on a uniform 1D mesh, with optional
/// homogeneous essential conditions at the endpoints. Pinned endpoint
/// coefficients stay in the coefficient vector and are constrained to zero
/// (by overwrite after projection, by row replacement in Newton systems).
struct FESpace {
    Mesh1D mesh;
    SpaceKind kind = SpaceKind::P1Continuous;
    bool pin_left = false;
    bool pin_right = false;

    /// Length of the coefficient vector (pinned slots included).
    int dof_count() const {
        switch (kind) {
            case SpaceKind::P0: return mesh.n_elements;
            case SpaceKind::P1Continuous: return mesh.n_elements + 1;
            case SpaceKind::P1Discontinuous: return 2 * mesh.n_elements;
        }
        return 0;
    }

    int constrained_count() const { return (pin_left ? 1 : 0) + (pin_right ? 1 : 0); }

    bool dof_pinned(int i) const {
        if (pin_left && i == 0) return true;
        if (pin_right && i == dof_count() - 1) return true;
        return false;
    }

    int local_dof_count() const { return kind == SpaceKind::P0 ? 1 : 2; }

    /// Global DOF indices of element e, left to right.
    std::array<int, 2> element_dofs(int e) const {
        switch (kind) {
            case SpaceKind::P0: return {e, e};
            case SpaceKind::P1Continuous: return {e, e + 1};
            case SpaceKind::P1Discontinuous: return {2 * e, 2 * e + 1};
        }
        return {0, 0};
    }

    /// Local shape function values at reference coordinate s in [0,1].
    double shape_value(int local, double s) const {
        if (kind == SpaceKind::P0) return 1.0;
        return local == 0 ? 1.0 - s : s;
    }

    /// Local shape function derivative (physical, i.e. divided by h).
    double shape_grad(int local) const {
        if (kind == SpaceKind::P0) return 0.0;
        const double h = mesh.spacing();
        return local == 0 ? -1.0 / h : 1.0 / h;
    }

    /// Value and gradient of the FE function at a reference point of element e.
    std::pair<double, double> eval_local(const std::vector<double>& coeffs, int e, double s) const {
        const auto dofs = element_dofs(e);
        if (kind == SpaceKind::P0) return {coeffs[dofs[0]], 0.0};
        const double cl = coeffs[dofs[0]], cr = coeffs[dofs[1]];
        return {cl * (1.0 - s) + cr * s, (cr - cl) / mesh.spacing()};
    }
};

/// Element owning coordinate x, with the left element owning its right
/// endpoint (the convention only matters for diagnostics; quadrature points
/// are element-interior).
inline int locate_element(const Mesh1D& mesh, double x) {
    if (x < 0.0 || x > mesh.length) throw ArgumentError("locate_element: coordinate outside domain");
    const double h = mesh.spacing();
    int e = static_cast<int>(std::ceil(x / h)) - 1;
    e = std::max(0, std::min(mesh.n_elements - 1, e));
    while (e > 0 && x <= mesh.nodes[e]) --e;
    while (e < mesh.n_elements - 1 && x > mesh.nodes[e + 1]) ++e;
    return e;
}

/// Pointwise value and one-sided derivative of the FE function at x.
inline std::pair<double, double> eval_fe(const FESpace& space, const std::vector<double>& coeffs, double x) {
    if (static_cast<int>(coeffs.size()) != space.dof_count())
        throw ArgumentError("eval_fe: coefficient length does not match space");
    const int e = locate_element(space.mesh, x);
    const double s = (x - space.mesh.nodes[e]) / space.mesh.spacing();
    return space.eval_local(coeffs, e, s);
}

/// L2-orthogonal projection of f onto the space (mass-matrix solve), with
/// essential conditions imposed afterwards by overwriting the pinned
/// coefficients with zero.
inline std::vector<double> l2_project(const FESpace& space, const std::function<double(double)>& f,
                                      const Quadrature& quad = default_quadrature()) {
    const int n = space.dof_count();
    DenseMatrix mass(n, n);
    std::vector<double> rhs(n, 0.0);
    const double h = space.mesh.spacing();
    const int nloc = space.local_dof_count();
    for (int e = 0; e < space.mesh.n_elements; ++e) {
        const auto dofs = space.element_dofs(e);
        const double x0 = space.mesh.nodes[e];
        for (int q = 0; q < quad.n_points(); ++q) {
            const double s = quad.points[q];
            const double w = quad.weights[q] * h;
            const double fx = f(x0 + s * h);
            for (int i = 0; i < nloc; ++i) {
                const double phi_i = space.shape_value(i, s);
                rhs[dofs[i]] += w * fx * phi_i;
                for (int j = 0; j < nloc; ++j) mass(dofs[i], dofs[j]) += w * phi_i * space.shape_value(j, s);
            }
        }
    }
    std::vector<double> coeffs = lu_solve(std::move(mass), std::move(rhs));
    for (int i = 0; i < n; ++i)
        if (space.dof_pinned(i)) coeffs[i] = 0.0;
    return coeffs;
}

}  // namespace dgdiss
