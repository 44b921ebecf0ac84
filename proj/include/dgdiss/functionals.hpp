#pragma once

#include <cmath>
#include <string>

#include "dgdiss/model.hpp"
#include "dgdiss/state.hpp"

namespace dgdiss {

namespace detail {

inline void require_admissible(const EnergyModel& model, const PointValues& u, double x) {
    if (!model.admissible(u.val)) {
        std::string msg = model.name + ": inadmissible state at x = " + std::to_string(x) + " (values:";
        for (double v : u.val) msg += " " + std::to_string(v);
        msg += ")";
        throw AdmissibilityError(msg, x, u.val);
    }
}

/// Quadrature sum of a pointwise integrand over the mesh shared by the
/// model's spaces, with admissibility checked at every quadrature point.
template <class Integrand>
double quadrature_sum(const EnergyModel& model, const std::vector<FESpace>& spaces, const State& u,
                      const Quadrature& quad, Integrand&& integrand) {
    const Mesh1D& mesh = spaces.front().mesh;
    const double h = mesh.spacing();
    PointValues pu(model.n_fields);
    double sum = 0.0;
    for (int e = 0; e < mesh.n_elements; ++e) {
        const double x0 = mesh.nodes[e];
        for (int q = 0; q < quad.n_points(); ++q) {
            const double s = quad.points[q];
            const double x = x0 + s * h;
            eval_point(spaces, u, e, s, pu);
            require_admissible(model, pu, x);
            sum += quad.weights[q] * h * integrand(pu, x);
        }
    }
    return sum;
}

}  // namespace detail

/// E(u), evaluated by quadrature.
inline double energy(const EnergyModel& model, const std::vector<FESpace>& spaces, const State& u,
                     const Quadrature& quad = default_quadrature()) {
    return detail::quadrature_sum(model, spaces, u, quad,
                                  [&](const PointValues& pu, double x) { return model.energy_density(pu, x); });
}

/// D(u) = -<A(u), u>; nonnegative for dissipative problems.
inline double dissipation(const EnergyModel& model, const std::vector<FESpace>& spaces, const State& u,
                          const Quadrature& quad = default_quadrature()) {
    return -detail::quadrature_sum(model, spaces, u, quad,
                                   [&](const PointValues& pu, double x) { return model.a_form(pu, pu, x); });
}

/// The pairing <Q(u)u, v> = <Q(u)* v, u>, evaluated through qstar_form via
/// the adjoint identity (rate slot <- v, test slot <- u).
inline double energy_gradient_pairing(const EnergyModel& model, const std::vector<FESpace>& spaces, const State& u,
                                      const State& v, const Quadrature& quad = default_quadrature()) {
    const Mesh1D& mesh = spaces.front().mesh;
    const double h = mesh.spacing();
    PointValues pu(model.n_fields), pv(model.n_fields);
    double sum = 0.0;
    for (int e = 0; e < mesh.n_elements; ++e) {
        const double x0 = mesh.nodes[e];
        for (int q = 0; q < quad.n_points(); ++q) {
            const double s = quad.points[q];
            const double x = x0 + s * h;
            eval_point(spaces, u, e, s, pu);
            eval_point(spaces, v, e, s, pv);
            detail::require_admissible(model, pu, x);
            sum += quad.weights[q] * h * model.qstar_form(pu, pv, pu, x);
        }
    }
    return sum;
}

/// Outcome of the factorization self-check E'(u)[v] =?= <Q(u)u, v>.
struct StructureReport {
    double fd_derivative = 0.0;  ///< central difference (E(u+hv)-E(u-hv))/(2h)
    double pairing = 0.0;        ///< assembled <Q(u)u, v>
    double discrepancy = 0.0;    ///< |fd - pairing| / (1 + |pairing|)
    double h_used = 0.0;
    bool pass = false;
};

/// Checks the structural relation E'(u) = Q(u)u in direction v by comparing
/// a central finite difference of E against the assembled pairing. The step
/// is halved (at most three times) if a perturbed state leaves the
/// admissible set.
inline StructureReport verify_structure(const EnergyModel& model, const std::vector<FESpace>& spaces, const State& u,
                                        const State& v, double h = 1e-5, double tol = 1e-6,
                                        const Quadrature& quad = default_quadrature()) {
    if (!(h > 0.0)) throw ArgumentError("verify_structure: step must be positive");
    StructureReport report;
    report.pairing = energy_gradient_pairing(model, spaces, u, v, quad);

    double step = h;
    for (int attempt = 0;; ++attempt) {
        try {
            const double e_plus = energy(model, spaces, axpy(u, step, v), quad);
            const double e_minus = energy(model, spaces, axpy(u, -step, v), quad);
            report.fd_derivative = (e_plus - e_minus) / (2.0 * step);
            break;
        } catch (const AdmissibilityError&) {
            if (attempt >= 3) throw;
            step *= 0.5;
        }
    }
    report.h_used = step;
    report.discrepancy = std::abs(report.fd_derivative - report.pairing) / (1.0 + std::abs(report.pairing));
    report.pass = report.discrepancy <= tol;
    return report;
}

}  // namespace dgdiss
