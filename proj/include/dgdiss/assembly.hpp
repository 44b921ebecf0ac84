#pragma once

#include <vector>

#include "dgdiss/functionals.hpp"
#include "dgdiss/model.hpp"
#include "dgdiss/state.hpp"

namespace dgdiss {

namespace detail {

/// Assembles entry-wise pairings against every basis function of the
/// product space: out[i] += <integrand, phi_i>. The integrand callback
/// receives the current test PointValues (zero except one field's shape
/// function slot).
template <class Integrand>
void assemble_pairing(const EnergyModel& model, const std::vector<FESpace>& spaces, const Quadrature& quad,
                      std::vector<double>& out, Integrand&& integrand) {
    const Mesh1D& mesh = spaces.front().mesh;
    const double h = mesh.spacing();
    PointValues test(model.n_fields);
    std::vector<int> offsets(spaces.size());
    for (std::size_t f = 0; f < spaces.size(); ++f) offsets[f] = field_offset(spaces, static_cast<int>(f));

    for (int e = 0; e < mesh.n_elements; ++e) {
        const double x0 = mesh.nodes[e];
        for (int q = 0; q < quad.n_points(); ++q) {
            const double s = quad.points[q];
            const double x = x0 + s * h;
            const double w = quad.weights[q] * h;
            integrand.at_point(e, s, x);
            test.zero();
            for (int f = 0; f < model.n_fields; ++f) {
                const auto dofs = spaces[f].element_dofs(e);
                for (int l = 0; l < spaces[f].local_dof_count(); ++l) {
                    test.val[f] = spaces[f].shape_value(l, s);
                    test.grad[f] = spaces[f].shape_grad(l);
                    out[offsets[f] + dofs[l]] += w * integrand.value(test, x);
                    test.val[f] = 0.0;
                    test.grad[f] = 0.0;
                }
            }
        }
    }
}

}  // namespace detail

/// Residual of the semi-discrete variational principle: entry i is
/// <Q(u)* udot, phi_i> - <A(u), phi_i> over the product-space basis, with
/// essential-condition rows replaced by zero.
inline std::vector<double> assemble_residual(const EnergyModel& model, const std::vector<FESpace>& spaces,
                                             const State& u, const State& udot,
                                             const Quadrature& quad = default_quadrature()) {
    std::vector<double> r(total_dofs(spaces), 0.0);

    struct {
        const EnergyModel* model;
        const std::vector<FESpace>* spaces;
        const State *u, *udot;
        PointValues pu, pdot;
        void at_point(int e, double s, double x) {
            eval_point(*spaces, *u, e, s, pu);
            eval_point(*spaces, *udot, e, s, pdot);
            detail::require_admissible(*model, pu, x);
        }
        double value(const PointValues& test, double x) const {
            return model->qstar_form(pu, pdot, test, x) - model->a_form(pu, test, x);
        }
    } integrand{&model, &spaces, &u, &udot, PointValues(model.n_fields), PointValues(model.n_fields)};

    detail::assemble_pairing(model, spaces, quad, r, integrand);

    for (std::size_t f = 0; f < spaces.size(); ++f) {
        const int off = field_offset(spaces, static_cast<int>(f));
        for (int i = 0; i < spaces[f].dof_count(); ++i)
            if (spaces[f].dof_pinned(i)) r[off + i] = 0.0;
    }
    return r;
}

/// Entry-wise jump pairing <Q(state)* rate, phi_i> (no sign flip, no
/// boundary-row treatment; callers handle both).
inline std::vector<double> assemble_qstar_pairing(const EnergyModel& model, const std::vector<FESpace>& spaces,
                                                  const State& state, const State& rate,
                                                  const Quadrature& quad = default_quadrature()) {
    std::vector<double> r(total_dofs(spaces), 0.0);

    struct {
        const EnergyModel* model;
        const std::vector<FESpace>* spaces;
        const State *state, *rate;
        PointValues pu, prate;
        void at_point(int e, double s, double x) {
            eval_point(*spaces, *state, e, s, pu);
            eval_point(*spaces, *rate, e, s, prate);
            detail::require_admissible(*model, pu, x);
        }
        double value(const PointValues& test, double x) const { return model->qstar_form(pu, prate, test, x); }
    } integrand{&model, &spaces, &state, &rate, PointValues(model.n_fields), PointValues(model.n_fields)};

    detail::assemble_pairing(model, spaces, quad, r, integrand);
    return r;
}

}  // namespace dgdiss
