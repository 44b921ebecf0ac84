#pragma once

// Shared helpers for the unit and acceptance suites. Everything here is
// deliberately independent of the library's assembly path: dense-quadrature
// integrals are computed by direct elementwise loops, tridiagonal systems by
// the Thomas algorithm, and the backward-Euler reference solves carry their
// own assembly and Newton iteration.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dgdiss/dgdiss.hpp"

namespace testsupport {

inline constexpr double kPi = 3.14159265358979323846;

/// 50-point Gauss rule for oracle integrals.
inline const dgdiss::Quadrature& dense_rule() {
    static const dgdiss::Quadrature q = dgdiss::gauss_legendre(50);
    return q;
}

/// Dense-quadrature integral of f over the mesh (50 points per element).
inline double dense_integral(const dgdiss::Mesh1D& mesh, const std::function<double(double)>& f) {
    return dgdiss::integrate(mesh, f, dense_rule());
}

/// Thomas algorithm for a tridiagonal system; independent of the library's
/// dense LU.
inline std::vector<double> thomas_solve(std::vector<double> lower, std::vector<double> diag,
                                        std::vector<double> upper, std::vector<double> rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for (int i = static_cast<int>(n) - 2; i >= 0; --i) x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
    return x;
}

/// Exact injection of a state onto the once-refined mesh (each element split
/// in two). The refined coefficients represent the same piecewise
/// polynomial, evaluated per parent element so discontinuities are kept.
inline dgdiss::State inject_refined(const std::vector<dgdiss::FESpace>& coarse,
                                    const std::vector<dgdiss::FESpace>& fine, const dgdiss::State& u) {
    dgdiss::State out = dgdiss::zero_state(fine, u.time);
    for (std::size_t f = 0; f < coarse.size(); ++f) {
        const auto& sp = coarse[f];
        for (int e = 0; e < sp.mesh.n_elements; ++e) {
            const auto left = sp.eval_local(u.coeffs[f], e, 0.0);
            const auto mid = sp.eval_local(u.coeffs[f], e, 0.5);
            const auto right = sp.eval_local(u.coeffs[f], e, 1.0);
            switch (sp.kind) {
                case dgdiss::SpaceKind::P0:
                    out.coeffs[f][2 * e] = u.coeffs[f][e];
                    out.coeffs[f][2 * e + 1] = u.coeffs[f][e];
                    break;
                case dgdiss::SpaceKind::P1Continuous:
                    out.coeffs[f][2 * e] = left.first;
                    out.coeffs[f][2 * e + 1] = mid.first;
                    out.coeffs[f][2 * e + 2] = right.first;
                    break;
                case dgdiss::SpaceKind::P1Discontinuous:
                    out.coeffs[f][4 * e] = left.first;
                    out.coeffs[f][4 * e + 1] = mid.first;
                    out.coeffs[f][4 * e + 2] = mid.first;
                    out.coeffs[f][4 * e + 3] = right.first;
                    break;
            }
        }
    }
    return out;
}

/// Independent backward-Euler reference: assembles the residual
///   G_i = <Q(u1)* (u1 - u0)/tau, phi_i> - <A(u1), phi_i>
/// directly (dense quadrature loop over elements and local shape functions,
/// no dgdiss::assemble_* calls) and solves it with a plain undamped Newton
/// iteration on an FD Jacobian built here.
class BackwardEulerOracle {
public:
    BackwardEulerOracle(const dgdiss::EnergyModel& model, const std::vector<dgdiss::FESpace>& spaces,
                        const dgdiss::Quadrature& quad = dgdiss::default_quadrature())
        : model_(model), spaces_(spaces), quad_(quad) {}

    std::vector<double> residual(const std::vector<double>& z, const dgdiss::State& u_prev, double tau) const {
        const dgdiss::State u1 = dgdiss::unflatten(spaces_, z);
        const auto& mesh = spaces_.front().mesh;
        const double h = mesh.spacing();
        std::vector<double> r(dgdiss::total_dofs(spaces_), 0.0);
        dgdiss::PointValues pu(model_.n_fields), prate(model_.n_fields), ptest(model_.n_fields);

        for (int e = 0; e < mesh.n_elements; ++e) {
            for (int q = 0; q < quad_.n_points(); ++q) {
                const double s = quad_.points[q];
                const double x = mesh.nodes[e] + s * h;
                const double w = quad_.weights[q] * h;
                dgdiss::eval_point(spaces_, u1, e, s, pu);
                dgdiss::eval_point(spaces_, u_prev, e, s, prate);
                for (int f = 0; f < model_.n_fields; ++f) {
                    prate.val[f] = (pu.val[f] - prate.val[f]) / tau;
                    prate.grad[f] = (pu.grad[f] - prate.grad[f]) / tau;
                }
                ptest.zero();
                for (int f = 0; f < model_.n_fields; ++f) {
                    const auto dofs = spaces_[f].element_dofs(e);
                    const int off = dgdiss::field_offset(spaces_, f);
                    for (int l = 0; l < spaces_[f].local_dof_count(); ++l) {
                        ptest.val[f] = spaces_[f].shape_value(l, s);
                        ptest.grad[f] = spaces_[f].shape_grad(l);
                        r[off + dofs[l]] +=
                            w * (model_.qstar_form(pu, prate, ptest, x) - model_.a_form(pu, ptest, x));
                        ptest.val[f] = 0.0;
                        ptest.grad[f] = 0.0;
                    }
                }
            }
        }
        for (std::size_t f = 0; f < spaces_.size(); ++f) {
            const int off = dgdiss::field_offset(spaces_, static_cast<int>(f));
            for (int i = 0; i < spaces_[f].dof_count(); ++i)
                if (spaces_[f].dof_pinned(i)) r[off + i] = z[off + i];
        }
        return r;
    }

    dgdiss::State step(const dgdiss::State& u_prev, double tau, double tol = 1e-12, int maxit = 40) const {
        std::vector<double> z = dgdiss::flatten(u_prev);
        const int n = static_cast<int>(z.size());
        for (int it = 0; it < maxit; ++it) {
            const std::vector<double> r = residual(z, u_prev, tau);
            if (dgdiss::norm2(r) <= tol) return dgdiss::unflatten(spaces_, z, u_prev.time + tau);
            dgdiss::DenseMatrix jac(n, n);
            std::vector<double> zp = z;
            for (int j = 0; j < n; ++j) {
                const double step_j = 1e-7 * (1.0 + std::abs(z[j]));
                zp[j] = z[j] + step_j;
                const std::vector<double> rp = residual(zp, u_prev, tau);
                zp[j] = z[j] - step_j;
                const std::vector<double> rm = residual(zp, u_prev, tau);
                zp[j] = z[j];
                for (int i = 0; i < n; ++i) jac(i, j) = (rp[i] - rm[i]) / (2.0 * step_j);
            }
            std::vector<double> neg_r(n);
            for (int i = 0; i < n; ++i) neg_r[i] = -r[i];
            const std::vector<double> delta = dgdiss::lu_solve(jac, neg_r);
            for (int i = 0; i < n; ++i) z[i] += delta[i];
        }
        throw std::runtime_error("BackwardEulerOracle: Newton did not converge");
    }

private:
    const dgdiss::EnergyModel& model_;
    const std::vector<dgdiss::FESpace>& spaces_;
    dgdiss::Quadrature quad_;
};

/// One constructed problem with its mesh and spaces, for property loops
/// over the whole catalogue.
struct ProblemFixture {
    std::string name;
    dgdiss::EnergyModel model;
    dgdiss::Mesh1D mesh;
    std::vector<dgdiss::FESpace> spaces;
};

inline ProblemFixture make_fixture(dgdiss::EnergyModel model, const dgdiss::Mesh1D& mesh) {
    ProblemFixture fx;
    fx.name = model.name;
    fx.mesh = mesh;
    fx.spaces = make_spaces(model, mesh);
    fx.model = std::move(model);
    return fx;
}

/// The full problem catalogue at property-test resolution.
inline std::vector<ProblemFixture> all_problems(int nx = 8) {
    const dgdiss::Mesh1D mesh = dgdiss::build_uniform_mesh(1.0, nx);
    const dgdiss::Mesh1D point_mesh = dgdiss::build_uniform_mesh(1.0, 1);
    std::vector<ProblemFixture> list;
    list.push_back(make_fixture(dgdiss::make_heat_log(), mesh));
    list.push_back(make_fixture(dgdiss::make_porous_medium(2.0), mesh));
    list.push_back(make_fixture(dgdiss::make_fokker_planck([](double x) { return x; }, 1.0, mesh), mesh));
    list.push_back(make_fixture(dgdiss::make_cross_diffusion(), mesh));
    list.push_back(make_fixture(dgdiss::make_maxwell1d(1.0, 1.0, 1.0, 1.0, [](double) { return 1.0; }), mesh));
    list.push_back(make_fixture(dgdiss::make_gas_pipe(2.0), mesh));
    list.push_back(make_fixture(dgdiss::make_anharmonic_oscillator(0.1), point_mesh));
    return list;
}

/// Standard linear-heat reference solver: continuous P1, exact tridiagonal
/// mass and stiffness matrices (consistent mass, homogeneous Neumann),
/// backward Euler via the Thomas algorithm. Completely separate from the
/// nonlinear log-entropy scheme it benchmarks.
class LinearHeatSolver {
public:
    LinearHeatSolver(double length, int nx) : nx_(nx), h_(length / nx) {}

    std::vector<double> run(std::vector<double> u, double tau, int n_steps) const {
        const int n = nx_ + 1;
        for (int step = 0; step < n_steps; ++step) {
            // rhs = M u
            std::vector<double> rhs(n, 0.0);
            for (int i = 0; i < n; ++i) {
                const double diag = (i == 0 || i == n - 1) ? 2.0 * h_ / 6.0 : 4.0 * h_ / 6.0;
                rhs[i] = diag * u[i];
                if (i > 0) rhs[i] += h_ / 6.0 * u[i - 1];
                if (i < n - 1) rhs[i] += h_ / 6.0 * u[i + 1];
            }
            // A = M + tau K, tridiagonal
            std::vector<double> lower(n, 0.0), diag(n, 0.0), upper(n, 0.0);
            for (int i = 0; i < n; ++i) {
                const bool boundary = (i == 0 || i == n - 1);
                diag[i] = (boundary ? 2.0 * h_ / 6.0 : 4.0 * h_ / 6.0) + tau * (boundary ? 1.0 : 2.0) / h_;
                if (i > 0) lower[i] = h_ / 6.0 - tau / h_;
                if (i < n - 1) upper[i] = h_ / 6.0 - tau / h_;
            }
            u = thomas_solve(lower, diag, upper, rhs);
        }
        return u;
    }

private:
    int nx_;
    double h_;
};

}  // namespace testsupport
