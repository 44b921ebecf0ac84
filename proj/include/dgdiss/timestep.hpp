#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "dgdiss/assembly.hpp"
#include "dgdiss/functionals.hpp"
#include "dgdiss/ledger.hpp"
#include "dgdiss/newton.hpp"

namespace dgdiss {

struct TimeGrid {
    std::vector<double> times;  ///< 0 = t^0 < t^1 < ... < t^N

    int n_slabs() const { return static_cast<int>(times.size()) - 1; }
};

inline TimeGrid uniform_time_grid(double tau, int n_steps) {
    if (!(tau > 0.0)) throw ArgumentError("uniform_time_grid: step must be positive");
    if (n_steps < 0) throw ArgumentError("uniform_time_grid: negative step count");
    TimeGrid grid;
    grid.times.resize(n_steps + 1);
    for (int n = 0; n <= n_steps; ++n) grid.times[n] = tau * n;
    return grid;
}

/// Polynomial-in-time solution on one slab [t_begin, t_end]:
/// u(t) = sum_j coeff[j] * s^j with s = (t - t_begin)/tau. Degree k <= 1.
struct SlabSolution {
    double t_begin = 0.0;
    double t_end = 0.0;
    int degree = 0;
    std::vector<State> coeff;  ///< k+1 monomial coefficient states

    double tau() const { return t_end - t_begin; }

    State evaluate(double t) const {
        const double s = (t - t_begin) / tau();
        State u = coeff[0];
        double sj = 1.0;
        for (int j = 1; j <= degree; ++j) {
            sj *= s;
            u = axpy(u, sj, coeff[j]);
        }
        u.time = t;
        return u;
    }

    State rate(double t) const {
        const double s = (t - t_begin) / tau();
        State du = coeff[0];
        for (auto& field : du.coeffs)
            for (auto& c : field) c = 0.0;
        double sj = 1.0;
        for (int j = 1; j <= degree; ++j) {
            du = axpy(du, j * sj / tau(), coeff[j]);
            sj *= s;
        }
        du.time = t;
        return du;
    }
};

struct DgOptions {
    NewtonOptions newton;
    Quadrature space_quad = default_quadrature();
};

struct SlabResult {
    SlabSolution slab;
    int newton_iterations = 0;
    double residual_norm = 0.0;
};

namespace detail {

/// Galerkin residual of one dG(k) slab, rows normalized by 1/tau so that the
/// k=0 case reads exactly as the backward-Euler residual:
///   row (j,i) = sum_q w_q s_q^j [ <Q(u(t_q))* du/dt(t_q), phi_i> - <A(u(t_q)), phi_i> ]
///               + delta_{j0} <Q(u(0))* (u(0) - u_prev), phi_i> / tau,
/// with essential-condition rows replaced by (coefficient - 0).
class SlabResidual {
public:
    SlabResidual(const EnergyModel& model, const std::vector<FESpace>& spaces, double t_begin, double t_end,
                 const State& u_prev_end, int k, const Quadrature& space_quad)
        : model_(model), spaces_(spaces), t_begin_(t_begin), t_end_(t_end), u_prev_(u_prev_end), k_(k),
          space_quad_(space_quad), time_quad_(gauss_legendre(k + 1)), n_(total_dofs(spaces)) {}

    int unknowns() const { return (k_ + 1) * n_; }

    SlabSolution to_slab(const std::vector<double>& z) const {
        SlabSolution slab;
        slab.t_begin = t_begin_;
        slab.t_end = t_end_;
        slab.degree = k_;
        for (int j = 0; j <= k_; ++j) {
            std::vector<double> part(z.begin() + j * n_, z.begin() + (j + 1) * n_);
            slab.coeff.push_back(unflatten(spaces_, part, t_begin_));
        }
        return slab;
    }

    std::vector<double> operator()(const std::vector<double>& z) const {
        const SlabSolution slab = to_slab(z);
        const double tau = t_end_ - t_begin_;
        std::vector<double> r(unknowns(), 0.0);

        for (int q = 0; q < time_quad_.n_points(); ++q) {
            const double s = time_quad_.points[q];
            const double w = time_quad_.weights[q];
            const double t = t_begin_ + s * tau;
            const State u = slab.evaluate(t);
            const State du = slab.rate(t);
            const std::vector<double> stage = assemble_residual(model_, spaces_, u, du, space_quad_);
            double sj = 1.0;
            for (int j = 0; j <= k_; ++j) {
                const double c = w * sj;
                for (int i = 0; i < n_; ++i) r[j * n_ + i] += c * stage[i];
                sj *= s;
            }
        }

        // Upwind jump coupling to the previous slab, tested by s^0 only
        // (monomials vanish at s=0 for j >= 1).
        State jump = slab.coeff[0];
        for (std::size_t f = 0; f < jump.coeffs.size(); ++f)
            for (std::size_t i = 0; i < jump.coeffs[f].size(); ++i) jump.coeffs[f][i] -= u_prev_.coeffs[f][i];
        const std::vector<double> jump_pairing = assemble_qstar_pairing(model_, spaces_, slab.coeff[0], jump, space_quad_);
        for (int i = 0; i < n_; ++i) r[i] += jump_pairing[i] / tau;

        for (std::size_t f = 0; f < spaces_.size(); ++f) {
            const int off = field_offset(spaces_, static_cast<int>(f));
            for (int i = 0; i < spaces_[f].dof_count(); ++i) {
                if (!spaces_[f].dof_pinned(i)) continue;
                for (int j = 0; j <= k_; ++j) r[j * n_ + off + i] = z[j * n_ + off + i];
            }
        }
        return r;
    }

private:
    const EnergyModel& model_;
    const std::vector<FESpace>& spaces_;
    double t_begin_, t_end_;
    const State& u_prev_;
    int k_;
    const Quadrature& space_quad_;
    Quadrature time_quad_;
    int n_;
};

}  // namespace detail

/// Solves one dG(k) slab. Initial guess is the previous endpoint state
/// extended constantly into the slab, so a steady state is returned
/// unchanged without any Newton iteration. The converged slab is checked
/// for admissibility at the slab endpoints (interior time-quadrature points
/// are checked during residual evaluation).
inline SlabResult dg_step(const EnergyModel& model, const std::vector<FESpace>& spaces, double t_begin, double t_end,
                          const State& u_prev_end, int k, const DgOptions& opts = {}) {
    if (!(t_end > t_begin)) throw ArgumentError("dg_step: slab must have positive length");
    if (k < 0 || k > 1) throw ArgumentError("dg_step: polynomial degree must be 0 or 1");

    const detail::SlabResidual residual(model, spaces, t_begin, t_end, u_prev_end, k, opts.space_quad);
    std::vector<double> guess(residual.unknowns(), 0.0);
    const std::vector<double> flat_prev = flatten(u_prev_end);
    for (int i = 0; i < static_cast<int>(flat_prev.size()); ++i) guess[i] = flat_prev[i];

    NewtonResult sol = newton_solve([&residual](const std::vector<double>& z) { return residual(z); }, std::move(guess),
                                    opts.newton);

    SlabResult result{residual.to_slab(sol.x), sol.iterations, sol.residual_norm};

    // A posteriori endpoint admissibility (k = 1 endpoints are not
    // time-quadrature points).
    for (const double t : {t_begin, t_end}) {
        const State u = result.slab.evaluate(t);
        const Mesh1D& mesh = spaces.front().mesh;
        PointValues pv(model.n_fields);
        for (int e = 0; e < mesh.n_elements; ++e)
            for (int q = 0; q < opts.space_quad.n_points(); ++q) {
                const double s = opts.space_quad.points[q];
                eval_point(spaces, u, e, s, pv);
                detail::require_admissible(model, pv, mesh.nodes[e] + s * mesh.spacing());
            }
    }
    return result;
}

/// Outcome of a transient run. On solver failure the trajectory and ledger
/// cover the slabs completed before the failure and `completed` is false.
struct TransientResult {
    State initial;
    std::vector<SlabSolution> trajectory;
    EnergyLedger ledger;
    bool completed = true;
    int failed_slab = -1;        ///< 1-based slab index of the failure
    std::string failure;         ///< error context from the failing slab
};

/// Sequential dG(k) time stepping over all slabs of the grid. The ledger
/// records, per slab, the endpoint energy, the slab integral of D by the
/// same (k+1)-point Gauss rule the scheme uses, the dissipation-inequality
/// slack, and Newton statistics.
inline TransientResult run_transient(const EnergyModel& model, const std::vector<FESpace>& spaces, const TimeGrid& grid,
                                     const State& u0, int k, const DgOptions& opts = {}) {
    TransientResult result;
    result.initial = u0;
    result.initial.time = grid.times.front();

    double e_prev = energy(model, spaces, u0, opts.space_quad);
    result.ledger.push_back(LedgerRow{0, grid.times.front(), e_prev, 0.0, 0.0, 0, 0.0});

    State u_prev = result.initial;
    const Quadrature time_quad = gauss_legendre(k + 1);

    for (int n = 1; n <= grid.n_slabs(); ++n) {
        const double t0 = grid.times[n - 1];
        const double t1 = grid.times[n];
        try {
            SlabResult step = dg_step(model, spaces, t0, t1, u_prev, k, opts);

            double d_integral = 0.0;
            for (int q = 0; q < time_quad.n_points(); ++q) {
                const double t = t0 + time_quad.points[q] * (t1 - t0);
                d_integral += time_quad.weights[q] * (t1 - t0) *
                              dissipation(model, spaces, step.slab.evaluate(t), opts.space_quad);
            }

            u_prev = step.slab.evaluate(t1);
            const double e_now = energy(model, spaces, u_prev, opts.space_quad);
            const double slack = e_prev - e_now - d_integral;
            result.ledger.push_back(LedgerRow{n, t1, e_now, d_integral, slack, step.newton_iterations,
                                              step.residual_norm});
            result.trajectory.push_back(std::move(step.slab));
            e_prev = e_now;
        } catch (const std::exception& err) {
            result.completed = false;
            result.failed_slab = n;
            result.failure = err.what();
            break;
        }
    }
    return result;
}

}  // namespace dgdiss
