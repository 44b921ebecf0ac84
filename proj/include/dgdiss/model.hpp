#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dgdiss/fespace.hpp"

namespace dgdiss {

/// Values and gradients of all fields of a model at one spatial point.
struct PointValues {
    std::vector<double> val;
    std::vector<double> grad;

    explicit PointValues(int n_fields = 0) : val(n_fields, 0.0), grad(n_fields, 0.0) {}

    void zero() {
        for (auto& v : val) v = 0.0;
        for (auto& g : grad) g = 0.0;
    }
};

/// Requested discrete space for one field.
struct SpaceSpec {
    SpaceKind kind = SpaceKind::P1Continuous;
    bool pin_left = false;
    bool pin_right = false;
};

/// Positivity floor for admissibility constraints of the form u > 0. The
/// continuous theory assumes positivity outright; the discrete safeguard
/// needs a concrete floor.
inline constexpr double kPositivityFloor = 1e-10;

/// A dissipative evolution problem in first-order weak form,
///     <Q(u)* du/dt, v> = <A(u), v>   for all v,
/// together with the energy E whose derivative factors as E'(u) = Q(u) u.
/// All pairings are realized as quadrature sums of the pointwise integrands
/// below; the integrands must be defined at every admissible point state.
struct EnergyModel {
    std::string name;
    int n_fields = 1;

    /// Integrand of E: (field values/gradients, x) -> energy density.
    std::function<double(const PointValues& u, double x)> energy_density;

    /// Integrand of <Q(u)* rate, test>. The same callback also evaluates
    /// the pairing <Q(u)u, v> via the adjoint identity by passing
    /// rate <- v, test <- u.
    std::function<double(const PointValues& u, const PointValues& rate, const PointValues& test, double x)> qstar_form;

    /// Integrand of <A(u), test>, already integrated by parts (first
    /// derivatives only).
    std::function<double(const PointValues& u, const PointValues& test, double x)> a_form;

    /// Pointwise admissibility predicate on field values; empty means
    /// every state is admissible.
    std::function<bool(const std::vector<double>& values)> admissibility;

    /// Requested space per field.
    std::vector<SpaceSpec> space_spec;

    /// Per-field coefficient range within which random sampling produces
    /// admissible states (used by seeded property checks).
    std::vector<std::pair<double, double>> sampling_range;

    bool admissible(const std::vector<double>& values) const {
        return !admissibility || admissibility(values);
    }
};

/// Builds the discrete spaces requested by the model on the given mesh.
inline std::vector<FESpace> make_spaces(const EnergyModel& model, const Mesh1D& mesh) {
    if (static_cast<int>(model.space_spec.size()) != model.n_fields)
        throw ArgumentError("make_spaces: model space_spec does not cover all fields");
    std::vector<FESpace> spaces;
    spaces.reserve(model.n_fields);
    for (const auto& spec : model.space_spec)
        spaces.push_back(FESpace{mesh, spec.kind, spec.pin_left, spec.pin_right});
    return spaces;
}

}  // namespace dgdiss
