#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dgdiss/model.hpp"

namespace dgdiss {

/// Coefficients of all fields at one instant. A plain value type; the
/// spaces the coefficients live in are passed alongside wherever needed.
struct State {
    std::vector<std::vector<double>> coeffs;
    double time = 0.0;
};

inline int total_dofs(const std::vector<FESpace>& spaces) {
    int n = 0;
    for (const auto& s : spaces) n += s.dof_count();
    return n;
}

/// Offset of field f's coefficients in the flattened DOF vector.
inline int field_offset(const std::vector<FESpace>& spaces, int field) {
    int off = 0;
    for (int f = 0; f < field; ++f) off += spaces[f].dof_count();
    return off;
}

inline void validate_state(const std::vector<FESpace>& spaces, const State& u) {
    if (u.coeffs.size() != spaces.size()) throw ArgumentError("state: field count does not match spaces");
    for (std::size_t f = 0; f < spaces.size(); ++f) {
        if (static_cast<int>(u.coeffs[f].size()) != spaces[f].dof_count())
            throw ArgumentError("state: coefficient length mismatch in field " + std::to_string(f));
        for (int i = 0; i < spaces[f].dof_count(); ++i)
            if (spaces[f].dof_pinned(i) && u.coeffs[f][i] != 0.0)
                throw ArgumentError("state: essential boundary condition violated in field " + std::to_string(f));
    }
}

inline State zero_state(const std::vector<FESpace>& spaces, double time = 0.0) {
    State u;
    u.time = time;
    u.coeffs.reserve(spaces.size());
    for (const auto& s : spaces) u.coeffs.emplace_back(s.dof_count(), 0.0);
    return u;
}

inline void apply_essential_bcs(const std::vector<FESpace>& spaces, State& u) {
    for (std::size_t f = 0; f < spaces.size(); ++f)
        for (int i = 0; i < spaces[f].dof_count(); ++i)
            if (spaces[f].dof_pinned(i)) u.coeffs[f][i] = 0.0;
}

inline std::vector<double> flatten(const State& u) {
    std::vector<double> x;
    for (const auto& c : u.coeffs) x.insert(x.end(), c.begin(), c.end());
    return x;
}

inline State unflatten(const std::vector<FESpace>& spaces, const std::vector<double>& x, double time = 0.0) {
    State u = zero_state(spaces, time);
    int off = 0;
    for (std::size_t f = 0; f < spaces.size(); ++f) {
        const int n = spaces[f].dof_count();
        for (int i = 0; i < n; ++i) u.coeffs[f][i] = x[off + i];
        off += n;
    }
    return u;
}

/// u + scale * v, fieldwise.
inline State axpy(const State& u, double scale, const State& v) {
    State r = u;
    for (std::size_t f = 0; f < u.coeffs.size(); ++f)
        for (std::size_t i = 0; i < u.coeffs[f].size(); ++i) r.coeffs[f][i] += scale * v.coeffs[f][i];
    return r;
}

/// All fields' values and gradients at a reference point of element e.
inline void eval_point(const std::vector<FESpace>& spaces, const State& u, int element, double s, PointValues& out) {
    for (std::size_t f = 0; f < spaces.size(); ++f) {
        const auto [value, grad] = spaces[f].eval_local(u.coeffs[f], element, s);
        out.val[f] = value;
        out.grad[f] = grad;
    }
}

/// Interpolation of closed-form fields: nodal values for P1 kinds (element
/// endpoint values for the discontinuous kind), element midpoint values for
/// P0. Essential conditions are enforced by overwrite.
inline State interpolate(const std::vector<FESpace>& spaces, const std::vector<std::function<double(double)>>& fields,
                         double time = 0.0) {
    if (fields.size() != spaces.size()) throw ArgumentError("interpolate: one function per field required");
    State u = zero_state(spaces, time);
    for (std::size_t f = 0; f < spaces.size(); ++f) {
        const auto& sp = spaces[f];
        const auto& mesh = sp.mesh;
        switch (sp.kind) {
            case SpaceKind::P0:
                for (int e = 0; e < mesh.n_elements; ++e)
                    u.coeffs[f][e] = fields[f](0.5 * (mesh.nodes[e] + mesh.nodes[e + 1]));
                break;
            case SpaceKind::P1Continuous:
                for (int i = 0; i <= mesh.n_elements; ++i) u.coeffs[f][i] = fields[f](mesh.nodes[i]);
                break;
            case SpaceKind::P1Discontinuous:
                for (int e = 0; e < mesh.n_elements; ++e) {
                    u.coeffs[f][2 * e] = fields[f](mesh.nodes[e]);
                    u.coeffs[f][2 * e + 1] = fields[f](mesh.nodes[e + 1]);
                }
                break;
        }
    }
    apply_essential_bcs(spaces, u);
    return u;
}

/// Seeded admissible state drawn coefficient-wise from the model's
/// per-field sampling ranges.
inline State random_admissible_state(const EnergyModel& model, const std::vector<FESpace>& spaces, std::mt19937_64& rng) {
    State u = zero_state(spaces);
    for (int f = 0; f < model.n_fields; ++f) {
        const auto [lo, hi] = model.sampling_range[f];
        std::uniform_real_distribution<double> dist(lo, hi);
        for (auto& c : u.coeffs[f]) c = dist(rng);
    }
    apply_essential_bcs(spaces, u);
    return u;
}

/// Seeded direction for derivative checks; respects homogeneous essential
/// conditions so that perturbed states remain in the trial set.
inline State random_direction(const std::vector<FESpace>& spaces, std::mt19937_64& rng, double amplitude = 1.0) {
    State v = zero_state(spaces);
    std::uniform_real_distribution<double> dist(-amplitude, amplitude);
    for (auto& field : v.coeffs)
        for (auto& c : field) c = dist(rng);
    apply_essential_bcs(spaces, v);
    return v;
}

}  // namespace dgdiss
