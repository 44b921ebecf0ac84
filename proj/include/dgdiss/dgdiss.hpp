#pragma once

// Umbrella header: energy-dissipative Galerkin discretization of evolution
// problems of the form <Q(u)* du/dt, v> = <A(u), v> with E'(u) = Q(u)u,
// discontinuous Galerkin time stepping, and per-step verification of the
// discrete dissipation inequality.

#include "dgdiss/assembly.hpp"
#include "dgdiss/checks.hpp"
#include "dgdiss/config.hpp"
#include "dgdiss/errors.hpp"
#include "dgdiss/fespace.hpp"
#include "dgdiss/functionals.hpp"
#include "dgdiss/ledger.hpp"
#include "dgdiss/linalg.hpp"
#include "dgdiss/mesh.hpp"
#include "dgdiss/model.hpp"
#include "dgdiss/newton.hpp"
#include "dgdiss/problems/problems.hpp"
#include "dgdiss/quadrature.hpp"
#include "dgdiss/runner.hpp"
#include "dgdiss/state.hpp"
#include "dgdiss/timestep.hpp"
