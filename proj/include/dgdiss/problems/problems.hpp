#pragma once

#include "dgdiss/problems/cross_diffusion.hpp"
#include "dgdiss/problems/fokker_planck.hpp"
#include "dgdiss/problems/gas_pipe.hpp"
#include "dgdiss/problems/gradient_system.hpp"
#include "dgdiss/problems/heat.hpp"
#include "dgdiss/problems/maxwell1d.hpp"
#include "dgdiss/problems/porous_medium.hpp"
