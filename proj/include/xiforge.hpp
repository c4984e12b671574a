#pragma once

// Umbrella header for the xiforge library.

#include "xiforge/critical_zeros.hpp"
#include "xiforge/error.hpp"
#include "xiforge/hyper_poly.hpp"
#include "xiforge/quadrature.hpp"
#include "xiforge/special_core.hpp"
#include "xiforge/theta_series.hpp"
#include "xiforge/verify.hpp"
#include "xiforge/xi_repr.hpp"
#include "xiforge/zeta_engine.hpp"
