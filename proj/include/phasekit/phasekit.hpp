#pragma once

#include "phasekit/direct_problem.hpp"
#include "phasekit/error.hpp"
#include "phasekit/inverse_problem.hpp"
#include "phasekit/model_catalog.hpp"
#include "phasekit/rashomon.hpp"
#include "phasekit/scalar.hpp"
#include "phasekit/simple_systems.hpp"
#include "phasekit/stochastic.hpp"
