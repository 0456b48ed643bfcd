// Umbrella header for the PSMOA replication-placement library.

#pragma once

#include "psmoa/daycycle.hpp"
#include "psmoa/entropy_topsis.hpp"
#include "psmoa/metrics.hpp"
#include "psmoa/model.hpp"
#include "psmoa/moea.hpp"
#include "psmoa/objectives.hpp"
#include "psmoa/optimizer.hpp"
#include "psmoa/policy.hpp"
#include "psmoa/policy_io.hpp"
#include "psmoa/rand.hpp"
#include "psmoa/scenario_io.hpp"

namespace psmoa {
inline constexpr const char* kToolVersion = "psmoa 1.0.0";
}
