#pragma once

// Umbrella header.

#include "ads2/error.hpp"
#include "ads2/specfun.hpp"
#include "ads2/geometry.hpp"
#include "ads2/algebra.hpp"
#include "ads2/quad.hpp"
#include "ads2/modes.hpp"
#include "ads2/extensions.hpp"
#include "ads2/reps.hpp"
#include "ads2/fock.hpp"
#include "ads2/verify.hpp"

namespace ads2 {
inline constexpr const char* version = "1.0.0";
}
