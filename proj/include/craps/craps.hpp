#pragma once

// Umbrella header for the dice-control statistics library.

#include "craps/dice_models.hpp"
#include "craps/dice_sets.hpp"
#include "craps/hand_chain.hpp"
#include "craps/monotonicity.hpp"
#include "craps/normal.hpp"
#include "craps/polynomial.hpp"
#include "craps/power.hpp"
#include "craps/reparam.hpp"
#include "craps/rng.hpp"
#include "craps/roots.hpp"
#include "craps/simulate.hpp"
#include "craps/spectral.hpp"
