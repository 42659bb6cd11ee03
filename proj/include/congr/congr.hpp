#pragma once

// Umbrella header: exact congruence invariants over Q and GF(p), the 3x3
// kappa layer with its canonical form, zeropotent algebra products and
// brute-force isomorphism testing, exhaustive orbit enumeration over small
// prime fields, and seeded property-check runners.

#include "congr/checks.hpp"
#include "congr/error.hpp"
#include "congr/field.hpp"
#include "congr/invariant.hpp"
#include "congr/matrix.hpp"
#include "congr/matrix_json.hpp"
#include "congr/orbit.hpp"
#include "congr/rng.hpp"
#include "congr/zeropotent.hpp"
