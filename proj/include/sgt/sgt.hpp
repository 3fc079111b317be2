#pragma once

// Umbrella header: the whole finite-semigroup toolkit.

#include "sgt/semigroup.hpp"    // tables, Green's relations, classification
#include "sgt/star.hpp"         // star structures and their axioms
#include "sgt/gamma.hpp"        // minimum inverse congruence and coordinates
#include "sgt/action.hpp"       // etale actions and etale homomorphisms
#include "sgt/equivalence.hpp"  // semidirect products and round trips
#include "sgt/families.hpp"     // generators and the verification corpus
#include "sgt/json_io.hpp"      // on-disk artifact formats
#include "sgt/suite.hpp"        // the acceptance property suite
