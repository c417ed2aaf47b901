#pragma once

// Umbrella header for the character-variety toolkit: exact arithmetic over
// Q(x,y,z) and its quadratic extension, free-group words and Fox calculus,
// skein trace polynomials, Saito reconstruction of representations from
// characters, twisted cohomology of presentation complexes, and Reidemeister
// torsion as a rational volume form.

#include "charvar/cohomology.hpp"
#include "charvar/error.hpp"
#include "charvar/fibered.hpp"
#include "charvar/fox.hpp"
#include "charvar/json_io.hpp"
#include "charvar/matrix.hpp"
#include "charvar/mpoly.hpp"
#include "charvar/mpoly_gcd.hpp"
#include "charvar/quadext.hpp"
#include "charvar/ratfn.hpp"
#include "charvar/rational.hpp"
#include "charvar/rep.hpp"
#include "charvar/rng.hpp"
#include "charvar/saito.hpp"
#include "charvar/selfcheck.hpp"
#include "charvar/skein.hpp"
#include "charvar/sl2.hpp"
#include "charvar/torsion.hpp"
#include "charvar/word.hpp"
