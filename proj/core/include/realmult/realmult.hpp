#pragma once

// Umbrella header for the whole library.

#include "realmult/errors.hpp"
#include "realmult/integer.hpp"
#include "realmult/polynomial.hpp"
#include "realmult/matrix.hpp"
#include "realmult/roots.hpp"
#include "realmult/factor.hpp"
#include "realmult/number_field.hpp"
#include "realmult/quadratic_surd.hpp"
#include "realmult/contfrac.hpp"
#include "realmult/pseudolattice.hpp"
#include "realmult/quadorder.hpp"
#include "realmult/modsym.hpp"
#include "realmult/report.hpp"
#include "realmult/pipeline.hpp"
