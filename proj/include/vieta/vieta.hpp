#pragma once

// Umbrella header: the whole library.

#include "vieta/apollonius.hpp"
#include "vieta/chord.hpp"
#include "vieta/error.hpp"
#include "vieta/geometry.hpp"
#include "vieta/heptagon.hpp"
#include "vieta/neusis.hpp"
#include "vieta/numeric_roots.hpp"
#include "vieta/pi.hpp"
#include "vieta/pipeline.hpp"
#include "vieta/polynomial.hpp"
#include "vieta/quadratic.hpp"
#include "vieta/rational.hpp"
#include "vieta/species.hpp"
#include "vieta/svg.hpp"
#include "vieta/trace.hpp"
#include "vieta/trisection.hpp"
#include "vieta/vieta_formulas.hpp"
