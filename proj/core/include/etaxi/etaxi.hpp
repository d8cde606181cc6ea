#pragma once

// Umbrella header for the whole core library.

#include "etaxi/contour.hpp"
#include "etaxi/covering.hpp"
#include "etaxi/embeddings.hpp"
#include "etaxi/errors.hpp"
#include "etaxi/flows.hpp"
#include "etaxi/group.hpp"
#include "etaxi/metric.hpp"
#include "etaxi/numeric.hpp"
#include "etaxi/rng.hpp"
#include "etaxi/verify.hpp"
