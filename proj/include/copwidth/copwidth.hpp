#pragma once

// Umbrella header.

#include "copwidth/engine.hpp"
#include "copwidth/errors.hpp"
#include "copwidth/flip.hpp"
#include "copwidth/graph.hpp"
#include "copwidth/minors.hpp"
#include "copwidth/naf_bounds.hpp"
#include "copwidth/solver.hpp"
#include "copwidth/strategy.hpp"
#include "copwidth/transforms.hpp"
#include "copwidth/tree_decomposition.hpp"
#include "copwidth/tree_strategies.hpp"
#include "copwidth/vertex_set.hpp"
