#pragma once

#include "entdj/algorithms.hpp"
#include "entdj/analysis.hpp"
#include "entdj/boolean_function.hpp"
#include "entdj/circuit.hpp"
#include "entdj/errors.hpp"
#include "entdj/experiment.hpp"
#include "entdj/gate.hpp"
#include "entdj/histogram.hpp"
#include "entdj/noise.hpp"
#include "entdj/oracles.hpp"
#include "entdj/rng.hpp"
#include "entdj/state_vector.hpp"
