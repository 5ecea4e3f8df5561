#pragma once

// Umbrella header: exact minimal periods of symmetric shift register
// sequences over GF(2) via the run-vector contraction calculus, plus the
// brute-force simulator used as ground truth.

#include "ssr/bitstring.hpp"
#include "ssr/checked.hpp"
#include "ssr/contraction.hpp"
#include "ssr/engine.hpp"
#include "ssr/errors.hpp"
#include "ssr/generator.hpp"
#include "ssr/progression.hpp"
#include "ssr/report.hpp"
#include "ssr/run_vector.hpp"
#include "ssr/simulator.hpp"
