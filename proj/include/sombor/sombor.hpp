#pragma once

// Umbrella header: pulls in the whole library.

#include "qsqrt2.hpp"
#include "poly.hpp"
#include "graph.hpp"
#include "weights.hpp"
#include "jacobi.hpp"
#include "charpoly.hpp"
#include "spectra.hpp"
#include "permanent.hpp"
#include "canonical.hpp"
#include "generate.hpp"
#include "fixtures.hpp"
#include "analysis.hpp"
#include "io_json.hpp"
