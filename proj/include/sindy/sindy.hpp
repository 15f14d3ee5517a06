#pragma once

#include "sindy/benchmark.hpp"
#include "sindy/drag.hpp"
#include "sindy/errors.hpp"
#include "sindy/fixtures.hpp"
#include "sindy/io.hpp"
#include "sindy/poly_library.hpp"
#include "sindy/rng.hpp"
#include "sindy/smoothing.hpp"
#include "sindy/stlsq.hpp"
#include "sindy/svg.hpp"
#include "sindy/trajectory.hpp"
