#pragma once

#include "paralp/generators.hpp"
#include "paralp/harness.hpp"
#include "paralp/interval.hpp"
#include "paralp/io.hpp"
#include "paralp/linalg.hpp"
#include "paralp/model.hpp"
#include "paralp/parametric.hpp"
#include "paralp/pivotpath.hpp"
#include "paralp/rng.hpp"
#include "paralp/scalar.hpp"
#include "paralp/simplex.hpp"
