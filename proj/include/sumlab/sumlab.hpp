#pragma once

// Everything.

#include "sumlab/bounds.hpp"
#include "sumlab/compression.hpp"
#include "sumlab/constructions.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/hull.hpp"
#include "sumlab/incidence.hpp"
#include "sumlab/json_io.hpp"
#include "sumlab/linalg.hpp"
#include "sumlab/point.hpp"
#include "sumlab/pointset.hpp"
#include "sumlab/random.hpp"
#include "sumlab/rational.hpp"
#include "sumlab/search.hpp"
#include "sumlab/surd.hpp"
#include "sumlab/verify.hpp"
#include "sumlab/version.hpp"
