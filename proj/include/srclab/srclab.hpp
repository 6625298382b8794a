#pragma once

#include "srclab/canonical.hpp"
#include "srclab/coloring.hpp"
#include "srclab/constructions.hpp"
#include "srclab/enumerate.hpp"
#include "srclab/error.hpp"
#include "srclab/graph.hpp"
#include "srclab/graph6.hpp"
#include "srclab/metrics.hpp"
#include "srclab/solver.hpp"
#include "srclab/structure.hpp"
#include "srclab/validate.hpp"
