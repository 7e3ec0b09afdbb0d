#pragma once

// Umbrella header: exact analytics for connected vertex sets of graphs.

#include "connset/block_cut.hpp"
#include "connset/check_result.hpp"
#include "connset/cli_app.hpp"
#include "connset/core.hpp"
#include "connset/enumerate.hpp"
#include "connset/generators.hpp"
#include "connset/graph.hpp"
#include "connset/graph6.hpp"
#include "connset/minimal_sets.hpp"
#include "connset/pipeline.hpp"
#include "connset/statements.hpp"
