#pragma once

#include "budget.hpp"
#include "brute.hpp"
#include "edks.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "maxflow.hpp"
#include "pareto.hpp"
#include "rational.hpp"
#include "serialize.hpp"
#include "strategies.hpp"
#include "verify.hpp"
#include "ws_oracle.hpp"
