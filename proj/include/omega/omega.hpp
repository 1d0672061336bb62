#pragma once

#include "graph2p.hpp"
#include "neighborly.hpp"
#include "omega3_census.hpp"
#include "omega_core.hpp"
#include "polyhedra.hpp"
