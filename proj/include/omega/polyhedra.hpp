#pragma once

// Exact rational polyhedral engine.

#include "polyhedra/face.hpp"
#include "polyhedra/hull.hpp"
#include "polyhedra/io.hpp"
#include "polyhedra/linalg.hpp"
#include "polyhedra/lp.hpp"
#include "polyhedra/types.hpp"
