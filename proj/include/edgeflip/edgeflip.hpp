#pragma once

#include "edgeflip/corpus.hpp"
#include "edgeflip/edge_space.hpp"
#include "edgeflip/errors.hpp"
#include "edgeflip/flip_action.hpp"
#include "edgeflip/gf2.hpp"
#include "edgeflip/graph.hpp"
#include "edgeflip/group_structure.hpp"
#include "edgeflip/io.hpp"
#include "edgeflip/orbit.hpp"
#include "edgeflip/solver.hpp"
#include "edgeflip/vertex_flip.hpp"
