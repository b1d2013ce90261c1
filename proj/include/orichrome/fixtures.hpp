#pragma once

#include <vector>

#include "orichrome/full_target.hpp"
#include "orichrome/graph.hpp"

namespace orichrome {

// Hexagon 0->1->...->5->0 with every hexagon vertex pointing at centre 6.
OrientedGraph figure1_graph();
// Four-vertex target of the textbook colouring: 0->1, 1->2, 2->0, all -> 3.
OrientedGraph figure1_target();
// 0-based colours of the figure1_graph vertices in figure1_target.
std::vector<int> figure1_colouring();

// The K_{4,4} orientation offered as a (2,2,4)-full example. It is not full:
// no vertex of class 1 beats both -1 and -3. Class 1 is {+1..+4} (ids 0..3),
// class 2 is {-1..-4} (ids 4..7).
OrientedGraph figure2_graph();
FullTarget figure2_target();

}  // namespace orichrome
