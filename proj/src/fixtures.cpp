#include "orichrome/fixtures.hpp"

#include <array>

namespace orichrome {

OrientedGraph figure1_graph() {
  std::vector<Arc> arcs;
  for (int i = 0; i < 6; ++i) {
    arcs.push_back({i, (i + 1) % 6});
    arcs.push_back({i, 6});
  }
  return OrientedGraph::from_arcs(7, arcs);
}

OrientedGraph figure1_target() {
  const std::array<Arc, 6> arcs{{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}}};
  return OrientedGraph::from_arcs(4, arcs);
}

std::vector<int> figure1_colouring() {
  // Hexagon colours 3,1,2,3,1,2 and centre 4 in 1-based labels, where the
  // target arcs are 1->2, 2->3, 3->1.
  return {2, 0, 1, 2, 0, 1, 3};
}

OrientedGraph figure2_graph() {
  // p(i) = +i, m(i) = -i.
  auto p = [](int i) { return i - 1; };
  auto m = [](int i) { return i + 3; };
  const std::array<Arc, 16> arcs{{
      {p(1), m(1)}, {p(1), m(2)}, {m(3), p(1)}, {m(4), p(1)},
      {m(1), p(2)}, {p(2), m(2)}, {p(2), m(3)}, {m(4), p(2)},
      {m(1), p(3)}, {m(2), p(3)}, {p(3), m(3)}, {p(3), m(4)},
      {p(4), m(1)}, {m(2), p(4)}, {m(3), p(4)}, {p(4), m(4)},
  }};
  return OrientedGraph::from_arcs(8, arcs);
}

FullTarget figure2_target() { return FullTarget(2, 2, 4, figure2_graph()); }

}  // namespace orichrome
