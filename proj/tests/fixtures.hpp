#pragma once

#include <string>

#include "gencol/graph.hpp"
#include "gencol/reachability.hpp"

// Eleven-vertex example graph, ordered v0..v10 left to right.
inline const char* kExampleEdges =
    "0 1\n1 2\n2 3\n3 4\n0 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n0 7\n0 9\n1 6\n4 8\n";

inline gencol::Graph example_graph() {
  return gencol::parse_graph(kExampleEdges, gencol::GraphFormat::edge_list);
}

inline gencol::Graph complete_graph(int n) {
  gencol::GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

inline gencol::Graph cycle_graph(int n) {
  gencol::GraphBuilder b(n);
  for (int u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return b.build();
}

inline gencol::Graph path_graph(int n) {
  gencol::GraphBuilder b(n);
  for (int u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return b.build();
}

inline gencol::Graph star_graph(int leaves) {
  gencol::GraphBuilder b(leaves + 1);
  for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}
