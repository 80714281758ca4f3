#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gsg/edge_set.hpp"

namespace gsg {

using VertexId = int;
using EdgeId = int;

enum class EdgeKind { Link, Loop, Half, Loose };

// An edge end is (vertex, slot).  Links and loops have slots 0 and 1, half
// edges slot 0 only.  Loop ends carry distinct slots so per-end orientation
// values are unambiguous.
struct Edge {
  EdgeId id = -1;
  EdgeKind kind = EdgeKind::Loose;
  std::array<VertexId, 2> ends = {-1, -1};

  int end_count() const {
    switch (kind) {
      case EdgeKind::Link:
      case EdgeKind::Loop:
        return 2;
      case EdgeKind::Half:
        return 1;
      case EdgeKind::Loose:
        return 0;
    }
    return 0;
  }
  bool incident_to(VertexId v) const {
    return (end_count() >= 1 && ends[0] == v) || (end_count() == 2 && ends[1] == v);
  }
};

// Multigraph with links, loops, half edges, and loose edges.
class Graph {
 public:
  explicit Graph(int n = 0) : n_(n) {}

  EdgeId add_link(VertexId u, VertexId v);
  EdgeId add_loop(VertexId v);
  EdgeId add_half(VertexId v);
  EdgeId add_loose();

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }

 private:
  void check_vertex(VertexId v) const;
  int n_;
  std::vector<Edge> edges_;
};

// One step of a walk: traverse `edge` leaving the current vertex through
// `from_slot` and arriving through `to_slot`.
struct WalkStep {
  EdgeId edge;
  int from_slot;
  int to_slot;
};

// Walk u0 e1 u1 ... el ul; optional initial/terminal half edges make it an
// ultrawalk.
struct Walk {
  VertexId start = -1;
  std::vector<WalkStep> steps;
  std::optional<EdgeId> initial_half;
  std::optional<EdgeId> terminal_half;

  int length() const { return static_cast<int>(steps.size()); }
  bool is_ultrawalk() const { return initial_half || terminal_half; }

  VertexId vertex(const Graph& g, int i) const;  // u_i, 0 <= i <= length
  VertexId end_vertex(const Graph& g) const { return vertex(g, length()); }
  bool is_closed(const Graph& g) const {
    return !is_ultrawalk() && end_vertex(g) == start;
  }
  Walk reversed(const Graph& g) const;
  std::vector<EdgeId> edge_ids() const;

  void validate(const Graph& g) const;  // throws std::invalid_argument
};

// Builds a walk from consecutive edge ids starting at `start`; slots are
// inferred (loops traverse slot 0 -> 1).
Walk make_walk(const Graph& g, VertexId start, const std::vector<EdgeId>& edges);

struct ComponentsResult {
  std::vector<std::vector<VertexId>> components;  // ordered by smallest vertex
  std::vector<EdgeId> loose;
  std::vector<int> component_of;  // vertex -> component index
};

// Vertex components of the spanning subgraph (V, s); loose edges reported
// separately since they are not vertex components.
ComponentsResult components(const Graph& g, const EdgeSet& s);

// Cyclomatic number xi(S) = |S| - |V| + c(S).  Loose and half edges raise it
// by one each since they never reduce the vertex component count.
int cyclomatic(const Graph& g, const EdgeSet& s);

// Maximal acyclic set of links within s, lowest edge id first.
EdgeSet spanning_forest(const Graph& g, const EdgeSet& s);

}  // namespace gsg
