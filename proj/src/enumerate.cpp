#include "gsg/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace gsg {

std::vector<CircleInfo> enumerate_circles(const SignedGraph& sg, const EdgeSet& scope) {
  const Graph& g = sg.graph();
  const int n = g.vertex_count();
  std::vector<CircleInfo> out;
  std::vector<EdgeId> links;
  scope.for_each([&](int id) {
    const Edge& e = g.edge(id);
    if (e.kind == EdgeKind::Loop) {
      CircleInfo c{EdgeSet(g.edge_count(), {id}), sg.sign(id)};
      out.push_back(std::move(c));
    } else if (e.kind == EdgeKind::Link) {
      links.push_back(id);
    }
  });

  // Each circle is charged to its lowest link: enumerate simple paths between
  // the endpoints of the seed using only higher-id links.
  for (size_t i = 0; i < links.size(); ++i) {
    EdgeId seed = links[i];
    const Edge& se = g.edge(seed);
    VertexId a = se.ends[0], b = se.ends[1];
    std::vector<char> used_vertex(n, 0);
    std::vector<EdgeId> stack;
    used_vertex[b] = 1;
    std::function<void(VertexId)> dfs = [&](VertexId at) {
      for (EdgeId id : links) {
        if (id <= seed) continue;
        if (std::find(stack.begin(), stack.end(), id) != stack.end()) continue;
        const Edge& e = g.edge(id);
        VertexId other;
        if (e.ends[0] == at) other = e.ends[1];
        else if (e.ends[1] == at) other = e.ends[0];
        else continue;
        if (other == a) {
          EdgeSet c(g.edge_count(), {seed});
          Sign s = sg.sign(seed);
          c.set(id);
          s *= sg.sign(id);
          for (EdgeId x : stack) {
            c.set(x);
            s *= sg.sign(x);
          }
          out.push_back({c, s});
          continue;
        }
        if (used_vertex[other]) continue;
        used_vertex[other] = 1;
        stack.push_back(id);
        dfs(other);
        stack.pop_back();
        used_vertex[other] = 0;
      }
    };
    dfs(b);
  }
  return out;
}

std::vector<SignCircuit> enumerate_sign_circuits(const SignedGraph& sg,
                                                 const EdgeSet& scope) {
  const Graph& g = sg.graph();
  const int n = g.vertex_count();
  std::vector<SignCircuit> out;
  std::vector<EdgeSet> seen;
  auto emit = [&](const EdgeSet& edges) {
    if (std::find(seen.begin(), seen.end(), edges) != seen.end()) return;
    seen.push_back(edges);
    auto c = classify_sign_circuit(sg, edges);
    if (!c) throw std::logic_error("enumerate_sign_circuits: bad candidate");
    out.push_back(std::move(*c));
  };

  scope.for_each([&](int id) {
    if (g.edge(id).kind == EdgeKind::Loose)
      emit(EdgeSet(g.edge_count(), {id}));
  });

  auto circles = enumerate_circles(sg, scope);
  for (const auto& c : circles)
    if (c.sign == 1) emit(c.edges);

  // negative figures: negative circles and half edges
  struct Fig {
    EdgeSet edges;
    std::vector<char> on;  // vertex support
  };
  std::vector<Fig> figs;
  for (const auto& c : circles) {
    if (c.sign != -1) continue;
    Fig f{c.edges, std::vector<char>(n, 0)};
    c.edges.for_each([&](int id) {
      const Edge& e = g.edge(id);
      f.on[e.ends[0]] = 1;
      f.on[e.ends[1]] = 1;
    });
    figs.push_back(std::move(f));
  }
  scope.for_each([&](int id) {
    const Edge& e = g.edge(id);
    if (e.kind != EdgeKind::Half) return;
    Fig f{EdgeSet(g.edge_count(), {id}), std::vector<char>(n, 0)};
    f.on[e.ends[0]] = 1;
    figs.push_back(std::move(f));
  });

  std::vector<EdgeId> links;
  scope.for_each([&](int id) {
    if (g.edge(id).kind == EdgeKind::Link) links.push_back(id);
  });

  for (size_t i = 0; i < figs.size(); ++i) {
    for (size_t j = i + 1; j < figs.size(); ++j) {
      if (figs[i].edges.intersects(figs[j].edges)) continue;
      int common = 0;
      for (VertexId v = 0; v < n; ++v)
        if (figs[i].on[v] && figs[j].on[v]) ++common;
      if (common > 1) continue;
      if (common == 1) {
        emit(figs[i].edges | figs[j].edges);
        continue;
      }
      // disjoint: every simple connecting path whose interior avoids both
      std::vector<char> blocked(n, 0);
      for (VertexId v = 0; v < n; ++v)
        blocked[v] = figs[i].on[v] || figs[j].on[v];
      for (VertexId s0 = 0; s0 < n; ++s0) {
        if (!figs[i].on[s0]) continue;
        std::vector<EdgeId> stack;
        std::vector<char> used_vertex(n, 0);
        std::function<void(VertexId)> dfs = [&](VertexId at) {
          if (figs[j].on[at]) {
            EdgeSet set = figs[i].edges | figs[j].edges;
            for (EdgeId id : stack) set.set(id);
            emit(set);
            return;
          }
          if (at != s0 && blocked[at]) return;
          if (used_vertex[at]) return;
          used_vertex[at] = 1;
          for (EdgeId id : links) {
            if (std::find(stack.begin(), stack.end(), id) != stack.end()) continue;
            const Edge& e = g.edge(id);
            VertexId other;
            if (e.ends[0] == at) other = e.ends[1];
            else if (e.ends[1] == at) other = e.ends[0];
            else continue;
            if (figs[i].on[other]) continue;  // would re-enter the first figure
            stack.push_back(id);
            dfs(other);
            stack.pop_back();
          }
          used_vertex[at] = 0;
        };
        dfs(s0);
      }
    }
  }
  return out;
}

}  // namespace gsg
