#include "gsg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gsg {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

EdgeId Graph::add_link(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: link endpoints must differ");
  edges_.push_back({edge_count(), EdgeKind::Link, {u, v}});
  return edges_.back().id;
}

EdgeId Graph::add_loop(VertexId v) {
  check_vertex(v);
  edges_.push_back({edge_count(), EdgeKind::Loop, {v, v}});
  return edges_.back().id;
}

EdgeId Graph::add_half(VertexId v) {
  check_vertex(v);
  edges_.push_back({edge_count(), EdgeKind::Half, {v, -1}});
  return edges_.back().id;
}

EdgeId Graph::add_loose() {
  edges_.push_back({edge_count(), EdgeKind::Loose, {-1, -1}});
  return edges_.back().id;
}

VertexId Walk::vertex(const Graph& g, int i) const {
  if (i == 0) return start;
  const WalkStep& st = steps.at(i - 1);
  return g.edge(st.edge).ends[st.to_slot];
}

Walk Walk::reversed(const Graph& g) const {
  Walk r;
  r.start = end_vertex(g);
  r.initial_half = terminal_half;
  r.terminal_half = initial_half;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    r.steps.push_back({it->edge, it->to_slot, it->from_slot});
  return r;
}

std::vector<EdgeId> Walk::edge_ids() const {
  std::vector<EdgeId> r;
  if (initial_half) r.push_back(*initial_half);
  for (const auto& st : steps) r.push_back(st.edge);
  if (terminal_half) r.push_back(*terminal_half);
  return r;
}

void Walk::validate(const Graph& g) const {
  if (start < 0 || start >= g.vertex_count())
    throw std::invalid_argument("Walk: bad start vertex");
  VertexId at = start;
  for (const auto& st : steps) {
    const Edge& e = g.edge(st.edge);
    if (e.end_count() != 2)
      throw std::invalid_argument("Walk: interior edges must be links or loops");
    if (st.from_slot < 0 || st.from_slot > 1 || st.to_slot < 0 || st.to_slot > 1 ||
        st.from_slot == st.to_slot)
      throw std::invalid_argument("Walk: bad end slots");
    if (e.ends[st.from_slot] != at)
      throw std::invalid_argument("Walk: edge not incident with current vertex");
    at = e.ends[st.to_slot];
  }
  if (initial_half) {
    const Edge& e = g.edge(*initial_half);
    if (e.kind != EdgeKind::Half || e.ends[0] != start)
      throw std::invalid_argument("Walk: bad initial half edge");
  }
  if (terminal_half) {
    const Edge& e = g.edge(*terminal_half);
    if (e.kind != EdgeKind::Half || e.ends[0] != at)
      throw std::invalid_argument("Walk: bad terminal half edge");
  }
}

Walk make_walk(const Graph& g, VertexId start, const std::vector<EdgeId>& edges) {
  Walk w;
  w.start = start;
  VertexId at = start;
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    if (e.kind == EdgeKind::Loop) {
      w.steps.push_back({id, 0, 1});
    } else if (e.kind == EdgeKind::Link) {
      int from = e.ends[0] == at ? 0 : 1;
      if (e.ends[from] != at)
        throw std::invalid_argument("make_walk: edge not incident");
      w.steps.push_back({id, from, 1 - from});
    } else {
      throw std::invalid_argument("make_walk: interior edge must be link or loop");
    }
    at = g.edge(id).ends[w.steps.back().to_slot];
  }
  w.validate(g);
  return w;
}

ComponentsResult components(const Graph& g, const EdgeSet& s) {
  const int n = g.vertex_count();
  Dsu dsu(n);
  ComponentsResult res;
  s.for_each([&](int id) {
    const Edge& e = g.edge(id);
    if (e.kind == EdgeKind::Link) dsu.unite(e.ends[0], e.ends[1]);
    if (e.kind == EdgeKind::Loose) res.loose.push_back(id);
  });
  res.component_of.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    int r = dsu.find(v);
    if (res.component_of[r] == -1) {
      res.component_of[r] = static_cast<int>(res.components.size());
      res.components.emplace_back();
    }
    res.component_of[v] = res.component_of[r];
    res.components[res.component_of[v]].push_back(v);
  }
  return res;
}

int cyclomatic(const Graph& g, const EdgeSet& s) {
  auto comp = components(g, s);
  return s.count() - g.vertex_count() + static_cast<int>(comp.components.size());
}

EdgeSet spanning_forest(const Graph& g, const EdgeSet& s) {
  Dsu dsu(g.vertex_count());
  EdgeSet forest(g.edge_count());
  s.for_each([&](int id) {
    const Edge& e = g.edge(id);
    if (e.kind == EdgeKind::Link && dsu.unite(e.ends[0], e.ends[1])) forest.set(id);
  });
  return forest;
}

}  // namespace gsg
