#include "gsg/signed_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace gsg {

SignedGraph::SignedGraph(Graph g, std::vector<Sign> sigma)
    : g_(std::move(g)), sigma_(std::move(sigma)) {
  if (static_cast<int>(sigma_.size()) != g_.edge_count())
    throw std::invalid_argument("SignedGraph: sign count mismatch");
  for (const Edge& e : g_.edges()) {
    Sign s = sigma_[e.id];
    if (s != 1 && s != -1) throw std::invalid_argument("SignedGraph: sign must be +1/-1");
    if (e.kind == EdgeKind::Half && s != -1)
      throw std::invalid_argument("SignedGraph: half edges must be negative");
    if (e.kind == EdgeKind::Loose && s != 1)
      throw std::invalid_argument("SignedGraph: loose edges must be positive");
  }
}

Orientation::Orientation(const SignedGraph& sg, std::vector<std::array<Sign, 2>> tau)
    : tau_(std::move(tau)) {
  if (static_cast<int>(tau_.size()) != sg.edge_count())
    throw std::invalid_argument("Orientation: size mismatch");
  for (const Edge& e : sg.graph().edges()) {
    if (e.end_count() == 2) {
      if (tau_[e.id][0] * tau_[e.id][1] != -sg.sign(e.id))
        throw std::invalid_argument("Orientation: tau(v,e)tau(w,e) != -sigma(e)");
    } else if (e.end_count() == 1) {
      if (tau_[e.id][0] != 1 && tau_[e.id][0] != -1)
        throw std::invalid_argument("Orientation: bad tau on half edge");
    }
  }
}

Orientation Orientation::reference(const SignedGraph& sg) {
  std::vector<std::array<Sign, 2>> tau(sg.edge_count(), {1, 1});
  for (const Edge& e : sg.graph().edges()) {
    if (e.end_count() == 2 && sg.sign(e.id) == 1) tau[e.id] = {-1, 1};
  }
  return Orientation(sg, std::move(tau));
}

Orientation Orientation::with_edge_flipped(EdgeId e) const {
  Orientation r = *this;
  r.tau_[e][0] = -r.tau_[e][0];
  r.tau_[e][1] = -r.tau_[e][1];
  return r;
}

Sign sign_of_walk(const SignedGraph& sg, const Walk& w) {
  w.validate(sg.graph());
  Sign s = 1;
  for (EdgeId e : w.edge_ids()) s *= sg.sign(e);
  return s;
}

std::pair<SignedGraph, Orientation> switch_signs(const SignedGraph& sg,
                                                 const Orientation& tau,
                                                 const SignSwitcher& zeta) {
  if (static_cast<int>(zeta.zeta.size()) != sg.vertex_count())
    throw std::invalid_argument("switch_signs: switcher size mismatch");
  std::vector<Sign> sigma = sg.signs();
  std::vector<std::array<Sign, 2>> t = tau.values();
  for (const Edge& e : sg.graph().edges()) {
    switch (e.kind) {
      case EdgeKind::Link:
      case EdgeKind::Loop:
        sigma[e.id] = zeta.zeta[e.ends[0]] * sg.sign(e.id) * zeta.zeta[e.ends[1]];
        t[e.id][0] *= zeta.zeta[e.ends[0]];
        t[e.id][1] *= zeta.zeta[e.ends[1]];
        break;
      case EdgeKind::Half:
        t[e.id][0] *= zeta.zeta[e.ends[0]];
        break;
      case EdgeKind::Loose:
        break;
    }
  }
  SignedGraph out(sg.graph(), std::move(sigma));
  Orientation tout(out, std::move(t));
  return {std::move(out), std::move(tout)};
}

BalanceResult balanced_components(const SignedGraph& sg, const EdgeSet& s) {
  const Graph& g = sg.graph();
  const int n = g.vertex_count();
  BalanceResult res;
  res.zeta.assign(n, 1);
  res.comp_of.assign(n, -1);
  res.vertex_balanced.assign(n, 1);

  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  std::vector<char> unbalanced_seed(n, 0);
  s.for_each([&](int id) {
    const Edge& e = g.edge(id);
    if (e.kind == EdgeKind::Link) {
      adj[e.ends[0]].push_back({e.ends[1], id});
      adj[e.ends[1]].push_back({e.ends[0], id});
    } else if (e.kind == EdgeKind::Loop) {
      if (sg.sign(id) == -1) unbalanced_seed[e.ends[0]] = 1;
    } else if (e.kind == EdgeKind::Half) {
      unbalanced_seed[e.ends[0]] = 1;
    }
  });

  for (VertexId v0 = 0; v0 < n; ++v0) {
    if (res.comp_of[v0] != -1) continue;
    const int c = res.comp_count++;
    bool balanced = true;
    std::vector<VertexId> members;
    std::deque<VertexId> queue{v0};
    res.comp_of[v0] = c;
    res.zeta[v0] = 1;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      members.push_back(v);
      if (unbalanced_seed[v]) balanced = false;
      for (auto [w, id] : adj[v]) {
        if (res.comp_of[w] == -1) {
          res.comp_of[w] = c;
          res.zeta[w] = sg.sign(id) * res.zeta[v];
          queue.push_back(w);
        } else if (sg.sign(id) != res.zeta[v] * res.zeta[w]) {
          balanced = false;
        }
      }
    }
    res.comp_balanced.push_back(balanced ? 1 : 0);
    std::sort(members.begin(), members.end());
    if (balanced) {
      ++res.balanced_count;
      res.balanced_blocks.push_back(members);
    } else {
      for (VertexId v : members) {
        res.vertex_balanced[v] = 0;
        res.unbalanced_vertices.push_back(v);
      }
    }
  }
  std::sort(res.unbalanced_vertices.begin(), res.unbalanced_vertices.end());
  return res;
}

int frame_rank(const SignedGraph& sg, const EdgeSet& s) {
  return sg.vertex_count() - balanced_components(sg, s).balanced_count;
}

bool is_balanced(const SignedGraph& sg, const EdgeSet& s) {
  auto b = balanced_components(sg, s);
  return b.balanced_count == b.comp_count;
}

namespace {

// Union-find tracking sign potentials and per-component unbalance, used for
// the greedy frame basis.
struct SignedDsu {
  std::vector<int> parent;
  std::vector<Sign> rel;  // sign relative to parent
  std::vector<char> unbalanced;

  explicit SignedDsu(int n) : parent(n), rel(n, 1), unbalanced(n, 0) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  std::pair<int, Sign> find(int v) {
    Sign s = 1;
    while (parent[v] != v) {
      s *= rel[v];
      v = parent[v];
    }
    return {v, s};
  }
  // Returns true if adding the edge increases frame rank (and records it).
  bool add(const SignedGraph& sg, const Edge& e) {
    switch (e.kind) {
      case EdgeKind::Loose:
        return false;
      case EdgeKind::Half: {
        int r = find(e.ends[0]).first;
        if (unbalanced[r]) return false;
        unbalanced[r] = 1;
        return true;
      }
      case EdgeKind::Loop: {
        if (sg.sign(e.id) == 1) return false;
        int r = find(e.ends[0]).first;
        if (unbalanced[r]) return false;
        unbalanced[r] = 1;
        return true;
      }
      case EdgeKind::Link: {
        auto [ru, su] = find(e.ends[0]);
        auto [rw, sw] = find(e.ends[1]);
        if (ru != rw) {
          if (unbalanced[ru] && unbalanced[rw]) return false;
          parent[rw] = ru;
          rel[rw] = su * sg.sign(e.id) * sw;
          unbalanced[ru] = unbalanced[ru] || unbalanced[rw];
          return true;
        }
        if (sg.sign(e.id) == su * sw) return false;  // closes a positive circle
        if (unbalanced[ru]) return false;
        unbalanced[ru] = 1;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

EdgeSet frame_basis(const SignedGraph& sg, const EdgeSet& s) {
  SignedDsu dsu(sg.vertex_count());
  EdgeSet basis(sg.edge_count());
  s.for_each([&](int id) {
    if (dsu.add(sg, sg.graph().edge(id))) basis.set(id);
  });
  return basis;
}

FrameBasisStructure::FrameBasisStructure(const SignedGraph& sg, const EdgeSet& basis)
    : sg_(sg), basis_(basis) {
  const Graph& g = sg.graph();
  const int n = g.vertex_count();
  comp_.assign(n, -1);
  parent_edge_.assign(n, -1);
  parent_.assign(n, -1);
  depth_.assign(n, 0);
  sign_to_root_.assign(n, 1);
  tree_adj_.assign(n, {});

  // Basis links split into forest links plus at most one circle-closing link
  // per component; loops and half edges are figures directly.
  std::vector<int> uf(n);
  for (int i = 0; i < n; ++i) uf[i] = i;
  std::function<int(int)> find = [&](int v) {
    while (uf[v] != v) {
      uf[v] = uf[uf[v]];
      v = uf[v];
    }
    return v;
  };
  std::vector<EdgeId> closing_links;
  basis.for_each([&](int id) {
    const Edge& e = g.edge(id);
    if (e.kind != EdgeKind::Link) return;
    int a = find(e.ends[0]), b = find(e.ends[1]);
    if (a == b) {
      closing_links.push_back(id);
    } else {
      uf[a] = b;
      tree_adj_[e.ends[0]].push_back({e.ends[1], id});
      tree_adj_[e.ends[1]].push_back({e.ends[0], id});
    }
  });

  int comp_count = 0;
  for (VertexId v0 = 0; v0 < n; ++v0) {
    if (comp_[v0] != -1) continue;
    int c = comp_count++;
    std::deque<VertexId> queue{v0};
    comp_[v0] = c;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (auto [w, id] : tree_adj_[v]) {
        if (comp_[w] != -1) continue;
        comp_[w] = c;
        parent_[w] = v;
        parent_edge_[w] = id;
        depth_[w] = depth_[v] + 1;
        sign_to_root_[w] = sign_to_root_[v] * sg.sign(id);
        queue.push_back(w);
      }
    }
  }
  figures_.assign(comp_count, {});

  auto set_figure = [&](int c, Figure f) {
    if (figures_[c].exists)
      throw std::invalid_argument("FrameBasisStructure: edge set is not independent");
    figures_[c] = std::move(f);
    figures_[c].exists = true;
  };

  basis.for_each([&](int id) {
    const Edge& e = g.edge(id);
    if (e.kind == EdgeKind::Half) {
      Figure f;
      f.is_half = true;
      f.edge = id;
      f.anchor = e.ends[0];
      set_figure(comp_[e.ends[0]], std::move(f));
    } else if (e.kind == EdgeKind::Loop) {
      if (sg.sign(id) == 1)
        throw std::invalid_argument("FrameBasisStructure: edge set is not independent");
      Figure f;
      f.edge = id;
      f.anchor = e.ends[0];
      f.circle_edges = {id};
      f.on_circle.assign(n, 0);
      f.on_circle[e.ends[0]] = 1;
      set_figure(comp_[e.ends[0]], std::move(f));
    } else if (e.kind == EdgeKind::Loose) {
      throw std::invalid_argument("FrameBasisStructure: loose edge cannot be independent");
    }
  });
  for (EdgeId id : closing_links) {
    const Edge& e = g.edge(id);
    Figure f;
    f.edge = id;
    std::vector<VertexId> verts;
    f.circle_edges = tree_path(e.ends[0], e.ends[1], &verts);
    f.circle_edges.push_back(id);
    Sign s = 1;
    for (EdgeId x : f.circle_edges) s *= sg.sign(x);
    if (s == 1)
      throw std::invalid_argument("FrameBasisStructure: edge set is not independent");
    f.on_circle.assign(n, 0);
    for (VertexId v : verts) f.on_circle[v] = 1;
    f.anchor = e.ends[0];
    set_figure(comp_[e.ends[0]], std::move(f));
  }
}

std::vector<EdgeId> FrameBasisStructure::tree_path(VertexId u, VertexId w,
                                                   std::vector<VertexId>* verts) const {
  std::vector<EdgeId> up_u, up_w;
  std::vector<VertexId> vu{u}, vw{w};
  VertexId a = u, b = w;
  while (depth_[a] > depth_[b]) {
    up_u.push_back(parent_edge_[a]);
    a = parent_[a];
    vu.push_back(a);
  }
  while (depth_[b] > depth_[a]) {
    up_w.push_back(parent_edge_[b]);
    b = parent_[b];
    vw.push_back(b);
  }
  while (a != b) {
    up_u.push_back(parent_edge_[a]);
    a = parent_[a];
    vu.push_back(a);
    up_w.push_back(parent_edge_[b]);
    b = parent_[b];
    vw.push_back(b);
  }
  std::vector<EdgeId> path = up_u;
  path.insert(path.end(), up_w.rbegin(), up_w.rend());
  if (verts) {
    *verts = vu;  // ends at the meeting vertex
    verts->insert(verts->end(), vw.rbegin() + 1, vw.rend());
  }
  return path;
}

std::vector<EdgeId> FrameBasisStructure::path_to_targets(VertexId v,
                                                         const std::vector<char>& target,
                                                         VertexId* hit) const {
  const int n = static_cast<int>(comp_.size());
  if (target[v]) {
    if (hit) *hit = v;
    return {};
  }
  std::vector<EdgeId> via_edge(n, -1);
  std::vector<VertexId> via_vertex(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{v};
  seen[v] = 1;
  VertexId found = -1;
  while (!queue.empty() && found == -1) {
    VertexId x = queue.front();
    queue.pop_front();
    for (auto [y, id] : tree_adj_[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      via_edge[y] = id;
      via_vertex[y] = x;
      if (target[y]) {
        found = y;
        break;
      }
      queue.push_back(y);
    }
  }
  if (found == -1) throw std::logic_error("path_to_targets: unreachable target");
  std::vector<EdgeId> path;
  for (VertexId x = found; x != v; x = via_vertex[x]) path.push_back(via_edge[x]);
  std::reverse(path.begin(), path.end());
  if (hit) *hit = found;
  return path;
}

std::optional<EdgeSet> FrameBasisStructure::fundamental_circuit_edges(EdgeId eid) const {
  const Graph& g = sg_.graph();
  const Edge& e = g.edge(eid);
  const int m = g.edge_count();
  auto make_set = [&](std::initializer_list<const std::vector<EdgeId>*> lists,
                      std::initializer_list<EdgeId> singles) {
    EdgeSet s(m);
    for (const auto* l : lists)
      for (EdgeId x : *l) s.set(x);
    for (EdgeId x : singles) s.set(x);
    return s;
  };

  if (e.kind == EdgeKind::Loose) return make_set({}, {eid});
  if (e.kind == EdgeKind::Loop && sg_.sign(eid) == 1) return make_set({}, {eid});

  if (e.kind == EdgeKind::Half || e.kind == EdgeKind::Loop) {
    // New negative figure at v; pair it with the component's figure.
    VertexId v = e.ends[0];
    const Figure& fig = figures_[comp_[v]];
    if (!fig.exists) return std::nullopt;
    std::vector<EdgeId> path = fig.is_half ? tree_path(v, fig.anchor, nullptr)
                                           : path_to_targets(v, fig.on_circle, nullptr);
    EdgeSet out = make_set({&path, &fig.circle_edges}, {eid});
    if (fig.is_half) out.set(fig.edge);
    return out;
  }

  // Link.
  VertexId u = e.ends[0], w = e.ends[1];
  if (comp_[u] != comp_[w]) {
    const Figure& fu = figures_[comp_[u]];
    const Figure& fw = figures_[comp_[w]];
    if (!fu.exists || !fw.exists) return std::nullopt;
    auto attach = [&](VertexId v, const Figure& f) {
      return f.is_half ? tree_path(v, f.anchor, nullptr)
                       : path_to_targets(v, f.on_circle, nullptr);
    };
    std::vector<EdgeId> pu = attach(u, fu);
    std::vector<EdgeId> pw = attach(w, fw);
    EdgeSet out = make_set({&pu, &pw, &fu.circle_edges, &fw.circle_edges}, {eid});
    if (fu.is_half) out.set(fu.edge);
    if (fw.is_half) out.set(fw.edge);
    return out;
  }

  // Link with both ends in one component: e closes a circle with the tree.
  std::vector<VertexId> circle_verts;
  std::vector<EdgeId> circle = tree_path(u, w, &circle_verts);
  circle.push_back(eid);
  Sign circ_sign = 1;
  for (EdgeId x : circle) circ_sign *= sg_.sign(x);
  if (circ_sign == 1) return make_set({&circle}, {});

  const Figure& fig = figures_[comp_[u]];
  if (!fig.exists) return std::nullopt;

  std::vector<char> on_ce(comp_.size(), 0);
  for (VertexId v : circle_verts) on_ce[v] = 1;

  if (fig.is_half) {
    std::vector<EdgeId> path =
        on_ce[fig.anchor] ? std::vector<EdgeId>{} : path_to_targets(fig.anchor, on_ce, nullptr);
    return make_set({&circle, &path}, {eid, fig.edge});
  }

  // Figure is a negative circle in the same tree: count shared vertices.
  int shared = 0;
  for (size_t v = 0; v < comp_.size(); ++v)
    if (on_ce[v] && fig.on_circle[v]) ++shared;
  if (shared >= 2) {
    // Theta: the third (positive) circle is the symmetric difference.
    EdgeSet ce = make_set({&circle}, {});
    EdgeSet fc = make_set({&fig.circle_edges}, {});
    return (ce | fc).minus(ce & fc);
  }
  std::vector<EdgeId> path;
  if (shared == 0) {
    // Minimal tree path from the new circle to the figure circle: try each
    // circle vertex, keep the shortest path that does not revisit the circle.
    std::vector<char> target(fig.on_circle.begin(), fig.on_circle.end());
    std::vector<EdgeId> best;
    bool have = false;
    for (VertexId v : circle_verts) {
      std::vector<EdgeId> p = path_to_targets(v, target, nullptr);
      bool crosses = false;
      VertexId at = v;
      for (size_t i = 0; i + 1 < p.size(); ++i) {
        const Edge& pe = g.edge(p[i]);
        at = pe.ends[0] == at ? pe.ends[1] : pe.ends[0];
        if (on_ce[at]) crosses = true;
      }
      if (!crosses && (!have || p.size() < best.size())) {
        best = std::move(p);
        have = true;
      }
    }
    if (!have) throw std::logic_error("fundamental_circuit_edges: no connecting path");
    path = best;
  }
  return make_set({&circle, &path, &fig.circle_edges}, {eid});
}

namespace {

// Traces the closed walk around a circle edge set, starting at `root` and
// leaving through the lowest-id incident circle edge.
Walk trace_circle(const Graph& g, const std::vector<EdgeId>& circle, VertexId root) {
  if (circle.size() == 1 && g.edge(circle[0]).kind == EdgeKind::Loop) {
    Walk w;
    w.start = root;
    w.steps.push_back({circle[0], 0, 1});
    return w;
  }
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(g.vertex_count());
  for (EdgeId id : circle) {
    const Edge& e = g.edge(id);
    adj[e.ends[0]].push_back({e.ends[1], id});
    adj[e.ends[1]].push_back({e.ends[0], id});
  }
  for (auto& v : adj)
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
  Walk w;
  w.start = root;
  VertexId at = root;
  EdgeId prev = -1;
  do {
    std::pair<VertexId, EdgeId> next{-1, -1};
    for (auto& cand : adj[at]) {
      if (cand.second != prev) {
        next = cand;
        break;
      }
    }
    if (next.second == -1) throw std::logic_error("trace_circle: not a circle");
    const Edge& e = g.edge(next.second);
    int from = e.ends[0] == at ? 0 : 1;
    w.steps.push_back({next.second, from, 1 - from});
    prev = next.second;
    at = next.first;
  } while (at != root);
  return w;
}

// Extracts the simple circle through `seed` within the given links/loops
// (backtracking over vertices; the sets involved are tiny).
std::vector<EdgeId> circle_through(const Graph& g, const std::vector<EdgeId>& pool,
                                   EdgeId seed) {
  const Edge& se = g.edge(seed);
  if (se.kind == EdgeKind::Loop) return {seed};
  VertexId a = se.ends[0], b = se.ends[1];
  std::vector<EdgeId> stack{seed};
  std::vector<char> vertex_used(g.vertex_count(), 0);
  vertex_used[b] = 1;
  std::vector<EdgeId> found;
  std::function<bool(VertexId)> dfs = [&](VertexId at) {
    for (EdgeId id : pool) {
      if (id == seed || g.edge(id).kind == EdgeKind::Loop) continue;
      if (std::find(stack.begin(), stack.end(), id) != stack.end()) continue;
      const Edge& e = g.edge(id);
      VertexId other;
      if (e.ends[0] == at) other = e.ends[1];
      else if (e.ends[1] == at) other = e.ends[0];
      else continue;
      if (other == a) {
        stack.push_back(id);
        found = stack;
        stack.pop_back();
        return true;
      }
      if (vertex_used[other]) continue;
      vertex_used[other] = 1;
      stack.push_back(id);
      if (dfs(other)) return true;
      stack.pop_back();
      vertex_used[other] = 0;
    }
    return false;
  };
  if (!dfs(b)) return {};
  return found;
}

}  // namespace

std::optional<SignCircuit> classify_sign_circuit(const SignedGraph& sg,
                                                 const EdgeSet& edges) {
  const Graph& g = sg.graph();
  auto ids = edges.ids();
  if (ids.empty()) return std::nullopt;

  if (ids.size() == 1 && g.edge(ids[0]).kind == EdgeKind::Loose) {
    SignCircuit c;
    c.kind = SignCircuit::Kind::LooseEdge;
    c.loose_edge = ids[0];
    c.edges = edges;
    return c;
  }

  std::vector<EdgeId> halves, links, loops;
  for (EdgeId id : ids) {
    switch (g.edge(id).kind) {
      case EdgeKind::Loose:
        return std::nullopt;
      case EdgeKind::Half:
        halves.push_back(id);
        break;
      case EdgeKind::Link:
        links.push_back(id);
        break;
      case EdgeKind::Loop:
        loops.push_back(id);
        break;
    }
  }
  if (halves.size() > 2) return std::nullopt;

  const int n = g.vertex_count();
  std::vector<int> degree(n, 0);
  for (EdgeId id : links) {
    degree[g.edge(id).ends[0]]++;
    degree[g.edge(id).ends[1]]++;
  }
  for (EdgeId id : loops) degree[g.edge(id).ends[0]] += 2;
  for (EdgeId id : halves) degree[g.edge(id).ends[0]]++;

  // all edges must sit in one vertex-connected piece
  {
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    std::function<int(int)> find = [&](int v) {
      while (uf[v] != v) {
        uf[v] = uf[uf[v]];
        v = uf[v];
      }
      return v;
    };
    for (EdgeId id : links) uf[find(g.edge(id).ends[0])] = find(g.edge(id).ends[1]);
    int root = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (degree[v] == 0) continue;
      if (root == -1) root = find(v);
      else if (find(v) != root) return std::nullopt;
    }
  }

  // Positive circle: no halves, 2-regular, connected, positive sign product.
  bool two_regular = true;
  for (VertexId v = 0; v < n; ++v)
    if (degree[v] != 0 && degree[v] != 2) two_regular = false;
  if (halves.empty() && two_regular) {
    if (!loops.empty() && ids.size() != 1) return std::nullopt;
    Sign s = 1;
    for (EdgeId id : ids) s *= sg.sign(id);
    if (s != 1) return std::nullopt;  // a lone negative circle is independent
    VertexId root = -1;
    for (VertexId v = 0; v < n && root == -1; ++v)
      if (degree[v] > 0) root = v;
    SignCircuit c;
    c.kind = SignCircuit::Kind::PositiveCircle;
    c.circle_walk = trace_circle(g, std::vector<EdgeId>(ids.begin(), ids.end()), root);
    c.edges = edges;
    return c;
  }

  // Handcuff.  Bridges among the links form the connecting path; the rest
  // must decompose into exactly 2 - #halves negative circles.
  auto connected_without = [&](EdgeId skip, VertexId a, VertexId b) {
    std::vector<char> seen(n, 0);
    std::deque<VertexId> queue{a};
    seen[a] = 1;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      if (v == b) return true;
      for (EdgeId id : links) {
        if (id == skip) continue;
        const Edge& e = g.edge(id);
        VertexId other = -1;
        if (e.ends[0] == v) other = e.ends[1];
        else if (e.ends[1] == v) other = e.ends[0];
        if (other != -1 && !seen[other]) {
          seen[other] = 1;
          queue.push_back(other);
        }
      }
    }
    return false;
  };
  std::vector<EdgeId> bridges, circle_pool;
  for (EdgeId id : links) {
    const Edge& e = g.edge(id);
    (connected_without(id, e.ends[0], e.ends[1]) ? circle_pool : bridges).push_back(id);
  }
  for (EdgeId id : loops) circle_pool.push_back(id);

  std::vector<std::vector<EdgeId>> circles;
  {
    std::vector<char> used(g.edge_count(), 0);
    for (EdgeId seed : circle_pool) {
      if (used[seed]) continue;
      std::vector<EdgeId> avail;
      for (EdgeId id : circle_pool)
        if (!used[id]) avail.push_back(id);
      std::vector<EdgeId> circ = circle_through(g, avail, seed);
      if (circ.empty()) return std::nullopt;
      for (EdgeId id : circ) used[id] = 1;
      circles.push_back(std::move(circ));
    }
  }

  if (circles.size() + halves.size() != 2) return std::nullopt;
  for (const auto& circ : circles) {
    Sign s = 1;
    for (EdgeId id : circ) s *= sg.sign(id);
    if (s != -1) return std::nullopt;
  }
  // every non-bridge edge must have been consumed by the circles
  {
    size_t total = 0;
    for (const auto& c : circles) total += c.size();
    if (total != circle_pool.size()) return std::nullopt;
  }

  struct RawFigure {
    bool is_half;
    EdgeId half;
    std::vector<EdgeId> circle;
    std::vector<char> on;
    int min_edge;
  };
  std::vector<RawFigure> figs;
  for (EdgeId h : halves) {
    RawFigure f{true, h, {}, std::vector<char>(n, 0), h};
    f.on[g.edge(h).ends[0]] = 1;
    figs.push_back(std::move(f));
  }
  for (auto& circ : circles) {
    RawFigure f{false, -1, circ, std::vector<char>(n, 0), circ[0]};
    for (EdgeId id : circ) {
      f.min_edge = std::min(f.min_edge, id);
      const Edge& e = g.edge(id);
      f.on[e.ends[0]] = 1;
      f.on[e.ends[1]] = 1;
    }
    figs.push_back(std::move(f));
  }
  if (figs[1].min_edge < figs[0].min_edge) std::swap(figs[0], figs[1]);

  VertexId root1 = -1, root2 = -1;
  std::vector<EdgeId> path_order;
  if (bridges.empty()) {
    int common = 0;
    for (VertexId v = 0; v < n; ++v)
      if (figs[0].on[v] && figs[1].on[v]) {
        ++common;
        root1 = root2 = v;
      }
    if (common != 1) return std::nullopt;
  } else {
    std::vector<int> pdeg(n, 0);
    for (EdgeId id : bridges) {
      pdeg[g.edge(id).ends[0]]++;
      pdeg[g.edge(id).ends[1]]++;
    }
    std::vector<VertexId> endpoints;
    for (VertexId v = 0; v < n; ++v) {
      if (pdeg[v] == 1) endpoints.push_back(v);
      else if (pdeg[v] != 0 && pdeg[v] != 2) return std::nullopt;
    }
    if (endpoints.size() != 2) return std::nullopt;
    VertexId a = endpoints[0], b = endpoints[1];
    if (figs[0].on[a] && figs[1].on[b]) {
      root1 = a;
      root2 = b;
    } else if (figs[0].on[b] && figs[1].on[a]) {
      root1 = b;
      root2 = a;
    } else {
      return std::nullopt;
    }
    // figures must be vertex-disjoint, path interior avoids them
    for (VertexId v = 0; v < n; ++v)
      if (figs[0].on[v] && figs[1].on[v]) return std::nullopt;
    VertexId at = root1;
    std::vector<char> used(g.edge_count(), 0);
    for (size_t k = 0; k < bridges.size(); ++k) {
      EdgeId next = -1;
      for (EdgeId id : bridges) {
        if (!used[id] && g.edge(id).incident_to(at)) {
          next = id;
          break;
        }
      }
      if (next == -1) return std::nullopt;
      used[next] = 1;
      path_order.push_back(next);
      const Edge& e = g.edge(next);
      at = e.ends[0] == at ? e.ends[1] : e.ends[0];
      if (k + 1 < bridges.size() && (figs[0].on[at] || figs[1].on[at])) return std::nullopt;
    }
    if (at != root2) return std::nullopt;
  }

  auto build_fig = [&](const RawFigure& rf, VertexId root) {
    NegativeFigure f;
    f.root = root;
    f.is_half = rf.is_half;
    EdgeSet es(g.edge_count());
    if (rf.is_half) {
      f.half_edge = rf.half;
      es.set(rf.half);
    } else {
      f.circle_walk = trace_circle(g, rf.circle, root);
      for (EdgeId id : rf.circle) es.set(id);
    }
    f.edges = es;
    return f;
  };

  SignCircuit c;
  c.kind = SignCircuit::Kind::Handcuff;
  c.fig1 = build_fig(figs[0], root1);
  c.fig2 = build_fig(figs[1], root2);
  c.path = make_walk(g, root1, path_order);
  c.edges = edges;
  return c;
}

std::optional<SignCircuit> fundamental_sign_circuit(const SignedGraph& sg,
                                                    const EdgeSet& b, EdgeId e) {
  if (b.test(e)) throw std::invalid_argument("fundamental_sign_circuit: e in basis");
  if (frame_rank(sg, b) != b.count())
    throw std::invalid_argument("fundamental_sign_circuit: basis is not independent");
  FrameBasisStructure st(sg, b);
  auto circ = st.fundamental_circuit_edges(e);
  if (!circ) return std::nullopt;
  auto classified = classify_sign_circuit(sg, *circ);
  if (!classified)
    throw std::logic_error("fundamental_sign_circuit: extraction is not a sign circuit");
  return classified;
}

EdgeSet frame_closure(const SignedGraph& sg, const EdgeSet& s) {
  const Graph& g = sg.graph();
  BalanceResult bal = balanced_components(sg, s);
  EdgeSet closure(g.edge_count());
  for (const Edge& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::Loose:
        closure.set(e.id);
        break;
      case EdgeKind::Half:
        if (!bal.vertex_balanced[e.ends[0]]) closure.set(e.id);
        break;
      case EdgeKind::Link:
      case EdgeKind::Loop: {
        VertexId u = e.ends[0], w = e.ends[1];
        if (!bal.vertex_balanced[u] && !bal.vertex_balanced[w]) {
          closure.set(e.id);
        } else if (bal.vertex_balanced[u] && bal.vertex_balanced[w] &&
                   bal.comp_of[u] == bal.comp_of[w] &&
                   sg.sign(e.id) == bal.zeta[u] * bal.zeta[w]) {
          closure.set(e.id);
        }
        break;
      }
    }
  }
  return closure;
}

}  // namespace gsg
