#include "gsg/gain_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "gsg/enumerate.hpp"

namespace gsg {

GainSignedGraph::GainSignedGraph(SignedGraph sg, Orientation tau, Group group,
                                 std::vector<GroupElem> phi)
    : sg_(std::move(sg)), tau_(std::move(tau)), group_(group), phi_(std::move(phi)) {
  if (static_cast<int>(phi_.size()) != sg_.edge_count())
    throw std::invalid_argument("GainSignedGraph: gain count mismatch");
}

GainSignedGraph reorient(const GainSignedGraph& u, EdgeId e) {
  std::vector<GroupElem> phi = u.gains();
  phi[e] = u.group().neg(phi[e]);
  Orientation tau = u.graph().edge(e).end_count() > 0
                        ? u.orientation().with_edge_flipped(e)
                        : u.orientation();
  return GainSignedGraph(u.signed_graph(), std::move(tau), u.group(), std::move(phi));
}

GainSignedGraph reorient_set(const GainSignedGraph& u, const EdgeSet& s) {
  GainSignedGraph r = u;
  s.for_each([&](int id) { r = reorient(r, id); });
  return r;
}

GainSignedGraph switch_gains(const GainSignedGraph& u, const GainSwitcher& theta) {
  if (static_cast<int>(theta.theta.size()) != u.vertex_count())
    throw std::invalid_argument("switch_gains: switcher size mismatch");
  const Group& grp = u.group();
  std::vector<GroupElem> phi = u.gains();
  for (const Edge& e : u.graph().edges()) {
    GroupElem v = phi[e.id];
    if (e.end_count() >= 1)
      v = grp.add(v, grp.scale(u.tau(e.id, 0), theta.theta[e.ends[0]]));
    if (e.end_count() == 2)
      v = grp.add(v, grp.scale(u.tau(e.id, 1), theta.theta[e.ends[1]]));
    phi[e.id] = v;
  }
  return GainSignedGraph(u.signed_graph(), u.orientation(), grp, std::move(phi));
}

GainSignedGraph switch_signs(const GainSignedGraph& u, const SignSwitcher& zeta) {
  auto [sg, tau] = switch_signs(u.signed_graph(), u.orientation(), zeta);
  return GainSignedGraph(std::move(sg), std::move(tau), u.group(), u.gains());
}

GroupElem walk_gain(const GainSignedGraph& u, const Walk& w) {
  w.validate(u.graph());
  const Group& grp = u.group();
  GroupElem acc = grp.zero();
  if (w.initial_half) {
    EdgeId h = *w.initial_half;
    acc = grp.add(acc, grp.scale(u.tau(h, 0), u.gain(h)));
  }
  Sign running = 1;  // sigma(W_{0,i-1}), half edges excluded
  for (const WalkStep& st : w.steps) {
    acc = grp.add(acc, grp.scale(-running * u.tau(st.edge, st.from_slot),
                                 u.gain(st.edge)));
    running *= u.sign(st.edge);
  }
  if (w.terminal_half) {
    EdgeId h = *w.terminal_half;
    acc = grp.add(acc, grp.scale(-running * u.tau(h, 0), u.gain(h)));
  }
  return acc;
}

GroupElem figure_gain(const GainSignedGraph& u, const NegativeFigure& f) {
  if (f.is_half)
    return u.group().scale(-u.tau(f.half_edge, 0), u.gain(f.half_edge));
  return walk_gain(u, f.circle_walk);
}

GroupElem circuit_gain(const GainSignedGraph& u, const SignCircuit& c) {
  const Group& grp = u.group();
  switch (c.kind) {
    case SignCircuit::Kind::LooseEdge:
      return u.gain(c.loose_edge);
    case SignCircuit::Kind::PositiveCircle:
      return walk_gain(u, c.circle_walk);
    case SignCircuit::Kind::Handcuff:
      break;
  }
  // The connecting path carries a sign factor; the tight case has
  // phi(P) = 0 and sigma(P) = +1.
  Sign psign = 1;
  for (const WalkStep& st : c.path.steps) psign *= u.sign(st.edge);
  GroupElem g1 = figure_gain(u, c.fig1);
  GroupElem g2 = figure_gain(u, c.fig2);
  GroupElem pg = walk_gain(u, c.path);
  if (!c.fig1.is_half && !c.fig2.is_half)
    return grp.sub(grp.sub(g1, grp.scale(psign, g2)), grp.scale(2, pg));
  if (c.fig1.is_half && c.fig2.is_half)
    return grp.sub(grp.sub(g1, grp.scale(psign, g2)), pg);
  // exactly one half edge: it plays the "C1" role of the gain formula
  if (c.fig1.is_half)
    return grp.sub(grp.sub(grp.scale(2, g1), grp.scale(psign, g2)), grp.scale(2, pg));
  GroupElem pg_rev = walk_gain(u, c.path.reversed(u.graph()));
  return grp.sub(grp.sub(grp.scale(2, g2), grp.scale(psign, g1)), grp.scale(2, pg_rev));
}

bool is_neutral(const GainSignedGraph& u, const SignCircuit& c) {
  return u.group().is_zero(circuit_gain(u, c));
}

GainSwitcher neutralize_pseudoforest(const GainSignedGraph& u, const EdgeSet& t) {
  const Graph& g = u.graph();
  const Group& grp = u.group();
  const int n = g.vertex_count();

  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  std::vector<std::vector<EdgeId>> half_at(n);
  t.for_each([&](int id) {
    const Edge& e = g.edge(id);
    switch (e.kind) {
      case EdgeKind::Link:
        adj[e.ends[0]].push_back({e.ends[1], id});
        adj[e.ends[1]].push_back({e.ends[0], id});
        break;
      case EdgeKind::Half:
        half_at[e.ends[0]].push_back(id);
        break;
      default:
        throw std::invalid_argument("neutralize_pseudoforest: not a pseudoforest");
    }
  });

  GainSwitcher theta;
  theta.theta.assign(n, grp.zero());
  std::vector<int> comp(n, -1);
  for (VertexId root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    // BFS computing sigma(T_rv) and phi(T_rv) along the tree
    std::vector<VertexId> members;
    std::vector<Sign> sgn(n, 1);
    std::vector<GroupElem> gain(n, grp.zero());
    std::deque<VertexId> queue{root};
    comp[root] = root;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (auto [w, id] : adj[v]) {
        if (comp[w] != -1) continue;
        comp[w] = root;
        sgn[w] = sgn[v] * u.sign(id);
        // phi(T_rw) = phi(T_rv) + sigma(T_rv) * phi(v e w)
        int from = g.edge(id).ends[0] == v ? 0 : 1;
        gain[w] = grp.add(gain[v],
                          grp.scale(-sgn[v] * u.tau(id, from), u.gain(id)));
        queue.push_back(w);
      }
    }
    // detect a cycle: tree edge count must be members-1
    int tree_edges = 0;
    for (VertexId v : members) tree_edges += static_cast<int>(adj[v].size());
    if (tree_edges != 2 * (static_cast<int>(members.size()) - 1))
      throw std::invalid_argument("neutralize_pseudoforest: not a forest");

    GroupElem theta0 = grp.zero();
    int halves = 0;
    for (VertexId v : members) {
      for (EdgeId h : half_at[v]) {
        if (++halves > 1)
          throw std::invalid_argument(
              "neutralize_pseudoforest: two half edges in one component");
        // theta0 = phi(T_re) for the ultrawalk ending with the half edge
        theta0 = grp.sub(gain[v], grp.scale(sgn[v] * u.tau(h, 0), u.gain(h)));
      }
    }
    for (VertexId v : members)
      theta.theta[v] = grp.scale(sgn[v], grp.sub(theta0, gain[v]));
  }
  return theta;
}

bool is_hyperbalanced(const GainSignedGraph& u, const EdgeSet& s) {
  const SignedGraph& sg = u.signed_graph();
  if (!u.group().two_torsion_free()) {
    // Fundamental circuits of a basis do not decide hyperbalance when the
    // group has 2-torsion (a neutral handcuff can hide an order-2 residue on
    // its connecting path); fall back to the definition.
    for (const auto& sc : enumerate_sign_circuits(sg, s))
      if (!is_neutral(u, sc)) return false;
    return true;
  }
  EdgeSet basis = frame_basis(sg, s);
  FrameBasisStructure st(sg, basis);
  bool ok = true;
  s.minus(basis).for_each([&](int id) {
    if (!ok) return;
    auto circ = st.fundamental_circuit_edges(id);
    if (!circ) throw std::logic_error("is_hyperbalanced: basis does not span s");
    auto sc = classify_sign_circuit(sg, *circ);
    if (!sc) throw std::logic_error("is_hyperbalanced: bad fundamental circuit");
    if (!is_neutral(u, *sc)) ok = false;
  });
  return ok;
}

std::optional<std::pair<SignSwitcher, GainSwitcher>> hyperbalance_witness(
    const GainSignedGraph& u, const EdgeSet& s) {
  if (!is_hyperbalanced(u, s))
    throw std::invalid_argument("hyperbalance_witness: set is hyperfrustrated");
  const Graph& g = u.graph();
  const Group& grp = u.group();
  const int n = g.vertex_count();
  BalanceResult bal = balanced_components(u.signed_graph(), s);

  // zeta switches the spanning forest all positive (and with it every
  // balanced component of (V,s)); after neutralizing the forest, a positive
  // non-forest edge closes a positive circle and is forced neutral by
  // hyperbalance, so only negative edges and half edges leave residues.
  EdgeSet forest = spanning_forest(g, s);
  SignSwitcher zeta;
  zeta.zeta.assign(n, 1);
  {
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
    forest.for_each([&](int id) {
      const Edge& e = g.edge(id);
      adj[e.ends[0]].push_back({e.ends[1], id});
      adj[e.ends[1]].push_back({e.ends[0], id});
    });
    std::vector<char> seen(n, 0);
    for (VertexId root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::deque<VertexId> queue{root};
      while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (auto [w, id] : adj[v]) {
          if (seen[w]) continue;
          seen[w] = 1;
          zeta.zeta[w] = u.sign(id) * zeta.zeta[v];
          queue.push_back(w);
        }
      }
    }
  }
  GainSignedGraph uz = switch_signs(u, zeta);

  // Neutralize the forest, then shift each component by a constant to kill
  // the common residue of negative edges / half edges.
  GainSwitcher theta = neutralize_pseudoforest(uz, forest);
  GainSignedGraph ut = switch_gains(uz, theta);

  std::vector<char> has_neg(n, 0), has_half(n, 0), seen(n, 0);
  std::vector<GroupElem> neg_psi(n, grp.zero()), half_psi(n, grp.zero());
  bool feasible = true;
  s.for_each([&](int id) {
    if (!feasible) return;
    const Edge& e = g.edge(id);
    if (e.kind == EdgeKind::Loose) return;  // neutral by hyperbalance
    int c = bal.comp_of[e.ends[0]];
    if (e.kind == EdgeKind::Half) {
      GroupElem psi = grp.scale(-ut.tau(id, 0), ut.gain(id));
      if (has_half[c] && !(half_psi[c] == psi)) feasible = false;
      has_half[c] = 1;
      half_psi[c] = psi;
    } else if (ut.sign(id) == -1) {
      // negative link or loop; both tau slots agree
      GroupElem psi = grp.scale(-ut.tau(id, 0), ut.gain(id));
      if (has_neg[c] && !(neg_psi[c] == psi)) feasible = false;
      has_neg[c] = 1;
      neg_psi[c] = psi;
    }
  });
  if (!feasible)
    throw std::logic_error("hyperbalance_witness: inconsistent residues");

  for (int c = 0; c < bal.comp_count; ++c) {
    GroupElem shift = grp.zero();
    if (has_half[c]) {
      shift = half_psi[c];
      if (has_neg[c] && !(grp.scale(2, shift) == neg_psi[c]))
        throw std::logic_error("hyperbalance_witness: half/negative mismatch");
    } else if (has_neg[c]) {
      auto h = grp.halve(neg_psi[c]);
      if (!h) return std::nullopt;  // obstruction: 2x = psi unsolvable
      shift = *h;
    } else {
      continue;
    }
    for (VertexId v = 0; v < n; ++v)
      if (bal.comp_of[v] == c)
        theta.theta[v] = grp.add(theta.theta[v], shift);
  }

  // validate
  GainSignedGraph check = switch_gains(uz, theta);
  bool all_neutral = true;
  s.for_each([&](int id) {
    if (!grp.is_zero(check.gain(id))) all_neutral = false;
  });
  if (!all_neutral)
    throw std::logic_error("hyperbalance_witness: construction failed");
  return std::make_pair(zeta, theta);
}

EdgeSet edges_neutral_under(const GainSignedGraph& u, const GainSwitcher& theta) {
  GainSignedGraph switched = switch_gains(u, theta);
  EdgeSet r(u.edge_count());
  for (EdgeId e = 0; e < u.edge_count(); ++e)
    if (u.group().is_zero(switched.gain(e))) r.set(e);
  return r;
}

EdgeSet edges_sign_determined(const SignedGraph& sg, const std::vector<Sign>& zeta,
                              const std::vector<char>& in_domain) {
  EdgeSet r(sg.edge_count());
  for (const Edge& e : sg.graph().edges()) {
    if (e.end_count() != 2) continue;
    if (!in_domain[e.ends[0]] || !in_domain[e.ends[1]]) continue;
    if (sg.sign(e.id) == zeta[e.ends[0]] * zeta[e.ends[1]]) r.set(e.id);
  }
  return r;
}

EdgeSet edges_of_potentials(const GainSignedGraph& u, const GainSwitcher& theta,
                            const std::vector<Sign>& zeta,
                            const std::vector<char>& in_domain) {
  return edges_neutral_under(u, theta) &
         edges_sign_determined(u.signed_graph(), zeta, in_domain);
}

}  // namespace gsg
