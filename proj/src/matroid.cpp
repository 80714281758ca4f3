#include "gsg/matroid.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gsg/enumerate.hpp"

namespace gsg {

EdgeSet Matroid::graph_part(const EdgeSet& s) const {
  const int m = u_->edge_count();
  if (s.universe() == m) return s;
  if (s.universe() == ground_size()) return s.resized(m);
  throw std::invalid_argument("Matroid: edge set universe mismatch");
}

bool Matroid::set_hyperbalanced(const EdgeSet& s) const {
  if (has_extra(s)) return false;
  return is_hyperbalanced(*u_, graph_part(s));
}

int Matroid::rank(const EdgeSet& s) const {
  EdgeSet se = graph_part(s);
  int b = balanced_components(u_->signed_graph(), se).balanced_count;
  int delta = set_hyperbalanced(s) ? 0 : 1;
  return u_->vertex_count() - b + delta;
}

bool Matroid::is_independent(const EdgeSet& s) const { return nullity(s) == 0; }

IndependenceCertificate Matroid::independence(const EdgeSet& s) const {
  const Graph& g = u_->graph();
  EdgeSet se = graph_part(s);
  BalanceResult bal = balanced_components(u_->signed_graph(), se);

  IndependenceCertificate cert;
  cert.special_circuit = EdgeSet(g.edge_count());
  bool dependent = false;
  int specials = 0;

  auto consider_special = [&](IndependenceCertificate::SpecialKind kind,
                              const EdgeSet& circuit) {
    ++specials;
    if (specials > 1) {
      dependent = true;
      return;
    }
    cert.special = kind;
    cert.special_circuit = circuit;
  };

  if (has_extra(s))
    consider_special(IndependenceCertificate::SpecialKind::ExtraPoint,
                     EdgeSet(g.edge_count()));

  se.for_each([&](int id) {
    if (g.edge(id).kind != EdgeKind::Loose) return;
    if (u_->group().is_zero(u_->gain(id)))
      dependent = true;  // a neutral loose edge is a matroid loop
    else
      consider_special(IndependenceCertificate::SpecialKind::NonNeutralLoose,
                       EdgeSet(g.edge_count(), {id}));
  });

  // per vertex component: edge count and cyclomatic number
  std::vector<int> comp_edges(bal.comp_count, 0);
  std::vector<EdgeSet> comp_sets(bal.comp_count, EdgeSet(g.edge_count()));
  se.for_each([&](int id) {
    const Edge& e = g.edge(id);
    if (e.kind == EdgeKind::Loose) return;
    int c = bal.comp_of[e.ends[0]];
    comp_edges[c]++;
    comp_sets[c].set(id);
  });
  std::vector<int> comp_verts(bal.comp_count, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) comp_verts[bal.comp_of[v]]++;

  auto unique_circuit_of = [&](const EdgeSet& comp_set) {
    // frame nullity 1: the unique sign circuit is {f : comp minus f spans}
    const SignedGraph& sg = u_->signed_graph();
    int rk = frame_rank(sg, comp_set);
    EdgeSet circ(g.edge_count());
    comp_set.for_each([&](int f) {
      if (frame_rank(sg, comp_set.without(f)) == rk) circ.set(f);
    });
    return circ;
  };

  for (int c = 0; c < bal.comp_count && !dependent; ++c) {
    if (comp_edges[c] == 0) continue;
    int xi = comp_edges[c] - comp_verts[c] + 1;
    bool balanced = bal.comp_balanced[c];
    if (xi == 0) continue;  // tree
    if (xi == 1 && !balanced) continue;  // sign-unbalanced unicycle
    if (xi == 1 && balanced) {
      // unique positive circle; independent only if non-neutral
      EdgeSet circ = unique_circuit_of(comp_sets[c]);
      auto sc = classify_sign_circuit(u_->signed_graph(), circ);
      if (!sc || is_neutral(*u_, *sc)) {
        dependent = true;
      } else {
        consider_special(IndependenceCertificate::SpecialKind::BalancedUnicycle, circ);
      }
      continue;
    }
    if (xi == 2 && !balanced) {
      EdgeSet circ = unique_circuit_of(comp_sets[c]);
      auto sc = classify_sign_circuit(u_->signed_graph(), circ);
      if (!sc || is_neutral(*u_, *sc)) {
        dependent = true;
      } else {
        consider_special(IndependenceCertificate::SpecialKind::UnbalancedCore, circ);
      }
      continue;
    }
    dependent = true;  // xi >= 2 balanced, or xi >= 3
  }

  cert.independent = !dependent && specials <= 1;
  if (!cert.independent) {
    cert.special = IndependenceCertificate::SpecialKind::None;
    cert.special_circuit = EdgeSet(g.edge_count());
  }
  if (cert.independent != (nullity(s) == 0))
    throw std::logic_error("independence: structural and rank paths disagree");
  return cert;
}

EdgeSet Matroid::closure(const EdgeSet& s) const {
  const Graph& g = u_->graph();
  EdgeSet se = graph_part(s);
  EdgeSet out(ground_size());
  if (!set_hyperbalanced(s)) {
    EdgeSet fc = frame_closure(u_->signed_graph(), se);
    fc.for_each([&](int id) { out.set(id); });
    if (extended_) out.set(extra_id());
    return out;
  }
  // hyperbalanced: e is in the closure iff its fundamental sign circuit over
  // a basis of s exists and is neutral (the gain balance-closure)
  EdgeSet basis = frame_basis(u_->signed_graph(), se);
  FrameBasisStructure st(u_->signed_graph(), basis);
  const bool shortcut = u_->group().two_torsion_free();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (se.test(e)) {
      out.set(e);
      continue;
    }
    auto circ = st.fundamental_circuit_edges(e);
    if (!circ) continue;
    if (!shortcut) {
      // with 2-torsion a neutral fundamental circuit does not imply that the
      // whole extension stays hyperbalanced
      if (is_hyperbalanced(*u_, se.with(e))) out.set(e);
      continue;
    }
    auto sc = classify_sign_circuit(u_->signed_graph(), *circ);
    if (!sc) throw std::logic_error("closure: bad fundamental circuit");
    if (is_neutral(*u_, *sc)) out.set(e);
  }
  return out;
}

EdgeSet Matroid::closure_by_rank(const EdgeSet& s) const {
  EdgeSet se = s.universe() == ground_size() ? s : lift(graph_part(s));
  int rk = rank(se);
  EdgeSet out(ground_size());
  for (int e = 0; e < ground_size(); ++e) {
    if (se.test(e) || rank(se.with(e)) == rk) out.set(e);
  }
  return out;
}

FlatDescriptor Matroid::describe_flat(const EdgeSet& flat_graph_edges,
                                      bool hyperbalanced) const {
  FlatDescriptor d;
  d.hyperbalanced = hyperbalanced;
  BalanceResult bal = balanced_components(u_->signed_graph(), flat_graph_edges);
  d.U = bal.unbalanced_vertices;
  d.pi = bal.balanced_blocks;
  d.zeta = bal.zeta;
  d.zeta_domain.assign(u_->vertex_count(), 0);
  for (const auto& block : d.pi)
    for (VertexId v : block) d.zeta_domain[v] = 1;
  if (hyperbalanced) {
    auto w = hyperbalance_witness(*u_, flat_graph_edges);
    if (w) {
      // combine: (zeta then theta) on gains equals theta^zeta on the original
      GainSwitcher combined;
      combined.theta.resize(u_->vertex_count());
      for (VertexId v = 0; v < u_->vertex_count(); ++v)
        combined.theta[v] = u_->group().scale(w->first.zeta[v], w->second.theta[v]);
      d.theta = std::move(combined);
    }
  }
  return d;
}

std::optional<EdgeSet> realize_flat_descriptor(const GainSignedGraph& u,
                                               const FlatDescriptor& d,
                                               bool extended) {
  const Graph& g = u.graph();
  const int m = g.edge_count();
  const int ground = m + (extended ? 1 : 0);
  std::vector<char> in_U(u.vertex_count(), 0);
  for (VertexId v : d.U) in_U[v] = 1;
  std::vector<int> block_of(u.vertex_count(), -1);
  for (size_t b = 0; b < d.pi.size(); ++b)
    for (VertexId v : d.pi[b]) block_of[v] = static_cast<int>(b);

  EdgeSet neutral(m);
  if (d.hyperbalanced) {
    if (!d.theta) return std::nullopt;
    neutral = edges_neutral_under(u, *d.theta);
  }
  EdgeSet out(ground);
  for (const Edge& e : g.edges()) {
    bool in = false;
    switch (e.kind) {
      case EdgeKind::Loose:
        in = d.hyperbalanced ? u.group().is_zero(u.gain(e.id)) : true;
        break;
      case EdgeKind::Half:
        in = in_U[e.ends[0]] && (!d.hyperbalanced || neutral.test(e.id));
        break;
      case EdgeKind::Link:
      case EdgeKind::Loop: {
        VertexId v = e.ends[0], w = e.ends[1];
        if (in_U[v] && in_U[w]) {
          in = !d.hyperbalanced || neutral.test(e.id);
        } else if (block_of[v] != -1 && block_of[v] == block_of[w] &&
                   u.sign(e.id) == d.zeta[v] * d.zeta[w]) {
          in = !d.hyperbalanced || neutral.test(e.id);
        }
        break;
      }
    }
    if (in) out.set(e.id);
  }
  if (extended && !d.hyperbalanced) out.set(m);
  return out;
}

std::vector<Flat> Matroid::flats(bool hyperbalanced_only) const {
  if (ground_size() > budget.max_enum_edges)
    throw BudgetExceeded("flats: too many edges for enumeration",
                         budget.max_enum_edges);
  std::map<EdgeSet, int> known;  // flat -> rank
  std::vector<EdgeSet> frontier;
  EdgeSet bottom = closure(EdgeSet(ground_size()));
  known[bottom] = rank(bottom);
  frontier.push_back(bottom);
  while (!frontier.empty()) {
    std::vector<EdgeSet> next;
    for (const EdgeSet& f : frontier) {
      for (int e = 0; e < ground_size(); ++e) {
        if (f.test(e)) continue;
        EdgeSet g2 = closure(f.with(e));
        if (known.find(g2) == known.end()) {
          known[g2] = rank(g2);
          next.push_back(g2);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Flat> out;
  for (const auto& [edges, rk] : known) {
    bool hb = set_hyperbalanced(edges);
    if (hyperbalanced_only && !hb) continue;
    Flat f;
    f.edges = edges;
    f.rank = rk;
    f.desc = describe_flat(graph_part(edges), hb);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Hypercircuit> Matroid::circuits() const {
  if (ground_size() > budget.max_circuit_edges)
    throw BudgetExceeded("circuits: too many edges for enumeration",
                         budget.max_circuit_edges);
  const int gs = ground_size();
  long long steps = 0;
  std::map<EdgeSet, HypercircuitClass> found;

  auto extract_circuit = [&](const EdgeSet& dep) {
    int rk = rank(dep);
    EdgeSet circ(gs);
    dep.for_each([&](int f) {
      if (rank(dep.without(f)) == rk) circ.set(f);
    });
    return circ;
  };

  std::function<void(const EdgeSet&, int, int)> dfs = [&](const EdgeSet& indep,
                                                          int next, int sz) {
    if (++steps > budget.max_steps)
      throw BudgetExceeded("circuits: step budget exceeded", budget.max_steps);
    for (int e = next; e < gs; ++e) {
      EdgeSet cand = indep.with(e);
      if (rank(cand) == sz + 1) {
        dfs(cand, e + 1, sz + 1);
      } else {
        EdgeSet circ = extract_circuit(cand);
        if (found.find(circ) == found.end())
          found.emplace(circ, classify_circuit(circ));
      }
    }
  };
  dfs(EdgeSet(gs), 0, 0);

  std::vector<Hypercircuit> out;
  for (const auto& [edges, cls] : found) out.push_back({edges, cls});
  return out;
}

std::vector<EdgeSet> Matroid::bases() const {
  if (ground_size() > budget.max_circuit_edges)
    throw BudgetExceeded("bases: too many edges for enumeration",
                         budget.max_circuit_edges);
  const int gs = ground_size();
  const int rk_full = rank(ground());
  long long steps = 0;
  std::vector<EdgeSet> out;
  std::function<void(const EdgeSet&, int, int)> dfs = [&](const EdgeSet& indep,
                                                          int next, int sz) {
    if (++steps > budget.max_steps)
      throw BudgetExceeded("bases: step budget exceeded", budget.max_steps);
    if (sz == rk_full) {
      out.push_back(indep);
      return;
    }
    if (sz + (gs - next) < rk_full) return;
    for (int e = next; e < gs; ++e) {
      EdgeSet cand = indep.with(e);
      if (rank(cand) == sz + 1) dfs(cand, e + 1, sz + 1);
    }
  };
  dfs(EdgeSet(gs), 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> Matroid::cocircuits() const {
  const int rk_full = rank(ground());
  std::vector<EdgeSet> out;
  for (const Flat& f : flats()) {
    if (f.rank != rk_full - 1) continue;
    out.push_back(ground().minus(f.edges));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GainSignedGraph delete_edges(const GainSignedGraph& u, const EdgeSet& s,
                             std::vector<int>* edge_map) {
  const Graph& g = u.graph();
  Graph ng(g.vertex_count());
  std::vector<Sign> sigma;
  std::vector<std::array<Sign, 2>> tau;
  std::vector<GroupElem> phi;
  std::vector<int> emap(g.edge_count(), -1);
  for (const Edge& e : g.edges()) {
    if (s.test(e.id)) continue;
    EdgeId nid = -1;
    switch (e.kind) {
      case EdgeKind::Link:
        nid = ng.add_link(e.ends[0], e.ends[1]);
        break;
      case EdgeKind::Loop:
        nid = ng.add_loop(e.ends[0]);
        break;
      case EdgeKind::Half:
        nid = ng.add_half(e.ends[0]);
        break;
      case EdgeKind::Loose:
        nid = ng.add_loose();
        break;
    }
    emap[e.id] = nid;
    sigma.push_back(u.sign(e.id));
    tau.push_back({u.tau(e.id, 0), u.tau(e.id, 1)});
    phi.push_back(u.gain(e.id));
  }
  if (edge_map) *edge_map = emap;
  SignedGraph nsg(std::move(ng), std::move(sigma));
  Orientation ntau(nsg, std::move(tau));
  return GainSignedGraph(std::move(nsg), std::move(ntau), u.group(), std::move(phi));
}

MinorResult contract(const GainSignedGraph& u, const EdgeSet& s,
                     bool contract_extra) {
  const Graph& g = u.graph();
  EdgeSet se = s.universe() == g.edge_count() ? s : s.resized(g.edge_count());
  const bool hyperbalanced = !contract_extra && is_hyperbalanced(u, se);

  GainSignedGraph switched = u;
  bool erased = !hyperbalanced;
  if (hyperbalanced) {
    auto w = hyperbalance_witness(u, se);
    if (!w)
      throw ContractionObstruction(
          "contract: hyperbalanced set cannot be switched to all-neutral over "
          "this group (2x = residue is unsolvable); gains would be lost");
    switched = switch_gains(switch_signs(u, w->first), w->second);
  } else {
    BalanceResult bal = balanced_components(u.signed_graph(), se);
    switched = switch_signs(u, SignSwitcher{bal.zeta});
  }

  BalanceResult bal = balanced_components(switched.signed_graph(), se);
  const Group group = erased ? Group::modular(1) : u.group();

  MinorResult res{GainSignedGraph(SignedGraph(Graph(0), {}),
                                  Orientation(SignedGraph(Graph(0), {}), {}), group, {}),
                  erased,
                  {},
                  {},
                  {}};
  res.blocks = bal.balanced_blocks;
  res.vertex_map.assign(g.vertex_count(), -1);
  for (size_t b = 0; b < res.blocks.size(); ++b)
    for (VertexId v : res.blocks[b]) res.vertex_map[v] = static_cast<int>(b);

  Graph ng(static_cast<int>(res.blocks.size()));
  std::vector<Sign> sigma;
  std::vector<std::array<Sign, 2>> tau;
  std::vector<GroupElem> phi;
  res.edge_map.assign(g.edge_count(), -1);

  for (const Edge& e : g.edges()) {
    if (se.test(e.id)) continue;
    const Sign esign = switched.sign(e.id);
    const GroupElem egain = erased ? group.zero() : switched.gain(e.id);
    int nid = -1;
    auto mapped = [&](int slot) { return res.vertex_map[e.ends[slot]]; };
    switch (e.kind) {
      case EdgeKind::Loose:
        nid = ng.add_loose();
        sigma.push_back(1);
        tau.push_back({1, 1});
        break;
      case EdgeKind::Half:
        if (mapped(0) != -1) {
          nid = ng.add_half(mapped(0));
          sigma.push_back(-1);
          tau.push_back({switched.tau(e.id, 0), 1});
        } else {
          nid = ng.add_loose();
          sigma.push_back(1);
          tau.push_back({1, 1});
        }
        break;
      case EdgeKind::Link:
      case EdgeKind::Loop: {
        int bu = mapped(0), bw = e.kind == EdgeKind::Loop ? mapped(0) : mapped(1);
        if (bu != -1 && bw != -1) {
          nid = bu == bw ? ng.add_loop(bu) : ng.add_link(bu, bw);
          sigma.push_back(esign);
          tau.push_back({switched.tau(e.id, 0), switched.tau(e.id, 1)});
        } else if (bu != -1 || bw != -1) {
          nid = ng.add_half(bu != -1 ? bu : bw);
          sigma.push_back(-1);
          tau.push_back({switched.tau(e.id, bu != -1 ? 0 : 1), 1});
        } else {
          nid = ng.add_loose();
          sigma.push_back(1);
          tau.push_back({1, 1});
        }
        break;
      }
    }
    res.edge_map[e.id] = nid;
    phi.push_back(egain);
  }

  SignedGraph nsg(std::move(ng), std::move(sigma));
  Orientation ntau(nsg, std::move(tau));
  res.minor = GainSignedGraph(std::move(nsg), std::move(ntau), group, std::move(phi));
  return res;
}

AxiomReport check_rank_axioms(const std::function<int(const EdgeSet&)>& rank_fn,
                              int ground, bool exhaustive, int samples,
                              std::uint64_t seed) {
  AxiomReport rep;
  auto fail = [&](const std::string& w) {
    rep.pass = false;
    if (rep.witness.empty()) rep.witness = w;
  };
  auto set_of = [&](std::uint64_t mask) {
    EdgeSet s(ground);
    for (int i = 0; i < ground; ++i)
      if ((mask >> i) & 1u) s.set(i);
    return s;
  };
  auto describe = [&](std::uint64_t mask) {
    std::string r = "{";
    bool first = true;
    for (int i = 0; i < ground; ++i)
      if ((mask >> i) & 1u) {
        if (!first) r += ",";
        r += std::to_string(i);
        first = false;
      }
    return r + "}";
  };

  if (exhaustive) {
    if (ground > 20)
      throw BudgetExceeded("check_rank_axioms: exhaustive limited to 20 elements", 20);
    const std::uint64_t limit = std::uint64_t{1} << ground;
    std::vector<int> rk(limit);
    for (std::uint64_t mask = 0; mask < limit; ++mask) rk[mask] = rank_fn(set_of(mask));
    if (rk[0] != 0) fail("R1: rank(empty) = " + std::to_string(rk[0]));
    ++rep.checks;
    for (std::uint64_t mask = 0; mask < limit && rep.pass; ++mask) {
      for (int e = 0; e < ground && rep.pass; ++e) {
        if ((mask >> e) & 1u) continue;
        std::uint64_t me = mask | (std::uint64_t{1} << e);
        ++rep.checks;
        if (rk[me] < rk[mask] || rk[me] > rk[mask] + 1)
          fail("R2: S=" + describe(mask) + " e=" + std::to_string(e));
        for (int f = e + 1; f < ground && rep.pass; ++f) {
          if ((mask >> f) & 1u) continue;
          std::uint64_t mf = mask | (std::uint64_t{1} << f);
          std::uint64_t mef = me | (std::uint64_t{1} << f);
          ++rep.checks;
          if (rk[me] == rk[mask] && rk[mf] == rk[mask] && rk[mef] != rk[mask])
            fail("R3': S=" + describe(mask) + " e=" + std::to_string(e) +
                 " f=" + std::to_string(f));
        }
      }
    }
    return rep;
  }

  std::mt19937_64 rng(seed);
  if (rank_fn(EdgeSet(ground)) != 0) fail("R1: rank(empty) != 0");
  ++rep.checks;
  for (int t = 0; t < samples && rep.pass; ++t) {
    std::uint64_t mask = rng() & ((ground >= 64 ? ~0ULL : (1ULL << ground) - 1));
    int e = static_cast<int>(rng() % ground);
    int f = static_cast<int>(rng() % ground);
    if (e == f || ((mask >> e) & 1u) || ((mask >> f) & 1u)) continue;
    EdgeSet S = set_of(mask);
    int r0 = rank_fn(S), re = rank_fn(S.with(e)), rf = rank_fn(S.with(f));
    int ref = rank_fn(S.with(e).with(f));
    rep.checks += 4;
    if (re < r0 || re > r0 + 1) fail("R2: S=" + describe(mask) + " e=" + std::to_string(e));
    if (re == r0 && rf == r0 && ref != r0)
      fail("R3': S=" + describe(mask) + " e=" + std::to_string(e) +
           " f=" + std::to_string(f));
  }
  return rep;
}

}  // namespace gsg
