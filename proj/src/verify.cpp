#include "gsg/verify.hpp"

#include <algorithm>
#include <set>

#include "gsg/enumerate.hpp"
#include "gsg/instance_io.hpp"
#include "gsg/linalg.hpp"

namespace gsg {

namespace {

std::string set_to_string(const EdgeSet& s) {
  std::string r = "{";
  bool first = true;
  s.for_each([&](int id) {
    if (!first) r += ",";
    r += std::to_string(id);
    first = false;
  });
  return r + "}";
}

CheckResult check_rank_theorem(const GainSignedGraph& u, bool extended) {
  CheckResult res{extended ? "rank-theorem-extended" : "rank-theorem", true, "", 0};
  if (u.group().kind() == Group::Kind::Modular &&
      !u.group().embeds_in_prime_field()) {
    res.detail = "skipped: no field embedding for " + u.group().name();
    return res;
  }
  auto rep = verify_rank_theorem(u, extended, true);
  res.pass = rep.pass;
  res.detail = rep.witness;
  res.checked = rep.checked;
  return res;
}

CheckResult check_axioms(const GainSignedGraph& u, bool extended) {
  Matroid m(u, extended);
  auto rep = check_rank_axioms([&](const EdgeSet& s) { return m.rank(s); },
                               m.ground_size(), true);
  CheckResult res{extended ? "rank-axioms-extended" : "rank-axioms", rep.pass,
                  rep.witness, rep.checks};
  return res;
}

CheckResult check_circuit_taxonomy(const GainSignedGraph& u, bool extended) {
  CheckResult res{extended ? "circuit-taxonomy-extended" : "circuit-taxonomy",
                  true, "", 0};
  if (!u.group().two_torsion_free()) {
    res.detail = "skipped: rank is not a matroid over " + u.group().name();
    return res;
  }
  Matroid m(u, extended);
  try {
    auto circuits = m.circuits();
    res.checked = static_cast<long long>(circuits.size());
    // every circuit is minimal dependent; every proper subset independent
    for (const auto& c : circuits) {
      if (m.nullity(c.edges) != 1) {
        res.pass = false;
        res.detail = "circuit " + set_to_string(c.edges) + " has nullity != 1";
        return res;
      }
      bool minimal = true;
      c.edges.for_each([&](int id) {
        if (!m.is_independent(c.edges.without(id))) minimal = false;
      });
      if (!minimal) {
        res.pass = false;
        res.detail = "circuit " + set_to_string(c.edges) + " is not minimal";
        return res;
      }
    }
    // independence agrees with circuit containment on every subset
    for_all_subsets(m.ground(), [&](const EdgeSet& s) {
      bool contains_circuit = false;
      for (const auto& c : circuits)
        if (c.edges.subset_of(s)) contains_circuit = true;
      if (m.is_independent(s) == contains_circuit && res.pass) {
        res.pass = false;
        res.detail = "independence/circuit mismatch on " + set_to_string(s);
      }
    });
  } catch (const std::logic_error& e) {
    res.pass = false;
    res.detail = e.what();
  }
  return res;
}

CheckResult check_closure_equivalence(const GainSignedGraph& u, bool extended) {
  CheckResult res{extended ? "closure-equivalence-extended" : "closure-equivalence",
                  true, "", 0};
  Matroid m(u, extended);
  for_all_subsets(m.ground(), [&](const EdgeSet& s) {
    ++res.checked;
    EdgeSet structural = m.closure(s);
    EdgeSet by_rank = m.closure_by_rank(s);
    if (structural != by_rank && res.pass) {
      res.pass = false;
      res.detail = "closure mismatch on " + set_to_string(s) + ": structural " +
                   set_to_string(structural) + ", rank " + set_to_string(by_rank);
    }
  });
  return res;
}

CheckResult check_minor_commutation(const GainSignedGraph& u) {
  CheckResult res{"minor-commutation", true, "", 0};
  if (!u.group().two_torsion_free()) {
    res.detail = "skipped: rank is not a matroid over " + u.group().name();
    return res;
  }
  Matroid m(u, false);
  // beyond 8 edges restrict to small contraction sets
  const bool small = u.edge_count() <= 8;
  for_all_subsets(u.all_edges(), [&](const EdgeSet& s) {
    if (!res.pass) return;
    if (!small && s.count() > 2) return;
    // deletion: rank of A in the minor equals rank of A
    GainSignedGraph del = delete_edges(u, s);
    Matroid md(del, false);
    MinorResult con = [&]() -> MinorResult {
      try {
        return contract(u, s);
      } catch (const ContractionObstruction&) {
        // embed the gains in Q; the matroid is unchanged by the embedding
        GainSignedGraph uq(u.signed_graph(), u.orientation(), Group::rationals(),
                           u.gains());
        return contract(uq, s);
      }
    }();
    Matroid mc(con.minor, false);
    for_all_subsets(u.all_edges().minus(s), [&](const EdgeSet& a) {
      ++res.checked;
      if (!res.pass) return;
      // deletion rank agreement
      EdgeSet a_del(del.edge_count());
      a.for_each([&](int id) {
        // deletion keeps relative order of surviving edges
        int nid = 0;
        for (int e = 0; e < id; ++e)
          if (!s.test(e)) ++nid;
        a_del.set(nid);
      });
      if (md.rank(a_del) != m.rank(a)) {
        res.pass = false;
        res.detail = "deletion rank mismatch: S=" + set_to_string(s) +
                     " A=" + set_to_string(a);
        return;
      }
      // contraction rank agreement: rk(A u S) - rk(S)
      EdgeSet a_con(con.minor.edge_count());
      a.for_each([&](int id) {
        if (con.edge_map[id] >= 0) a_con.set(con.edge_map[id]);
      });
      if (mc.rank(a_con) != m.rank(a | s) - m.rank(s)) {
        res.pass = false;
        res.detail = "contraction rank mismatch: S=" + set_to_string(s) +
                     " A=" + set_to_string(a);
      }
    });
  });
  return res;
}

CheckResult check_switching_invariance(const GainSignedGraph& u,
                                       const VerifyOptions& opts) {
  CheckResult res{"switching-invariance", true, "", 0};
  Matroid m0(u, false);
  std::vector<char> base;
  for_all_subsets(u.all_edges(), [&](const EdgeSet& s) {
    base.push_back(m0.is_independent(s) ? 1 : 0);
  });
  std::mt19937_64 rng(opts.seed);
  long long lo = -2, hi = 2;
  if (u.group().kind() == Group::Kind::Modular) {
    lo = 0;
    hi = u.group().modulus() - 1;
  }
  for (int t = 0; t < opts.switching_trials && res.pass; ++t) {
    SignSwitcher zeta = random_sign_switcher(rng, u.vertex_count());
    GainSwitcher theta =
        random_gain_switcher(rng, u.group(), u.vertex_count(), lo, hi);
    EdgeSet rho = random_edge_subset(rng, u.edge_count());
    GainSignedGraph v = reorient_set(switch_gains(switch_signs(u, zeta), theta), rho);
    Matroid m1(v, false);
    size_t idx = 0;
    for_all_subsets(u.all_edges(), [&](const EdgeSet& s) {
      ++res.checked;
      if (res.pass && (m1.is_independent(s) ? 1 : 0) != base[idx]) {
        res.pass = false;
        res.detail = "independence changed by switching on " + set_to_string(s);
      }
      ++idx;
    });
  }
  return res;
}

}  // namespace

std::vector<CheckResult> run_verification(const GainSignedGraph& u,
                                          const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(check_rank_theorem(u, false));
  out.push_back(check_axioms(u, false));
  out.push_back(check_circuit_taxonomy(u, false));
  out.push_back(check_closure_equivalence(u, false));
  if (opts.include_extended) {
    out.push_back(check_rank_theorem(u, true));
    out.push_back(check_axioms(u, true));
    out.push_back(check_circuit_taxonomy(u, true));
    out.push_back(check_closure_equivalence(u, true));
  }
  out.push_back(check_minor_commutation(u));
  out.push_back(check_switching_invariance(u, opts));
  return out;
}

GainSignedGraph random_instance(std::mt19937_64& rng, int max_n, int max_m,
                                const Group& grp, long long gain_lo,
                                long long gain_hi) {
  const int n = 1 + static_cast<int>(rng() % max_n);
  const int m = static_cast<int>(rng() % (max_m + 1));
  Graph g(n);
  std::vector<Sign> sigma;
  std::vector<std::array<Sign, 2>> tau;
  std::vector<GroupElem> phi;
  const long long span = gain_hi - gain_lo + 1;
  for (int i = 0; i < m; ++i) {
    int kind = static_cast<int>(rng() % 10);
    Sign s = (rng() & 1u) ? 1 : -1;
    bool flip = rng() & 1u;
    if (kind < 6 && n >= 2) {
      VertexId a = static_cast<VertexId>(rng() % n);
      VertexId b = static_cast<VertexId>(rng() % (n - 1));
      if (b >= a) ++b;
      g.add_link(a, b);
      sigma.push_back(s);
      tau.push_back(s == 1 ? std::array<Sign, 2>{-1, 1} : std::array<Sign, 2>{1, 1});
    } else if (kind < 7) {
      g.add_loop(static_cast<VertexId>(rng() % n));
      sigma.push_back(s);
      tau.push_back(s == 1 ? std::array<Sign, 2>{-1, 1} : std::array<Sign, 2>{1, 1});
    } else if (kind < 9) {
      g.add_half(static_cast<VertexId>(rng() % n));
      sigma.push_back(-1);
      tau.push_back({1, 1});
    } else {
      g.add_loose();
      sigma.push_back(1);
      tau.push_back({1, 1});
    }
    if (flip && g.edge(g.edge_count() - 1).end_count() > 0) {
      tau.back()[0] = -tau.back()[0];
      tau.back()[1] = -tau.back()[1];
    }
    phi.push_back(grp.from_int(gain_lo + static_cast<long long>(rng() % span)));
  }
  SignedGraph sg(std::move(g), std::move(sigma));
  Orientation orient(sg, std::move(tau));
  return GainSignedGraph(std::move(sg), std::move(orient), grp, std::move(phi));
}

void exhaustive_corpus(int max_n, int max_m, int gain_abs,
                       const std::function<void(const GainSignedGraph&)>& fn) {
  const Group grp = Group::integers();
  for (int n = 1; n <= max_n; ++n) {
    // the edge-kind universe for n vertices
    struct Kind {
      EdgeKind kind;
      VertexId u = -1, v = -1;
    };
    std::vector<Kind> universe;
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = i + 1; j < n; ++j) universe.push_back({EdgeKind::Link, i, j});
    for (VertexId i = 0; i < n; ++i) universe.push_back({EdgeKind::Loop, i, i});
    for (VertexId i = 0; i < n; ++i) universe.push_back({EdgeKind::Half, i, -1});
    universe.push_back({EdgeKind::Loose});

    // multisets of size 0..max_m (non-decreasing index tuples)
    std::vector<int> pick;
    std::function<void(int)> choose = [&](int min_idx) {
      {
        // emit the current multiset with all sign and gain patterns
        const int m = static_cast<int>(pick.size());
        std::vector<int> signable;
        for (int i = 0; i < m; ++i) {
          EdgeKind k = universe[pick[i]].kind;
          if (k == EdgeKind::Link || k == EdgeKind::Loop) signable.push_back(i);
        }
        const int gains_per = 2 * gain_abs + 1;
        long long gain_combos = 1;
        for (int i = 0; i < m; ++i) gain_combos *= gains_per;
        for (std::uint32_t smask = 0; smask < (1u << signable.size()); ++smask) {
          for (long long gtuple = 0; gtuple < gain_combos; ++gtuple) {
            Graph g(n);
            std::vector<Sign> sigma;
            std::vector<std::array<Sign, 2>> tau;
            std::vector<GroupElem> phi;
            long long grem = gtuple;
            size_t sidx = 0;
            for (int i = 0; i < m; ++i) {
              const Kind& k = universe[pick[i]];
              Sign s = 1;
              switch (k.kind) {
                case EdgeKind::Link:
                  g.add_link(k.u, k.v);
                  break;
                case EdgeKind::Loop:
                  g.add_loop(k.u);
                  break;
                case EdgeKind::Half:
                  g.add_half(k.u);
                  s = -1;
                  break;
                case EdgeKind::Loose:
                  g.add_loose();
                  break;
              }
              if (k.kind == EdgeKind::Link || k.kind == EdgeKind::Loop) {
                s = ((smask >> sidx) & 1u) ? -1 : 1;
                ++sidx;
              }
              sigma.push_back(s);
              if (k.kind == EdgeKind::Link || k.kind == EdgeKind::Loop)
                tau.push_back(s == 1 ? std::array<Sign, 2>{-1, 1}
                                     : std::array<Sign, 2>{1, 1});
              else
                tau.push_back({1, 1});
              phi.push_back(grp.from_int(grem % gains_per - gain_abs));
              grem /= gains_per;
            }
            SignedGraph sg(std::move(g), std::move(sigma));
            Orientation orient(sg, std::move(tau));
            fn(GainSignedGraph(std::move(sg), std::move(orient), grp, std::move(phi)));
          }
        }
      }
      if (static_cast<int>(pick.size()) == max_m) return;
      for (int i = min_idx; i < static_cast<int>(universe.size()); ++i) {
        pick.push_back(i);
        choose(i);
        pick.pop_back();
      }
    };
    choose(0);
  }
}

SignSwitcher random_sign_switcher(std::mt19937_64& rng, int n) {
  SignSwitcher z;
  for (int i = 0; i < n; ++i) z.zeta.push_back((rng() & 1u) ? 1 : -1);
  return z;
}

GainSwitcher random_gain_switcher(std::mt19937_64& rng, const Group& grp, int n,
                                  long long lo, long long hi) {
  GainSwitcher t;
  const long long span = hi - lo + 1;
  for (int i = 0; i < n; ++i)
    t.theta.push_back(grp.from_int(lo + static_cast<long long>(rng() % span)));
  return t;
}

EdgeSet random_edge_subset(std::mt19937_64& rng, int m) {
  EdgeSet s(m);
  for (int i = 0; i < m; ++i)
    if (rng() & 1u) s.set(i);
  return s;
}

}  // namespace gsg
