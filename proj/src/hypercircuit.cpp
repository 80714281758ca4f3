#include <algorithm>
#include <functional>

#include "gsg/enumerate.hpp"
#include "gsg/matroid.hpp"

namespace gsg {

const char* to_string(HypercircuitClass c) {
  switch (c) {
    case HypercircuitClass::NeutralSignCircuit: return "NeutralSignCircuit";
    case HypercircuitClass::DisjointPair: return "DisjointPair";
    case HypercircuitClass::ContrabalancedTriple: return "ContrabalancedTriple";
    case HypercircuitClass::ThetaPlusLollipop: return "ThetaPlusLollipop";
    case HypercircuitClass::LinkedCircles: return "LinkedCircles";
    case HypercircuitClass::BalancedTheta: return "BalancedTheta";
    case HypercircuitClass::TightPositivePair: return "TightPositivePair";
    case HypercircuitClass::QuadruplePath: return "QuadruplePath";
    case HypercircuitClass::AntibalancedK4: return "AntibalancedK4";
    case HypercircuitClass::ThetaWithEar: return "ThetaWithEar";
  }
  return "?";
}

namespace {

std::vector<EdgeSet> edge_components(const Graph& g, const EdgeSet& s) {
  const int n = g.vertex_count();
  std::vector<int> uf(n);
  for (int i = 0; i < n; ++i) uf[i] = i;
  std::function<int(int)> find = [&](int v) {
    while (uf[v] != v) {
      uf[v] = uf[uf[v]];
      v = uf[v];
    }
    return v;
  };
  s.for_each([&](int id) {
    const Edge& e = g.edge(id);
    if (e.kind == EdgeKind::Link) uf[find(e.ends[0])] = find(e.ends[1]);
  });
  std::vector<EdgeSet> out;
  std::vector<int> comp_index(n, -1);
  s.for_each([&](int id) {
    const Edge& e = g.edge(id);
    if (e.kind == EdgeKind::Loose) {
      out.push_back(EdgeSet(g.edge_count(), {id}));
      return;
    }
    int r = find(e.ends[0]);
    if (comp_index[r] == -1) {
      comp_index[r] = static_cast<int>(out.size());
      out.push_back(EdgeSet(g.edge_count()));
    }
    out[comp_index[r]].set(id);
  });
  return out;
}

struct CircuitShape {
  bool connected = false;
  bool is_sign_circuit = false;
  bool neutral_sign_circuit = false;
  bool all_inner_nonneutral = false;  // every sign circuit within is non-neutral
  int components = 0;
  int positive_circles = 0;
  int negative_circles = 0;
  int total_circles = 0;
  int halves = 0;
  int looses = 0;
  int xi = 0;
  bool bridgeless = false;
  std::vector<int> branch_degrees;  // degrees >= 3, sorted descending
};

CircuitShape analyze(const GainSignedGraph& u, const EdgeSet& f) {
  const Graph& g = u.graph();
  const SignedGraph& sg = u.signed_graph();
  CircuitShape sh;
  sh.components = static_cast<int>(edge_components(g, f).size());
  sh.connected = sh.components == 1;
  auto whole = classify_sign_circuit(sg, f);
  sh.is_sign_circuit = whole.has_value();
  if (whole) sh.neutral_sign_circuit = is_neutral(u, *whole);

  auto circles = enumerate_circles(sg, f);
  EdgeSet on_circle(g.edge_count());
  for (const auto& c : circles) {
    ++sh.total_circles;
    (c.sign == 1 ? sh.positive_circles : sh.negative_circles)++;
    c.edges.for_each([&](int id) { on_circle.set(id); });
  }
  sh.all_inner_nonneutral = true;
  for (const auto& sc : enumerate_sign_circuits(sg, f))
    if (is_neutral(u, sc)) sh.all_inner_nonneutral = false;

  std::vector<int> degree(g.vertex_count(), 0);
  bool any_bridge = false;
  f.for_each([&](int id) {
    const Edge& e = g.edge(id);
    switch (e.kind) {
      case EdgeKind::Loose:
        ++sh.looses;
        break;
      case EdgeKind::Half:
        ++sh.halves;
        degree[e.ends[0]]++;
        break;
      case EdgeKind::Loop:
        degree[e.ends[0]] += 2;
        break;
      case EdgeKind::Link:
        degree[e.ends[0]]++;
        degree[e.ends[1]]++;
        if (!on_circle.test(id)) any_bridge = true;
        break;
    }
  });
  sh.bridgeless = !any_bridge;
  sh.xi = cyclomatic(g, f);
  for (int d : degree)
    if (d >= 3) sh.branch_degrees.push_back(d);
  std::sort(sh.branch_degrees.rbegin(), sh.branch_degrees.rend());
  return sh;
}

}  // namespace

std::vector<HypercircuitClass> Matroid::matching_classes(const EdgeSet& circuit) const {
  const bool extra = has_extra(circuit);
  EdgeSet f = graph_part(circuit);
  CircuitShape sh = analyze(*u_, f);
  const int figs = sh.negative_circles + sh.halves;

  std::vector<HypercircuitClass> out;
  auto component_list = edge_components(u_->graph(), f);
  auto nonneutral_sign_circuit = [&](const EdgeSet& part) {
    auto c = classify_sign_circuit(u_->signed_graph(), part);
    return c && !is_neutral(*u_, *c);
  };

  if (!extra && sh.is_sign_circuit && sh.neutral_sign_circuit)
    out.push_back(HypercircuitClass::NeutralSignCircuit);

  if (extra) {
    if (component_list.size() == 1 && nonneutral_sign_circuit(component_list[0]))
      out.push_back(HypercircuitClass::DisjointPair);
  } else if (component_list.size() == 2 &&
             nonneutral_sign_circuit(component_list[0]) &&
             nonneutral_sign_circuit(component_list[1])) {
    out.push_back(HypercircuitClass::DisjointPair);
  }

  const bool conn = !extra && sh.connected && sh.looses == 0 &&
                    !sh.is_sign_circuit && sh.all_inner_nonneutral;
  if (conn) {
    const auto& bd = sh.branch_degrees;
    if (sh.positive_circles == 0 && figs == 3 && sh.xi == 3)
      out.push_back(HypercircuitClass::ContrabalancedTriple);
    if (sh.positive_circles == 1 && figs == 3 && sh.xi == 3)
      out.push_back(HypercircuitClass::ThetaPlusLollipop);
    if (sh.positive_circles == 1 && figs == 2 && sh.xi == 3)
      out.push_back(HypercircuitClass::LinkedCircles);
    if (sh.xi == 2 && sh.positive_circles == 3)
      out.push_back(HypercircuitClass::BalancedTheta);
    if (sh.xi == 2 && sh.positive_circles == 2 && figs == 0 && sh.bridgeless)
      out.push_back(HypercircuitClass::TightPositivePair);
    if (sh.xi == 3 && sh.halves == 0 && sh.bridgeless && sh.total_circles == 6 &&
        bd == std::vector<int>{4, 4})
      out.push_back(HypercircuitClass::QuadruplePath);
    if (sh.xi == 3 && sh.halves == 0 && sh.bridgeless && sh.total_circles == 7 &&
        sh.positive_circles == 3 && bd == std::vector<int>{3, 3, 3, 3})
      out.push_back(HypercircuitClass::AntibalancedK4);
    if (sh.xi == 3 && sh.halves == 0 && sh.bridgeless && sh.total_circles == 6 &&
        (bd == std::vector<int>{3, 3, 3, 3} || bd == std::vector<int>{4, 3, 3}))
      out.push_back(HypercircuitClass::ThetaWithEar);
  }
  return out;
}

HypercircuitClass Matroid::classify_circuit(const EdgeSet& circuit) const {
  auto matches = matching_classes(circuit);
  if (matches.size() != 1) {
    std::string what = "classify_circuit: expected exactly one clause, got {";
    for (auto c : matches) what += std::string(" ") + to_string(c);
    what += " } for edges {";
    circuit.for_each([&](int id) { what += " " + std::to_string(id); });
    what += " }";
    throw std::logic_error(what);
  }
  return matches[0];
}

}  // namespace gsg
