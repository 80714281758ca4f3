#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gsg/group.hpp"
#include "gsg/signed_graph.hpp"

namespace gsg {

// Gain signed graph: a signed graph with a reference orientation and an
// abelian-group gain on every edge.  Reorienting an edge negates its gain
// and both tau values.  Immutable; the switching operations return copies.
class GainSignedGraph {
 public:
  GainSignedGraph(SignedGraph sg, Orientation tau, Group group,
                  std::vector<GroupElem> phi);

  const SignedGraph& signed_graph() const { return sg_; }
  const Graph& graph() const { return sg_.graph(); }
  const Orientation& orientation() const { return tau_; }
  const Group& group() const { return group_; }
  const GroupElem& gain(EdgeId e) const { return phi_.at(e); }
  const std::vector<GroupElem>& gains() const { return phi_; }
  Sign sign(EdgeId e) const { return sg_.sign(e); }
  Sign tau(EdgeId e, int slot) const { return tau_.tau(e, slot); }
  int vertex_count() const { return sg_.vertex_count(); }
  int edge_count() const { return sg_.edge_count(); }
  EdgeSet all_edges() const { return graph().all_edges(); }

 private:
  SignedGraph sg_;
  Orientation tau_;
  Group group_;
  std::vector<GroupElem> phi_;
};

struct GainSwitcher {
  std::vector<GroupElem> theta;  // one per vertex
};

// Flips the tau values of e and inverts its gain; the matroid is unchanged.
GainSignedGraph reorient(const GainSignedGraph& u, EdgeId e);
GainSignedGraph reorient_set(const GainSignedGraph& u, const EdgeSet& s);

// phi^theta(e_vw) = tau(v,e)theta(v) + phi(e) + tau(w,e)theta(w); a loop sums
// both end slots, a half edge contributes one term, loose edges never change.
GainSignedGraph switch_gains(const GainSignedGraph& u, const GainSwitcher& theta);

// Sign switching leaves gains alone, rescales sigma and tau by zeta.
GainSignedGraph switch_signs(const GainSignedGraph& u, const SignSwitcher& zeta);

// Gain of a walk or ultrawalk: each edge gain enters with the sign
// -sigma(W_{0,i-1}) tau(u_{i-1}, e_i); half edges at the ends contribute
// +tau(u0,e0)phi(e0) and -phi(e)sigma(W_{0l})tau(ul,e).
GroupElem walk_gain(const GainSignedGraph& u, const Walk& w);

// Gain of the rooted negative figure (excycle convention).
GroupElem figure_gain(const GainSignedGraph& u, const NegativeFigure& f);

// Canonical circuit gain.  Well defined up to negation; the neutrality test
// never depends on the convention.
GroupElem circuit_gain(const GainSignedGraph& u, const SignCircuit& c);

bool is_neutral(const GainSignedGraph& u, const SignCircuit& c);

// Gain switcher making every edge of the pseudoforest t neutral
// (theta(v) = sigma(T_rv)[theta0 - phi(T_rv)], root = lowest vertex).
GainSwitcher neutralize_pseudoforest(const GainSignedGraph& u, const EdgeSet& t);

// Every sign circuit within s is neutral.  Decided through fundamental sign
// circuits of a frame basis of s, which stays valid over groups without
// halving.
bool is_hyperbalanced(const GainSignedGraph& u, const EdgeSet& s);

// Switchers (apply zeta, then theta) making every edge of s neutral, when
// constructible; nullopt when the group cannot halve the required residue.
// Witness absence does not imply hyperfrustration.
std::optional<std::pair<SignSwitcher, GainSwitcher>> hyperbalance_witness(
    const GainSignedGraph& u, const EdgeSet& s);

// E(theta): edges switched neutral by theta; always contains neutral loose
// edges.
EdgeSet edges_neutral_under(const GainSignedGraph& u, const GainSwitcher& theta);

// E(zeta): links and loops within the domain of zeta whose sign equals
// zeta(v)zeta(w).  Vertices outside the domain are marked absent.
EdgeSet edges_sign_determined(const SignedGraph& sg, const std::vector<Sign>& zeta,
                              const std::vector<char>& in_domain);

// E(theta, zeta) = E(theta) intersect E(zeta).
EdgeSet edges_of_potentials(const GainSignedGraph& u, const GainSwitcher& theta,
                            const std::vector<Sign>& zeta,
                            const std::vector<char>& in_domain);

}  // namespace gsg
