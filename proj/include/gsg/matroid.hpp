#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsg/gain_graph.hpp"

namespace gsg {

struct BudgetExceeded : std::runtime_error {
  long long limit;
  explicit BudgetExceeded(const std::string& what, long long lim)
      : std::runtime_error(what), limit(lim) {}
};

struct EnumerationBudget {
  int max_enum_edges = 16;     // subset-style enumerations (flats, polynomials)
  int max_circuit_edges = 20;  // minimal-dependent-set search
  long long max_steps = 1LL << 22;
};

enum class HypercircuitClass {
  NeutralSignCircuit,
  DisjointPair,
  ContrabalancedTriple,
  ThetaPlusLollipop,
  LinkedCircles,
  BalancedTheta,
  TightPositivePair,
  QuadruplePath,
  AntibalancedK4,
  ThetaWithEar,
};
const char* to_string(HypercircuitClass c);

struct Hypercircuit {
  EdgeSet edges;  // over the matroid ground universe
  HypercircuitClass cls;
};

struct IndependenceCertificate {
  bool independent = false;
  enum class SpecialKind { None, NonNeutralLoose, ExtraPoint, BalancedUnicycle, UnbalancedCore };
  SpecialKind special = SpecialKind::None;
  EdgeSet special_circuit;  // unique non-neutral sign circuit of the special part
};

// The (U, pi, zeta, theta) data describing a closed set.
struct FlatDescriptor {
  bool hyperbalanced = false;
  std::vector<VertexId> U;                      // vertices of unbalanced part
  std::vector<std::vector<VertexId>> pi;        // blocks of the balanced part
  std::vector<Sign> zeta;                       // sign potential on pi
  std::vector<char> zeta_domain;
  std::optional<GainSwitcher> theta;  // absent when the group lacks the halving
};

struct Flat {
  EdgeSet edges;
  int rank = 0;
  FlatDescriptor desc;
};

struct MinorResult {
  GainSignedGraph minor;
  bool gains_erased = false;
  std::vector<int> vertex_map;                 // old vertex -> new id or -1
  std::vector<std::vector<VertexId>> blocks;   // new vertex -> old vertices
  std::vector<int> edge_map;                   // old edge -> new id or -1
};

struct ContractionObstruction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// View of the matroid M(Upsilon), or the extended matroid on E + e_infinity.
// The extra point behaves exactly like a non-neutral loose edge; it is kept
// as the last ground-set id.
class Matroid {
 public:
  Matroid(const GainSignedGraph& u, bool extended = false)
      : u_(&u), extended_(extended) {}

  const GainSignedGraph& gain_graph() const { return *u_; }
  bool extended() const { return extended_; }
  int ground_size() const { return u_->edge_count() + (extended_ ? 1 : 0); }
  int extra_id() const { return extended_ ? u_->edge_count() : -1; }
  EdgeSet ground() const { return EdgeSet::full(ground_size()); }
  EdgeSet lift(const EdgeSet& graph_edges) const {  // embed E-set in ground
    return graph_edges.resized(ground_size());
  }

  // rk(S) = n - b_Sigma(S) + delta; sets containing the extra point are
  // hyperfrustrated by definition.
  int rank(const EdgeSet& s) const;
  int nullity(const EdgeSet& s) const { return s.count() - rank(s); }
  bool set_hyperbalanced(const EdgeSet& s) const;

  bool is_independent(const EdgeSet& s) const;
  // Structural certificate; asserts agreement with the rank computation.
  IndependenceCertificate independence(const EdgeSet& s) const;

  EdgeSet closure(const EdgeSet& s) const;          // structural (primary)
  EdgeSet closure_by_rank(const EdgeSet& s) const;  // oracle route

  std::vector<Flat> flats(bool hyperbalanced_only = false) const;
  std::vector<Hypercircuit> circuits() const;
  std::vector<EdgeSet> bases() const;
  std::vector<EdgeSet> cocircuits() const;

  // Classifies a known circuit; throws unless exactly one clause matches.
  HypercircuitClass classify_circuit(const EdgeSet& circuit) const;
  std::vector<HypercircuitClass> matching_classes(const EdgeSet& circuit) const;

  EnumerationBudget budget;

 private:
  EdgeSet graph_part(const EdgeSet& s) const;
  bool has_extra(const EdgeSet& s) const {
    return extended_ && s.universe() == ground_size() && s.test(extra_id());
  }
  FlatDescriptor describe_flat(const EdgeSet& flat_graph_edges, bool hyperbalanced) const;

  const GainSignedGraph* u_;
  bool extended_;
};

// Regenerates the edge set described by a flat descriptor (hyperfrustrated
// form, or hyperbalanced form when theta is present).
std::optional<EdgeSet> realize_flat_descriptor(const GainSignedGraph& u,
                                               const FlatDescriptor& d,
                                               bool extended);

GainSignedGraph delete_edges(const GainSignedGraph& u, const EdgeSet& s,
                             std::vector<int>* edge_map = nullptr);

// Contraction per the minor calculus: a hyperbalanced set is first gain-
// switched to all neutral (refused with ContractionObstruction when the
// group cannot halve the residue); a hyperfrustrated set erases gains and
// contracts in the signed graph.  contract_extra erases gains and recovers
// the frame matroid.
MinorResult contract(const GainSignedGraph& u, const EdgeSet& s,
                     bool contract_extra = false);

struct AxiomReport {
  bool pass = true;
  std::string witness;
  long long checks = 0;
};

// Verifies R1 (normalization), R2 (unit increase), R3' (local submodularity)
// for an arbitrary rank function on {0..ground-1}.
AxiomReport check_rank_axioms(const std::function<int(const EdgeSet&)>& rank_fn,
                              int ground, bool exhaustive, int samples = 0,
                              std::uint64_t seed = 1);

}  // namespace gsg
