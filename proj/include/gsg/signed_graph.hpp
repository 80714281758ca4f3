#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gsg/graph.hpp"

namespace gsg {

using Sign = int;  // +1 / -1

// Edge signs over a graph.  Half edges are always negative, loose edges
// always positive.
class SignedGraph {
 public:
  SignedGraph(Graph g, std::vector<Sign> sigma);

  const Graph& graph() const { return g_; }
  Sign sign(EdgeId e) const { return sigma_.at(e); }
  const std::vector<Sign>& signs() const { return sigma_; }
  int vertex_count() const { return g_.vertex_count(); }
  int edge_count() const { return g_.edge_count(); }

 private:
  Graph g_;
  std::vector<Sign> sigma_;
};

// Orientation: one sign per edge end, with tau(v,e) * tau(w,e) = -sigma(e)
// on links and loops.  +1 is an arrow into the endpoint.
class Orientation {
 public:
  Orientation() = default;
  Orientation(const SignedGraph& sg, std::vector<std::array<Sign, 2>> tau);

  // Canonical reference orientation: positive links/loops (-1,+1), negative
  // ones (+1,+1), half edges +1.
  static Orientation reference(const SignedGraph& sg);

  Sign tau(EdgeId e, int slot) const { return tau_.at(e)[slot]; }
  const std::vector<std::array<Sign, 2>>& values() const { return tau_; }

  Orientation with_edge_flipped(EdgeId e) const;

 private:
  std::vector<std::array<Sign, 2>> tau_;
};

struct SignSwitcher {
  std::vector<Sign> zeta;  // one per vertex
};

// Product of edge signs along a walk or ultrawalk, with multiplicity.
Sign sign_of_walk(const SignedGraph& sg, const Walk& w);

// sigma^zeta(e_vw) = zeta(v) sigma(e) zeta(w); tau^zeta(v,e) = zeta(v) tau(v,e).
std::pair<SignedGraph, Orientation> switch_signs(const SignedGraph& sg,
                                                 const Orientation& tau,
                                                 const SignSwitcher& zeta);

struct BalanceResult {
  int balanced_count = 0;                           // b_Sigma(S)
  std::vector<std::vector<VertexId>> balanced_blocks;  // pi_b(S)
  std::vector<VertexId> unbalanced_vertices;           // U_Sigma(S)
  std::vector<char> vertex_balanced;                   // per vertex
  std::vector<Sign> zeta;  // potential: S-edges inside balanced blocks switch positive
  std::vector<int> comp_of;
  int comp_count = 0;
  std::vector<char> comp_balanced;
};

// Balanced components of the spanning subgraph (V, s).  A component is
// balanced iff it has no negative circle and no half edge; decided by a
// switching potential on a BFS tree.
BalanceResult balanced_components(const SignedGraph& sg, const EdgeSet& s);

// rk_Sigma(S) = n - b_Sigma(S)
int frame_rank(const SignedGraph& sg, const EdgeSet& s);

// Lexicographically-first basis of the frame matroid restricted to s.
EdgeSet frame_basis(const SignedGraph& sg, const EdgeSet& s);

// A negative circle or half edge, rooted for gain computations.
struct NegativeFigure {
  bool is_half = false;
  EdgeId half_edge = -1;
  Walk circle_walk;  // closed walk from root (circles only)
  VertexId root = -1;
  EdgeSet edges;
};

// Circuit of the frame matroid: positive circle, loose edge, or handcuff of
// two negative figures joined by a path (length >= 0; tight when 0).
struct SignCircuit {
  enum class Kind { PositiveCircle, LooseEdge, Handcuff };
  Kind kind = Kind::LooseEdge;
  Walk circle_walk;            // PositiveCircle
  EdgeId loose_edge = -1;      // LooseEdge
  NegativeFigure fig1, fig2;   // Handcuff; fig1 holds the lowest edge id
  Walk path;                   // fig1 root -> fig2 root, possibly empty
  EdgeSet edges;
};

// Recognizes whether `edges` forms a sign circuit and builds its structure.
std::optional<SignCircuit> classify_sign_circuit(const SignedGraph& sg,
                                                 const EdgeSet& edges);

// Preprocessed independent set for repeated fundamental-circuit queries.
class FrameBasisStructure {
 public:
  FrameBasisStructure(const SignedGraph& sg, const EdgeSet& basis);

  const EdgeSet& basis() const { return basis_; }
  // Edge set of the unique sign circuit in basis + {e}, or nullopt if
  // basis + {e} is independent.
  std::optional<EdgeSet> fundamental_circuit_edges(EdgeId e) const;

 private:
  struct Figure {
    bool exists = false;
    bool is_half = false;
    EdgeId edge = -1;  // half edge, loop, or circle-closing link
    std::vector<EdgeId> circle_edges;
    std::vector<char> on_circle;  // per vertex
    VertexId anchor = -1;         // half/loop vertex
  };

  const SignedGraph& sg_;
  EdgeSet basis_;
  std::vector<int> comp_;
  std::vector<EdgeId> parent_edge_;
  std::vector<VertexId> parent_;
  std::vector<int> depth_;
  std::vector<Sign> sign_to_root_;
  std::vector<Figure> figures_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> tree_adj_;

  std::vector<EdgeId> tree_path(VertexId u, VertexId w, std::vector<VertexId>* verts) const;
  std::vector<EdgeId> path_to_targets(VertexId v, const std::vector<char>& target,
                                      VertexId* hit) const;
};

// The unique sign circuit contained in b + {e}, or nullopt if b + {e} is
// independent in the frame matroid.  b must be independent and e not in b.
std::optional<SignCircuit> fundamental_sign_circuit(const SignedGraph& sg,
                                                    const EdgeSet& b, EdgeId e);

// clos_Sigma(S) = [E:U] union [E(zeta):pi_b(S)] union E^0, built structurally.
EdgeSet frame_closure(const SignedGraph& sg, const EdgeSet& s);

// True iff (V, s) switches to all positive, i.e. s is balanced with no half
// edges.
bool is_balanced(const SignedGraph& sg, const EdgeSet& s);

}  // namespace gsg
