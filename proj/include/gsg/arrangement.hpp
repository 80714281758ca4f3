#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsg/linalg.hpp"
#include "gsg/matroid.hpp"

namespace gsg {

// Affine hyperplane tau(v_i,e) x_i + tau(v_j,e) x_j = -phi(e).  A neutral
// loose edge gives the degenerate hyperplane (whole space), a non-neutral one
// the phantom hyperplane (empty set).
struct Hyperplane {
  enum class Kind { Proper, Degenerate, Phantom };
  Kind kind = Kind::Degenerate;
  std::vector<Rational> coeffs;  // one per vertex coordinate
  Rational rhs;
  EdgeId edge = -1;  // -1 for h_infinity
};

std::vector<Hyperplane> build_arrangement(const GainSignedGraph& u);
std::string format_hyperplane(const Hyperplane& h);

enum class Family {
  Shi,
  Catalan,
  Linial,
  SignSymmetricShi,
  ShiThreshold,
  LinialThreshold,
  CatalanThreshold,
  GeneralizedThreshold,
  CustomDeformation,
};

std::optional<Family> family_from_name(const std::string& name);
const char* to_string(Family f);

struct FamilySpec {
  Family family = Family::Shi;
  int n = 2;
  int gain_min = 0, gain_max = 0;  // window [-k, l]; used by the window families
  std::string signs = "+";         // custom: any of '+', '-', 'o' (negative loops)
};

// The gain signed graph whose arrangement is the named family; edges emitted
// in lexicographic (i, j, sign, gain) order with the fixed reference
// orientations (-1,+1) / (+1,+1), so outputs are byte-stable.
GainSignedGraph generate_family(const FamilySpec& spec);

// Laurent polynomial in lambda with integer coefficients (the chromatic
// polynomial of a rank-(n+1) gain signed graph has a lambda^{-1} term).
class IntPolynomial {
 public:
  IntPolynomial() = default;

  long long coeff(int deg) const;
  void add(int deg, long long delta);
  int min_degree() const { return min_deg_; }
  int max_degree() const;
  long long evaluate_at_int(long long x) const;  // x != 0 when min_deg < 0
  std::string to_string() const;
  bool operator==(const IntPolynomial& o) const;

 private:
  void trim();
  int min_deg_ = 0;
  std::vector<long long> c_;  // c_[k] is the coefficient of lambda^{min_deg_+k}
};

struct ChromaticPolynomials {
  IntPolynomial chi;           // sum over all S of (-1)^|S| lambda^{n - rk S}
  IntPolynomial chi_balanced;  // hyperbalanced S only
  IntPolynomial chi_infinity;  // over E + e_infinity, lambda^{(n+1) - rk S}
};

// Subset expansion (exact, 2^|E|).
ChromaticPolynomials chromatic_polynomials(const GainSignedGraph& u,
                                           const EnumerationBudget& budget = {});
// Moebius function over the flat (semi)lattices; zero when matroid loops
// exist, matching the telescoped subset expansion.
ChromaticPolynomials chromatic_polynomials_moebius(const GainSignedGraph& u,
                                                   const EnumerationBudget& budget = {});

struct RegionCounts {
  long long regions = 0;
  long long bounded = 0;
  long long regions_infinity = 0;
};

// regions = (-1)^n chi^b(-1), bounded = (-1)^n chi^b(1),
// regions_infinity = (-1)^{n+1} chi_infinity(-1).
RegionCounts count_regions(const GainSignedGraph& u,
                           const EnumerationBudget& budget = {});

// Characteristic polynomial of an affine arrangement by subset expansion with
// exact linear solves (duplicate hyperplanes are merged; empty intersections
// drop out).  Independent of the matroid machinery.
IntPolynomial arrangement_characteristic(const std::vector<Hyperplane>& hps, int dim);
// Same for the homogenized arrangement in R^{1+n} together with x_0 = 0.
IntPolynomial central_characteristic(const GainSignedGraph& u);

// Exact region count of a line arrangement in the plane (incremental
// insertion; each new line adds one region per crossing point plus one).
long long count_regions_lines_2d(const std::vector<Hyperplane>& hps);

enum class PointFamily { EdgePoints, BidirectedEdgePoints, ArcPoints, DoubleArcPoints };

struct PolytopeQuery {
  PointFamily family = PointFamily::EdgePoints;
  Graph graph;  // arcs read from end order (ends[0] -> ends[1])
  std::optional<SignedGraph> bidirected;
  std::optional<Orientation> orientation;
};

// Edge points: affine dimension rank - 1 of the all-negative gain-1 graph.
// Bidirected edge points, arc points, double arc points: the rank value
// n - b + delta (resp. n - c + delta, 2n - c of the doubled digraph).
int polytope_dimension(const PolytopeQuery& q);

// Gain-1 models backing the polytope queries (also used by the oracles).
GainSignedGraph edge_point_model(const Graph& g);
GainSignedGraph bidirected_model(const SignedGraph& sg, const Orientation& tau);
GainSignedGraph arc_model(const Graph& digraph);
GainSignedGraph double_arc_model(const Graph& digraph);

// Poise of a closed walk or half-edge-to-half-edge walk: the A/B bipartition
// built by flipping at incoherent vertices is well defined and |A| = |B|.
bool is_poised(const SignedGraph& sg, const Orientation& tau, const Walk& w);

}  // namespace gsg
