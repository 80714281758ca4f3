#pragma once

#include <string>
#include <vector>

#include "gsg/matroid.hpp"
#include "gsg/rational.hpp"

namespace gsg {

// Residue in the prime field F_p, p an odd prime (characteristic 2 is
// rejected everywhere: the vector model needs 1 != -1).
struct Fp {
  long long v = 0;
  long long p = 0;

  bool is_zero() const { return v == 0; }
  Fp operator+(Fp o) const { return {(v + o.v) % p, p}; }
  Fp operator-(Fp o) const { return {((v - o.v) % p + p) % p, p}; }
  Fp operator*(Fp o) const { return {(v * o.v) % p, p}; }
  Fp operator/(Fp o) const;
  Fp operator-() const { return {(p - v) % p, p}; }
  bool operator==(Fp o) const { return v == o.v; }
};

bool is_odd_prime(long long p);

// Dense matrix over an exact scalar (Rational or Fp), column per edge.
template <typename S>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<S> a;
  Mat() = default;
  Mat(int r, int c, S zero) : rows(r), cols(c), a(static_cast<size_t>(r) * c, zero) {}
  S& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const S& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

using ExactMatrix = Mat<Rational>;

// Rank by fraction-free (Bareiss) elimination; exact over any field.
template <typename S>
int exact_rank(Mat<S> m);

extern template int exact_rank<Rational>(Mat<Rational>);
extern template int exact_rank<Fp>(Mat<Fp>);

// z(e) over the rationals: phi(e) in row 0, tau values in the endpoint rows
// (a loop sums both slots, so a negative loop shows +-2).  The extra point is
// (1, 0, ..., 0).
std::vector<Rational> edge_vector_q(const GainSignedGraph& u, EdgeId e);
std::vector<Rational> extra_point_vector_q(const GainSignedGraph& u);

// Columns z(e) for e in s; s may live over the graph or the extended ground
// set of `matroid_view`.
ExactMatrix incidence_matrix_q(const GainSignedGraph& u, const EdgeSet& s,
                               bool extended);
Mat<Fp> incidence_matrix_fp(const GainSignedGraph& u, const EdgeSet& s,
                            bool extended, long long p);

// z(W): signed sum of edge vectors along a walk, same coefficients as the
// walk gain.
std::vector<Rational> walk_vector_q(const GainSignedGraph& u, const Walk& w);

struct RankTheoremReport {
  bool pass = true;
  std::string witness;
  long long checked = 0;
};

// Checks rk(S) = dim z(S) for subsets of the (extended) ground set: all of
// them, or `samples` random ones.  The gain group must embed in Q or in an
// odd prime field.
RankTheoremReport verify_rank_theorem(const GainSignedGraph& u, bool extended,
                                      bool all_subsets, int samples = 0,
                                      std::uint64_t seed = 1);

}  // namespace gsg
