#include <random>

#include "doctest.h"
#include "gsg/enumerate.hpp"
#include "gsg/linalg.hpp"
#include "gsg/verify.hpp"
#include "helpers.hpp"

using namespace gsg;
using gsg::test::E;
using gsg::test::es;
using gsg::test::make;

TEST_CASE("edge vectors: displayed forms") {
  auto u = make(2, {{'L', 0, 1, 1, -1, 1, 0, "2/3"}, {'h', 0, -1, -1, 1, 0, 5},
                    {'-', 0, 0, 1, 0, 0, 0}, {'o', 1, 1, -1, 1, 1, 7}},
                Group::rationals());
  auto z0 = edge_vector_q(u, 0);
  CHECK(z0[0] == Rational::from_string("2/3"));
  CHECK(z0[1] == Rational(-1));
  CHECK(z0[2] == Rational(1));
  auto z1 = edge_vector_q(u, 1);
  CHECK(z1[0] == Rational(5));
  CHECK(z1[1] == Rational(1));
  CHECK(z1[2] == Rational(0));
  auto z2 = edge_vector_q(u, 2);  // neutral loose edge: the zero vector
  CHECK(z2 == std::vector<Rational>{Rational(0), Rational(0), Rational(0)});
  auto z3 = edge_vector_q(u, 3);  // negative loop: +-2 in its row
  CHECK(z3[2] == Rational(2));

  auto zmod = make(1, {{'o', 0, 0, -1, 1, 1, 1}}, Group::modular(4));
  CHECK_THROWS_AS(edge_vector_q(zmod, 0), std::invalid_argument);
}

TEST_CASE("exact rank by fraction-free elimination") {
  ExactMatrix zero(3, 4, Rational(0));
  CHECK(exact_rank(zero) == 0);
  ExactMatrix id(3, 3, Rational(0));
  for (int i = 0; i < 3; ++i) id.at(i, i) = Rational(1);
  CHECK(exact_rank(id) == 3);

  // columns (a,1) and (b,1): rank 1 iff a = b
  auto two = [&](Rational a, Rational b) {
    ExactMatrix m(2, 2, Rational(0));
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = Rational(1);
    m.at(1, 1) = Rational(1);
    return exact_rank(m);
  };
  CHECK(two(Rational(3), Rational(3)) == 1);
  CHECK(two(Rational(3), Rational(5)) == 2);
  CHECK(two(Rational::from_string("1/2"), Rational::from_string("2/4")) == 1);

  // random rational matrices: rank agrees with a plain Gauss reference
  std::mt19937_64 rng(51);
  for (int t = 0; t < 200; ++t) {
    int r = 1 + rng() % 4, c = 1 + rng() % 5;
    ExactMatrix m(r, c, Rational(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        m.at(i, j) = Rational(static_cast<long long>(rng() % 7) - 3);
    ExactMatrix g = m;
    // naive Gauss
    int rank = 0;
    for (int col = 0; col < c && rank < r; ++col) {
      int p = -1;
      for (int i = rank; i < r; ++i)
        if (!g.at(i, col).is_zero()) { p = i; break; }
      if (p == -1) continue;
      for (int j = 0; j < c; ++j) std::swap(g.at(rank, j), g.at(p, j));
      for (int i = rank + 1; i < r; ++i) {
        if (g.at(i, col).is_zero()) continue;
        Rational f = g.at(i, col) / g.at(rank, col);
        for (int j = 0; j < c; ++j) g.at(i, j) -= f * g.at(rank, j);
      }
      ++rank;
    }
    CHECK(exact_rank(m) == rank);
  }
}

TEST_CASE("rank theorem on named instances") {
  // two half edges at one vertex with distinct gains: rank 2 both ways
  auto hh = make(1, {{'h', 0, -1, -1, 1, 0, 1}, {'h', 0, -1, -1, 1, 0, 2}});
  auto rep = verify_rank_theorem(hh, false, true);
  CHECK(rep.pass);
  CHECK(Matroid(hh).rank(hh.all_edges()) == 2);

  auto c4 = make(4, {{'L', 0, 1, -1, 1, 1, 1}, {'L', 1, 2, -1, 1, 1, 1},
                     {'L', 2, 3, -1, 1, 1, 1}, {'L', 0, 3, -1, 1, 1, 1}});
  CHECK(exact_rank(incidence_matrix_q(c4, c4.all_edges(), false)) == 3);
  CHECK(verify_rank_theorem(c4, true, true).pass);

  // the columns of a neutral sign circuit are dependent
  auto dig = make(2, {{'L', 0, 1, 1, -1, 1, 2}, {'L', 0, 1, 1, -1, 1, 2}});
  CHECK(exact_rank(incidence_matrix_q(dig, dig.all_edges(), false)) == 1);
}

TEST_CASE("prime field backend") {
  CHECK(is_odd_prime(5));
  CHECK(!is_odd_prime(2));
  CHECK(!is_odd_prime(9));
  CHECK((Fp{3, 5} / Fp{2, 5}).v == 4);  // 3 * inv(2) = 3 * 3 = 9 = 4 mod 5

  std::mt19937_64 rng(52);
  const Group z5 = Group::modular(5);
  for (int t = 0; t < 60; ++t) {
    auto u = random_instance(rng, 4, 6, z5, 0, 4);
    auto rep = verify_rank_theorem(u, true, true);
    CHECK(rep.pass);
  }

  auto z4 = make(1, {{'o', 0, 0, -1, 1, 1, 1}}, Group::modular(4));
  CHECK_THROWS_AS(verify_rank_theorem(z4, false, true), std::invalid_argument);
  CHECK_THROWS_AS(incidence_matrix_fp(z4, z4.all_edges(), false, 4),
                  std::invalid_argument);
  auto z9 = make(1, {{'o', 0, 0, -1, 1, 1, 1}}, Group::modular(9));
  CHECK_THROWS_AS(verify_rank_theorem(z9, false, true), std::invalid_argument);
}

TEST_CASE("projecting away the gain row gives the frame representation") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    auto u = random_instance(rng, 4, 6, Group::integers(), -2, 2);
    for_all_subsets(u.all_edges(), [&](const EdgeSet& s) {
      ExactMatrix m = incidence_matrix_q(u, s, false);
      ExactMatrix proj(m.rows - 1, m.cols, Rational(0));
      for (int i = 1; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) proj.at(i - 1, j) = m.at(i, j);
      CHECK(exact_rank(proj) == frame_rank(u.signed_graph(), s));
    });
  }
}

TEST_CASE("vector symmetries: reorientation and the switching matrix") {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 100; ++t) {
    auto u = random_instance(rng, 4, 6, Group::integers(), -2, 2);
    if (u.edge_count() == 0) continue;
    EdgeId e = static_cast<EdgeId>(rng() % u.edge_count());
    auto z = edge_vector_q(u, e);
    auto zr = edge_vector_q(reorient(u, e), e);
    for (size_t i = 0; i < z.size(); ++i) CHECK(zr[i] == -z[i]);

    SignSwitcher zeta = random_sign_switcher(rng, u.vertex_count());
    auto zs = edge_vector_q(switch_signs(u, zeta), e);
    CHECK(zs[0] == z[0]);
    for (int v = 0; v < u.vertex_count(); ++v)
      CHECK(zs[1 + v] == Rational(zeta.zeta[v]) * z[1 + v]);
  }
}

TEST_CASE("walk vectors match the fictitious-edge forms") {
  std::mt19937_64 rng(55);
  const Group grp = Group::integers();
  int open_checked = 0, closed_checked = 0, circuit_checked = 0;
  for (int t = 0; t < 400; ++t) {
    auto u = random_instance(rng, 4, 6, grp, -2, 2);
    VertexId at = static_cast<VertexId>(rng() % u.vertex_count());
    Walk w;
    w.start = at;
    for (int step = 0; step < 4; ++step) {
      std::vector<WalkStep> options;
      for (const Edge& e : u.graph().edges()) {
        if (e.kind == EdgeKind::Link) {
          if (e.ends[0] == at) options.push_back({e.id, 0, 1});
          if (e.ends[1] == at) options.push_back({e.id, 1, 0});
        } else if (e.kind == EdgeKind::Loop && e.ends[0] == at) {
          options.push_back({e.id, 0, 1});
        }
      }
      if (options.empty()) break;
      WalkStep pick = options[rng() % options.size()];
      w.steps.push_back(pick);
      at = u.graph().edge(pick.edge).ends[pick.to_slot];
    }
    if (w.length() == 0) continue;
    auto z = walk_vector_q(u, w);
    Rational phi = walk_gain(u, w).v;
    Sign sw = sign_of_walk(u.signed_graph(), w);
    CHECK(z[0] == phi);
    if (w.is_closed(u.graph())) {
      // phi e0 - (1 - sigma) e_i
      for (int v = 0; v < u.vertex_count(); ++v) {
        Rational want = v == w.start ? Rational(-(1 - sw)) : Rational(0);
        CHECK(z[1 + v] == want);
      }
      // closed positive walks keep their vector under gain switching
      if (sw == 1) {
        GainSwitcher theta = random_gain_switcher(rng, grp, u.vertex_count(), -2, 2);
        CHECK(walk_vector_q(switch_gains(u, theta), w) == z);
      }
      ++closed_checked;
    } else {
      // phi e0 - e_i + sigma e_j
      VertexId i = w.start, j = w.end_vertex(u.graph());
      for (int v = 0; v < u.vertex_count(); ++v) {
        Rational want(0);
        if (v == i) want += Rational(-1);
        if (v == j) want += Rational(sw);
        CHECK(z[1 + v] == want);
      }
      ++open_checked;
    }
  }
  CHECK(open_checked > 50);
  CHECK(closed_checked > 20);

  // circuit walks land on phi(C) e0
  for (int t = 0; t < 200; ++t) {
    auto u = random_instance(rng, 4, 6, grp, -2, 2);
    for (const auto& c : enumerate_sign_circuits(u.signed_graph(), u.all_edges())) {
      if (c.kind != SignCircuit::Kind::PositiveCircle) continue;
      auto z = walk_vector_q(u, c.circle_walk);
      for (int v = 0; v < u.vertex_count(); ++v) CHECK(z[1 + v] == Rational(0));
      CHECK((z[0] == circuit_gain(u, c).v || z[0] == -circuit_gain(u, c).v));
      ++circuit_checked;
    }
  }
  CHECK(circuit_checked > 50);
}
