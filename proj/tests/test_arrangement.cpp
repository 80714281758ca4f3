#include <random>
#include <set>

#include "doctest.h"
#include "gsg/arrangement.hpp"
#include "gsg/enumerate.hpp"
#include "gsg/instance_io.hpp"
#include "gsg/verify.hpp"
#include "helpers.hpp"

using namespace gsg;
using gsg::test::E;
using gsg::test::es;
using gsg::test::make;

TEST_CASE("hyperplane equations") {
  auto u = make(2, {{'L', 0, 1, 1, -1, 1, 1}, {'h', 0, -1, -1, 1, 0, 3},
                    {'-', 0, 0, 1, 0, 0, 0}, {'-', 0, 0, 1, 0, 0, 2}});
  auto hps = build_arrangement(u);
  // positive link gain 1 with tau (-1,+1): x1 - x2 = 1
  CHECK(hps[0].kind == Hyperplane::Kind::Proper);
  CHECK(format_hyperplane(hps[0]) == "-x1 + x2 = -1");
  // half edge: x_i = -gain
  CHECK(format_hyperplane(hps[1]) == "x1 = -3");
  CHECK(hps[2].kind == Hyperplane::Kind::Degenerate);
  CHECK(hps[3].kind == Hyperplane::Kind::Phantom);

  auto zm = make(1, {{'o', 0, 0, -1, 1, 1, 1}}, Group::modular(4));
  CHECK_THROWS_AS(build_arrangement(zm), std::invalid_argument);
}

TEST_CASE("family generators") {
  FamilySpec shi{Family::Shi, 2, 0, 0, "+"};
  auto u = generate_family(shi);
  CHECK(u.edge_count() == 2);
  CHECK(u.sign(0) == 1);
  CHECK(u.group().format(u.gain(0)) == "0");
  CHECK(u.group().format(u.gain(1)) == "1");

  FamilySpec cat{Family::Catalan, 2, 0, 0, "+"};
  CHECK(generate_family(cat).edge_count() == 3);

  FamilySpec st{Family::ShiThreshold, 3, 0, 0, "+"};
  auto t = generate_family(st);
  CHECK(t.edge_count() == 6);  // negative pairs with gains 0 and 1
  for (int e = 0; e < t.edge_count(); ++e) CHECK(t.sign(e) == -1);

  FamilySpec lt{Family::LinialThreshold, 2, 0, 0, "+"};
  auto l = generate_family(lt);
  CHECK(l.edge_count() == 1 + 4);  // one negative link, four half edges
  CHECK(l.graph().edge(1).kind == EdgeKind::Half);

  FamilySpec gt{Family::GeneralizedThreshold, 2, -1, 2, "+"};
  CHECK(generate_family(gt).edge_count() == 4);

  FamilySpec cd{Family::CustomDeformation, 2, 0, 1, "+-o"};
  auto c = generate_family(cd);
  CHECK(c.edge_count() == 2 + 2 + 4);  // +links, -links, -loops per vertex

  CHECK_THROWS(generate_family(FamilySpec{Family::Shi, 0, 0, 0, "+"}));

  // byte-stable output
  CHECK(gsg::serialize_instance(generate_family(shi)) ==
        gsg::serialize_instance(generate_family(shi)));
}

TEST_CASE("chromatic polynomials: edgeless and Shi") {
  auto empty = make(3, {});
  auto p = chromatic_polynomials(empty);
  CHECK(p.chi.to_string() == "L^3");
  CHECK(p.chi_balanced.to_string() == "L^3");

  auto shi = generate_family(FamilySpec{Family::Shi, 2, 0, 0, "+"});
  auto ps = chromatic_polynomials(shi);
  CHECK(ps.chi_balanced.coeff(2) == 1);
  CHECK(ps.chi_balanced.coeff(1) == -2);
  CHECK(ps.chi_balanced.coeff(0) == 0);

  // a neutral loose edge zeroes every polynomial
  auto lo = make(2, {{'L', 0, 1, 1, -1, 1, 1}, {'-', 0, 0, 1, 0, 0, 0}});
  auto pl = chromatic_polynomials(lo);
  CHECK(pl.chi.to_string() == "0");
  CHECK(pl.chi_balanced.to_string() == "0");
  CHECK(pl.chi_infinity.to_string() == "0");
  auto pm = chromatic_polynomials_moebius(lo);
  CHECK(pm.chi.to_string() == "0");
}

TEST_CASE("region counts and the degenerate guard") {
  auto shi = generate_family(FamilySpec{Family::Shi, 2, 0, 0, "+"});
  auto rc = count_regions(shi);
  CHECK(rc.regions == 3);
  CHECK(rc.regions_infinity == 6);

  auto lo = make(1, {{'-', 0, 0, 1, 0, 0, 0}});
  CHECK_THROWS_AS(count_regions(lo), std::invalid_argument);
  auto zm = make(1, {{'o', 0, 0, -1, 1, 1, 1}}, Group::modular(4));
  CHECK_THROWS_AS(count_regions(zm), std::invalid_argument);
}

TEST_CASE("semilattice characteristic equals the balanced chromatic polynomial") {
  std::mt19937_64 rng(61);
  int tested = 0;
  while (tested < 60) {
    auto u = random_instance(rng, 3, 5, Group::integers(), -2, 2);
    bool neutral_loose = false;
    for (const Edge& e : u.graph().edges())
      if (e.kind == EdgeKind::Loose && u.group().is_zero(u.gain(e.id)))
        neutral_loose = true;
    if (neutral_loose) continue;
    ++tested;
    auto polys = chromatic_polynomials(u);
    // affine intersection semilattice via exact linear solves
    CHECK(arrangement_characteristic(build_arrangement(u), u.vertex_count()) ==
          polys.chi_balanced);
    // homogenized arrangement plus the infinite hyperplane
    CHECK(central_characteristic(u) == polys.chi_infinity);
  }
}

TEST_CASE("regions against the incremental line oracle and a sample grid") {
  // named families
  for (Family f : {Family::Shi, Family::Catalan, Family::Linial}) {
    auto u = generate_family(FamilySpec{f, 2, 0, 0, "+"});
    CHECK(count_regions(u).regions == count_regions_lines_2d(build_arrangement(u)));
  }
  // random two-coordinate instances
  std::mt19937_64 rng(62);
  int tested = 0;
  while (tested < 80) {
    auto u = random_instance(rng, 2, 5, Group::integers(), -2, 2);
    if (u.vertex_count() != 2) continue;
    bool degenerate = false;
    for (const Hyperplane& h : build_arrangement(u))
      if (h.kind == Hyperplane::Kind::Degenerate) degenerate = true;
    if (degenerate) continue;
    ++tested;
    CHECK(count_regions(u).regions == count_regions_lines_2d(build_arrangement(u)));
  }
  // grid sanity check: distinct nonzero sign vectors over a fine grid
  for (Family f : {Family::Shi, Family::Catalan, Family::Linial}) {
    auto u = generate_family(FamilySpec{f, 2, 0, 0, "+"});
    auto hps = build_arrangement(u);
    std::set<std::vector<int>> cells;
    for (int xi = -12; xi <= 12; ++xi) {
      for (int yi = -12; yi <= 12; ++yi) {
        Rational x(BigInt(xi), BigInt(4)), y(BigInt(yi), BigInt(4));
        std::vector<int> sv;
        bool on_line = false;
        for (const auto& h : hps) {
          Rational val = h.coeffs[0] * x + h.coeffs[1] * y - h.rhs;
          if (val.is_zero()) on_line = true;
          sv.push_back(val.sign());
        }
        if (!on_line) cells.insert(sv);
      }
    }
    CHECK(static_cast<long long>(cells.size()) == count_regions(u).regions);
  }
}

TEST_CASE("polytope dimensions: named examples") {
  // C4 edge points: bipartite, dimension n-2
  Graph c4(4);
  c4.add_link(0, 1);
  c4.add_link(1, 2);
  c4.add_link(2, 3);
  c4.add_link(0, 3);
  PolytopeQuery q{PointFamily::EdgePoints, c4, std::nullopt, std::nullopt};
  CHECK(polytope_dimension(q) == 2);

  Graph k3(3);
  k3.add_link(0, 1);
  k3.add_link(1, 2);
  k3.add_link(0, 2);
  q.graph = k3;
  CHECK(polytope_dimension(q) == 2);  // odd circle: n-1

  // one-directional triangle: the circle is unpoised, value n - c + 1
  q.family = PointFamily::ArcPoints;
  CHECK(polytope_dimension(q) == 3);

  // alternating C4 digraph: poised, value n - c
  Graph alt(4);
  alt.add_link(0, 1);
  alt.add_link(2, 1);
  alt.add_link(2, 3);
  alt.add_link(0, 3);
  q.graph = alt;
  CHECK(polytope_dimension(q) == 3);

  // a single arc: the rank convention counts the homogenized rank
  Graph one(2);
  one.add_link(0, 1);
  q.graph = one;
  CHECK(polytope_dimension(q) == 1);

  // symmetric digraph with all loops: double arc dimension 2n - c(G)
  Graph sym(3);
  sym.add_link(0, 1);
  sym.add_link(1, 0);
  sym.add_link(1, 2);
  sym.add_link(2, 1);
  sym.add_loop(0);
  sym.add_loop(1);
  sym.add_loop(2);
  q.family = PointFamily::DoubleArcPoints;
  q.graph = sym;
  CHECK(polytope_dimension(q) == 2 * 3 - 1);

  // edge points reject graphs with half edges
  Graph bad(1);
  bad.add_half(0);
  q.family = PointFamily::EdgePoints;
  q.graph = bad;
  CHECK_THROWS_AS(polytope_dimension(q), std::invalid_argument);
}

TEST_CASE("poise of closed walks and half-to-half walks") {
  // directed even circle with alternating directions: poised
  auto alt = make(4, {{'L', 0, 1, 1, -1, 1, 0}, {'L', 2, 1, 1, -1, 1, 0},
                      {'L', 2, 3, 1, -1, 1, 0}, {'L', 0, 3, 1, -1, 1, 0}});
  Walk w = make_walk(alt.graph(), 0, {0, 1, 2, 3});
  CHECK(is_poised(alt.signed_graph(), alt.orientation(), w));

  // one-directional triangle: |A| = 3, |B| = 0
  auto tri = make(3, {{'L', 0, 1, 1, -1, 1, 0}, {'L', 1, 2, 1, -1, 1, 0},
                      {'L', 2, 0, 1, -1, 1, 0}});
  Walk wt = make_walk(tri.graph(), 0, {0, 1, 2});
  CHECK(!is_poised(tri.signed_graph(), tri.orientation(), wt));

  // negative closed walk: ill-defined bipartition
  auto neg = make(2, {{'L', 0, 1, -1, 1, 1, 0}, {'L', 0, 1, 1, -1, 1, 0}});
  Walk wn = make_walk(neg.graph(), 0, {0, 1});
  CHECK(!is_poised(neg.signed_graph(), neg.orientation(), wn));

  // two half edges both pointing into their vertex: the joint is incoherent,
  // the edges split between the sides, and the walk is poised
  auto hh = make(1, {{'h', 0, -1, -1, 1, 0, 0}, {'h', 0, -1, -1, 1, 0, 0}});
  Walk wh;
  wh.start = 0;
  wh.initial_half = 0;
  wh.terminal_half = 1;
  CHECK(is_poised(hh.signed_graph(), hh.orientation(), wh));
  // with opposite arrows the joint is coherent, both land in A: not poised
  auto hh2 = make(1, {{'h', 0, -1, -1, 1, 0, 0}, {'h', 0, -1, -1, -1, 0, 0}});
  CHECK(!is_poised(hh2.signed_graph(), hh2.orientation(), wh));

  // open non-ultra walk is rejected
  Walk open_walk = make_walk(tri.graph(), 0, {0});
  CHECK_THROWS_AS(is_poised(tri.signed_graph(), tri.orientation(), open_walk),
                  std::invalid_argument);

  // poise agrees with gain-1 neutrality on circuit walks of positive circles
  std::mt19937_64 rng(63);
  int agree = 0;
  for (int t = 0; t < 200; ++t) {
    auto u = random_instance(rng, 4, 6, Group::integers(), 1, 1);
    for (const auto& c : enumerate_sign_circuits(u.signed_graph(), u.all_edges())) {
      if (c.kind != SignCircuit::Kind::PositiveCircle) continue;
      CHECK(is_poised(u.signed_graph(), u.orientation(), c.circle_walk) ==
            is_neutral(u, c));
      ++agree;
    }
  }
  CHECK(agree > 50);
}

TEST_CASE("laurent polynomial plumbing") {
  IntPolynomial p;
  p.add(2, 1);
  p.add(0, -3);
  p.add(-1, 2);
  CHECK(p.to_string() == "L^2 - 3 + 2*L^-1");
  CHECK(p.evaluate_at_int(1) == 0);
  CHECK(p.evaluate_at_int(-1) == 1 - 3 - 2);
  CHECK_THROWS(p.evaluate_at_int(2));
  p.add(-1, -2);
  CHECK(p.min_degree() == 0);
  IntPolynomial q;
  q.add(2, 1);
  q.add(0, -3);
  CHECK(p == q);
}
