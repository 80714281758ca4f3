#include "doctest.h"
#include "gsg/instance_io.hpp"
#include "gsg/verify.hpp"
#include "helpers.hpp"

#include <random>

using namespace gsg;
using gsg::test::E;
using gsg::test::make;

TEST_CASE("instance round trip is the identity on canonical files") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 100; ++t) {
    for (const Group& grp : {Group::integers(), Group::rationals(), Group::modular(6)}) {
      long long lo = grp.kind() == Group::Kind::Modular ? 0 : -2;
      long long hi = grp.kind() == Group::Kind::Modular ? 5 : 2;
      auto u = random_instance(rng, 4, 6, grp, lo, hi);
      std::string text = serialize_instance(u);
      auto v = parse_instance(text);
      CHECK(serialize_instance(v) == text);
    }
  }
  // rational gains survive as strings
  auto q = make(2, {{'L', 0, 1, 1, -1, 1, 0, "-7/3"}}, Group::rationals());
  auto rt = parse_instance(serialize_instance(q));
  CHECK(rt.gain(0).v == Rational::from_string("-7/3"));
}

TEST_CASE("lenient parsing reports invariant violations") {
  // half edge carrying sign +1
  std::string bad = R"({"version":1,"group":"Z","n":1,"edges":[
    {"id":0,"kind":"half","ends":[0],"sign":1,"tau":[1],"gain":"0"}]})";
  auto parsed = parse_instance_lenient(bad);
  REQUIRE(!parsed.valid());
  CHECK(parsed.issues.front().find("half edges must have sign -1") != std::string::npos);
  CHECK_THROWS_AS(parsed.build(), ParseError);

  // tau product violating -sigma
  std::string badtau = R"({"version":1,"group":"Z","n":2,"edges":[
    {"id":0,"kind":"link","ends":[0,1],"sign":1,"tau":[1,1],"gain":"0"}]})";
  CHECK(!parse_instance_lenient(badtau).valid());

  // structural garbage throws even in lenient mode
  CHECK_THROWS_AS(parse_instance_lenient("{"), ParseError);
  CHECK_THROWS_AS(parse_instance_lenient(R"({"version":2,"group":"Z","n":0,"edges":[]})"),
                  ParseError);
  std::string bad_ids = R"({"version":1,"group":"Z","n":1,"edges":[
    {"id":3,"kind":"loose","ends":[],"sign":1,"tau":[],"gain":"0"}]})";
  CHECK_THROWS_AS(parse_instance_lenient(bad_ids), ParseError);
}

TEST_CASE("note field survives serialization") {
  auto u = make(1, {{'-', 0, 0, 1, 0, 0, 0}});
  std::string text = serialize_instance(u, "gains erased by hyperfrustrated contraction");
  auto parsed = parse_instance_lenient(text);
  REQUIRE(parsed.note.has_value());
  CHECK(*parsed.note == "gains erased by hyperfrustrated contraction");
}
