#pragma once

#include <string>
#include <vector>

#include "gsg/gain_graph.hpp"

namespace gsg::test {

// Compact instance builder.  Each edge spec is
//   {kind, u, v, sign, tau0, tau1, gain}
// with kind one of 'L' (link), 'o' (loop), 'h' (half), '-' (loose); unused
// fields are ignored.  tau0/tau1 = 0 picks the reference orientation.
struct E {
  char kind;
  int u = -1, v = -1;
  int sign = 1;
  int tau0 = 0, tau1 = 0;
  long long gain = 0;
  const char* gain_str = nullptr;
};

inline GainSignedGraph make(int n, std::vector<E> spec,
                            const Group& grp = Group::integers()) {
  Graph g(n);
  std::vector<Sign> sigma;
  std::vector<std::array<Sign, 2>> tau;
  std::vector<GroupElem> phi;
  for (const E& e : spec) {
    Sign s = e.sign;
    std::array<Sign, 2> t{};
    switch (e.kind) {
      case 'L':
        g.add_link(e.u, e.v);
        t = e.tau0 ? std::array<Sign, 2>{e.tau0, e.tau1}
                   : (s == 1 ? std::array<Sign, 2>{-1, 1} : std::array<Sign, 2>{1, 1});
        break;
      case 'o':
        g.add_loop(e.u);
        t = e.tau0 ? std::array<Sign, 2>{e.tau0, e.tau1}
                   : (s == 1 ? std::array<Sign, 2>{-1, 1} : std::array<Sign, 2>{1, 1});
        break;
      case 'h':
        g.add_half(e.u);
        s = -1;
        t = {e.tau0 ? e.tau0 : 1, 1};
        break;
      case '-':
        g.add_loose();
        s = 1;
        t = {1, 1};
        break;
      default:
        throw std::invalid_argument("make: bad kind");
    }
    sigma.push_back(s);
    tau.push_back(t);
    phi.push_back(e.gain_str ? grp.parse(e.gain_str) : grp.from_int(e.gain));
  }
  SignedGraph sg(std::move(g), std::move(sigma));
  Orientation orient(sg, std::move(tau));
  return GainSignedGraph(std::move(sg), std::move(orient), grp, std::move(phi));
}

inline EdgeSet es(const GainSignedGraph& u, std::initializer_list<int> ids) {
  return EdgeSet(u.edge_count(), ids);
}

}  // namespace gsg::test
