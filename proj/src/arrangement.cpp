#include "gsg/arrangement.hpp"

#include <algorithm>
#include <map>

namespace gsg {

std::vector<Hyperplane> build_arrangement(const GainSignedGraph& u) {
  if (!u.group().embeds_in_rationals())
    throw std::invalid_argument("build_arrangement: gains must embed in Q");
  const int n = u.vertex_count();
  std::vector<Hyperplane> out;
  for (const Edge& e : u.graph().edges()) {
    Hyperplane h;
    h.edge = e.id;
    h.coeffs.assign(n, Rational(0));
    h.rhs = -u.gain(e.id).v;
    if (e.end_count() >= 1) h.coeffs[e.ends[0]] += Rational(u.tau(e.id, 0));
    if (e.end_count() == 2) h.coeffs[e.ends[1]] += Rational(u.tau(e.id, 1));
    bool all_zero = true;
    for (const Rational& c : h.coeffs)
      if (!c.is_zero()) all_zero = false;
    h.kind = !all_zero            ? Hyperplane::Kind::Proper
             : h.rhs.is_zero()    ? Hyperplane::Kind::Degenerate
                                  : Hyperplane::Kind::Phantom;
    out.push_back(std::move(h));
  }
  return out;
}

std::string format_hyperplane(const Hyperplane& h) {
  if (h.kind == Hyperplane::Kind::Degenerate) return "degenerate (whole space)";
  if (h.kind == Hyperplane::Kind::Phantom) return "phantom (empty)";
  std::string lhs;
  for (size_t i = 0; i < h.coeffs.size(); ++i) {
    const Rational& c = h.coeffs[i];
    if (c.is_zero()) continue;
    std::string term = "x" + std::to_string(i + 1);
    if (c == Rational(1)) {
      lhs += lhs.empty() ? term : " + " + term;
    } else if (c == Rational(-1)) {
      lhs += lhs.empty() ? "-" + term : " - " + term;
    } else if (c.sign() > 0) {
      lhs += (lhs.empty() ? "" : " + ") + c.to_string() + "*" + term;
    } else {
      lhs += (lhs.empty() ? "-" : " - ") + (-c).to_string() + "*" + term;
    }
  }
  return lhs + " = " + h.rhs.to_string();
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "shi") return Family::Shi;
  if (name == "catalan") return Family::Catalan;
  if (name == "linial") return Family::Linial;
  if (name == "sign-symmetric-shi") return Family::SignSymmetricShi;
  if (name == "shi-threshold") return Family::ShiThreshold;
  if (name == "linial-threshold") return Family::LinialThreshold;
  if (name == "catalan-threshold") return Family::CatalanThreshold;
  if (name == "generalized-threshold") return Family::GeneralizedThreshold;
  if (name == "custom-deformation") return Family::CustomDeformation;
  return std::nullopt;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::Shi: return "shi";
    case Family::Catalan: return "catalan";
    case Family::Linial: return "linial";
    case Family::SignSymmetricShi: return "sign-symmetric-shi";
    case Family::ShiThreshold: return "shi-threshold";
    case Family::LinialThreshold: return "linial-threshold";
    case Family::CatalanThreshold: return "catalan-threshold";
    case Family::GeneralizedThreshold: return "generalized-threshold";
    case Family::CustomDeformation: return "custom-deformation";
  }
  return "?";
}

GainSignedGraph generate_family(const FamilySpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generate_family: n must be >= 1");
  if (spec.gain_min > spec.gain_max)
    throw std::invalid_argument("generate_family: empty gain window");
  Graph g(spec.n);
  std::vector<Sign> sigma;
  std::vector<std::array<Sign, 2>> tau;
  std::vector<long long> gains;

  auto add = [&](EdgeKind kind, VertexId i, VertexId j, Sign s, long long gain) {
    switch (kind) {
      case EdgeKind::Link:
        g.add_link(i, j);
        tau.push_back(s == 1 ? std::array<Sign, 2>{-1, 1} : std::array<Sign, 2>{1, 1});
        break;
      case EdgeKind::Loop:
        g.add_loop(i);
        tau.push_back(s == 1 ? std::array<Sign, 2>{-1, 1} : std::array<Sign, 2>{1, 1});
        break;
      case EdgeKind::Half:
        g.add_half(i);
        tau.push_back({1, 1});
        break;
      case EdgeKind::Loose:
        g.add_loose();
        tau.push_back({1, 1});
        break;
    }
    sigma.push_back(s);
    gains.push_back(gain);
  };

  auto pair_edges = [&](Sign s, long long lo, long long hi) {
    for (VertexId i = 0; i < spec.n; ++i)
      for (VertexId j = i + 1; j < spec.n; ++j)
        for (long long gain = lo; gain <= hi; ++gain)
          add(EdgeKind::Link, i, j, s, gain);
  };

  switch (spec.family) {
    case Family::Shi:
      pair_edges(1, 0, 1);
      break;
    case Family::Catalan:
      pair_edges(1, -1, 1);
      break;
    case Family::Linial:
      pair_edges(1, 1, 1);
      break;
    case Family::SignSymmetricShi:
      for (VertexId i = 0; i < spec.n; ++i)
        for (VertexId j = i + 1; j < spec.n; ++j) {
          for (long long gain = 0; gain <= 1; ++gain) add(EdgeKind::Link, i, j, 1, gain);
          for (long long gain = 0; gain <= 1; ++gain) add(EdgeKind::Link, i, j, -1, gain);
        }
      break;
    case Family::ShiThreshold:
      pair_edges(-1, 0, 1);
      break;
    case Family::LinialThreshold:
      pair_edges(-1, 1, 1);
      for (VertexId i = 0; i < spec.n; ++i)
        for (long long gain = 0; gain <= 1; ++gain) add(EdgeKind::Half, i, -1, -1, gain);
      break;
    case Family::CatalanThreshold:
      pair_edges(-1, -1, 1);
      break;
    case Family::GeneralizedThreshold:
      pair_edges(-1, spec.gain_min, spec.gain_max);
      break;
    case Family::CustomDeformation: {
      bool pos = spec.signs.find('+') != std::string::npos;
      bool neg = spec.signs.find('-') != std::string::npos;
      bool loops = spec.signs.find('o') != std::string::npos;
      if (!pos && !neg && !loops)
        throw std::invalid_argument("generate_family: empty sign pattern");
      for (VertexId i = 0; i < spec.n; ++i)
        for (VertexId j = i + 1; j < spec.n; ++j) {
          if (pos)
            for (long long gain = spec.gain_min; gain <= spec.gain_max; ++gain)
              add(EdgeKind::Link, i, j, 1, gain);
          if (neg)
            for (long long gain = spec.gain_min; gain <= spec.gain_max; ++gain)
              add(EdgeKind::Link, i, j, -1, gain);
        }
      if (loops)
        for (VertexId i = 0; i < spec.n; ++i)
          for (long long gain = spec.gain_min; gain <= spec.gain_max; ++gain)
            add(EdgeKind::Loop, i, i, -1, gain);
      break;
    }
  }

  Group grp = Group::integers();
  std::vector<GroupElem> phi;
  for (long long v : gains) phi.push_back(grp.from_int(v));
  SignedGraph sg(std::move(g), std::move(sigma));
  Orientation orient(sg, std::move(tau));
  return GainSignedGraph(std::move(sg), std::move(orient), grp, std::move(phi));
}

long long IntPolynomial::coeff(int deg) const {
  int k = deg - min_deg_;
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

void IntPolynomial::add(int deg, long long delta) {
  if (delta == 0) return;
  if (c_.empty()) {
    min_deg_ = deg;
    c_.push_back(delta);
    return;
  }
  if (deg < min_deg_) {
    c_.insert(c_.begin(), min_deg_ - deg, 0);
    min_deg_ = deg;
  }
  int k = deg - min_deg_;
  if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, 0);
  c_[k] += delta;
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  while (!c_.empty() && c_.front() == 0) {
    c_.erase(c_.begin());
    ++min_deg_;
  }
  if (c_.empty()) min_deg_ = 0;
}

int IntPolynomial::max_degree() const {
  return c_.empty() ? 0 : min_deg_ + static_cast<int>(c_.size()) - 1;
}

long long IntPolynomial::evaluate_at_int(long long x) const {
  if (min_deg_ < 0 && (x != 1 && x != -1))
    throw std::domain_error("IntPolynomial: cannot evaluate Laurent term");
  long long acc = 0;
  for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
    int deg = min_deg_ + k;
    long long pw = 1;
    if (x == -1) {
      pw = (deg % 2 == 0) ? 1 : -1;
    } else if (x == 1) {
      pw = 1;
    } else {
      for (int t = 0; t < deg; ++t) pw *= x;
    }
    acc += c_[k] * pw;
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
    long long v = c_[k];
    if (v == 0) continue;
    int deg = min_deg_ + k;
    std::string term;
    long long mag = v < 0 ? -v : v;
    if (deg == 0) {
      term = std::to_string(mag);
    } else {
      term = (mag == 1 ? "" : std::to_string(mag) + "*");
      term += deg == 1 ? "L" : "L^" + std::to_string(deg);
    }
    if (out.empty())
      out = (v < 0 ? "-" : "") + term;
    else
      out += (v < 0 ? " - " : " + ") + term;
  }
  return out;
}

bool IntPolynomial::operator==(const IntPolynomial& o) const {
  return min_deg_ == o.min_deg_ && c_ == o.c_;
}

ChromaticPolynomials chromatic_polynomials(const GainSignedGraph& u,
                                           const EnumerationBudget& budget) {
  const int n = u.vertex_count();
  if (u.edge_count() + 1 > budget.max_enum_edges)
    throw BudgetExceeded("chromatic_polynomials: too many edges",
                         budget.max_enum_edges);
  ChromaticPolynomials out;
  Matroid plain(u, false);
  Matroid ext(u, true);
  for_all_subsets(u.all_edges(), [&](const EdgeSet& s) {
    int sign = s.count() % 2 == 0 ? 1 : -1;
    int rk = plain.rank(s);
    out.chi.add(n - rk, sign);
    if (plain.set_hyperbalanced(s)) out.chi_balanced.add(n - rk, sign);
  });
  for_all_subsets(ext.ground(), [&](const EdgeSet& s) {
    int sign = s.count() % 2 == 0 ? 1 : -1;
    out.chi_infinity.add(n + 1 - ext.rank(s), sign);
  });
  return out;
}

namespace {

IntPolynomial moebius_characteristic(const std::vector<Flat>& flats, int top_exp) {
  // mu(bottom, F) by recursion over the containment order
  std::vector<long long> mu(flats.size(), 0);
  std::vector<int> order(flats.size());
  for (size_t i = 0; i < flats.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return flats[a].rank < flats[b].rank; });
  IntPolynomial out;
  for (size_t oi = 0; oi < order.size(); ++oi) {
    int i = order[oi];
    long long below = 0;
    for (size_t oj = 0; oj < oi; ++oj) {
      int j = order[oj];
      if (flats[j].edges != flats[i].edges && flats[j].edges.subset_of(flats[i].edges))
        below += mu[j];
    }
    mu[i] = (oi == 0) ? 1 : -below;
    out.add(top_exp - flats[i].rank, mu[i]);
  }
  return out;
}

}  // namespace

ChromaticPolynomials chromatic_polynomials_moebius(const GainSignedGraph& u,
                                                   const EnumerationBudget& budget) {
  const int n = u.vertex_count();
  ChromaticPolynomials out;
  Matroid plain(u, false);
  plain.budget = budget;
  Matroid ext(u, true);
  ext.budget = budget;
  // matroid loops force the zero polynomial, as in the telescoped expansion
  if (!plain.closure(EdgeSet(u.edge_count())).empty()) return out;
  auto all = plain.flats(false);
  out.chi = moebius_characteristic(all, n);
  std::vector<Flat> hb;
  for (const Flat& f : all)
    if (plain.set_hyperbalanced(f.edges)) hb.push_back(f);
  out.chi_balanced = moebius_characteristic(hb, n);
  out.chi_infinity = moebius_characteristic(ext.flats(false), n + 1);
  return out;
}

RegionCounts count_regions(const GainSignedGraph& u, const EnumerationBudget& budget) {
  if (!u.group().embeds_in_rationals())
    throw std::invalid_argument("count_regions: gains must embed in the reals");
  // a neutral loose edge or neutral positive loop is the degenerate
  // hyperplane: the whole space, leaving no regions to count
  for (const Hyperplane& h : build_arrangement(u))
    if (h.kind == Hyperplane::Kind::Degenerate)
      throw std::invalid_argument(
          "count_regions: degenerate arrangement (neutral loose edge or "
          "neutral positive loop)");
  const int n = u.vertex_count();
  ChromaticPolynomials polys = chromatic_polynomials(u, budget);
  const long long sgn_n = n % 2 == 0 ? 1 : -1;
  RegionCounts rc;
  rc.regions = sgn_n * polys.chi_balanced.evaluate_at_int(-1);
  rc.bounded = sgn_n * polys.chi_balanced.evaluate_at_int(1);
  rc.regions_infinity = -sgn_n * polys.chi_infinity.evaluate_at_int(-1);
  return rc;
}

namespace {

// canonical form: scale so the first nonzero coefficient is 1
std::vector<Rational> canonical_row(std::vector<Rational> row) {
  for (const Rational& c : row) {
    if (!c.is_zero()) {
      Rational lead = c;
      for (Rational& x : row) x /= lead;
      return row;
    }
  }
  return row;
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
  Mat<Rational> m(static_cast<int>(rows.size()),
                  rows.empty() ? 0 : static_cast<int>(rows[0].size()), Rational(0));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return exact_rank(std::move(m));
}

}  // namespace

IntPolynomial arrangement_characteristic(const std::vector<Hyperplane>& hps, int dim) {
  // dedupe to set semantics
  std::vector<std::vector<Rational>> rows;  // coeffs + rhs, canonicalized
  for (const Hyperplane& h : hps) {
    std::vector<Rational> row = h.coeffs;
    row.push_back(h.rhs);
    row = canonical_row(std::move(row));
    if (std::find(rows.begin(), rows.end(), row) == rows.end())
      rows.push_back(std::move(row));
  }
  if (rows.size() > 20)
    throw BudgetExceeded("arrangement_characteristic: too many hyperplanes", 20);
  IntPolynomial p;
  const std::uint64_t limit = std::uint64_t{1} << rows.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<std::vector<Rational>> coef, aug;
    int count = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (!((mask >> i) & 1u)) continue;
      ++count;
      std::vector<Rational> c(rows[i].begin(), rows[i].end() - 1);
      coef.push_back(c);
      aug.push_back(rows[i]);
    }
    int rc = rational_rank(coef);
    int ra = rational_rank(aug);
    if (rc != ra) continue;  // empty intersection
    p.add(dim - rc, count % 2 == 0 ? 1 : -1);
  }
  return p;
}

IntPolynomial central_characteristic(const GainSignedGraph& u) {
  if (!u.group().embeds_in_rationals())
    throw std::invalid_argument("central_characteristic: gains must embed in Q");
  const int n = u.vertex_count();
  std::vector<Hyperplane> hps;
  for (const Edge& e : u.graph().edges()) {
    Hyperplane h;
    h.edge = e.id;
    h.coeffs.assign(n + 1, Rational(0));
    h.coeffs[0] = u.gain(e.id).v;
    if (e.end_count() >= 1) h.coeffs[1 + e.ends[0]] += Rational(u.tau(e.id, 0));
    if (e.end_count() == 2) h.coeffs[1 + e.ends[1]] += Rational(u.tau(e.id, 1));
    h.rhs = Rational(0);
    h.kind = Hyperplane::Kind::Proper;
    hps.push_back(std::move(h));
  }
  Hyperplane hinf;  // x_0 = 0
  hinf.coeffs.assign(n + 1, Rational(0));
  hinf.coeffs[0] = Rational(1);
  hinf.rhs = Rational(0);
  hinf.kind = Hyperplane::Kind::Proper;
  hps.push_back(std::move(hinf));
  return arrangement_characteristic(hps, n + 1);
}

long long count_regions_lines_2d(const std::vector<Hyperplane>& hps) {
  std::vector<std::vector<Rational>> lines;  // canonical (a, b, c): ax+by=c
  for (const Hyperplane& h : hps) {
    if (h.kind == Hyperplane::Kind::Phantom) continue;  // empty set cuts nothing
    if (h.kind == Hyperplane::Kind::Degenerate)
      throw std::invalid_argument("count_regions_lines_2d: degenerate hyperplane");
    if (h.coeffs.size() != 2)
      throw std::invalid_argument("count_regions_lines_2d: not a plane arrangement");
    std::vector<Rational> row = h.coeffs;
    row.push_back(h.rhs);
    row = canonical_row(std::move(row));
    if (std::find(lines.begin(), lines.end(), row) == lines.end())
      lines.push_back(std::move(row));
  }
  long long regions = 1;
  for (size_t i = 0; i < lines.size(); ++i) {
    // each distinct intersection point with earlier lines adds one region
    std::vector<std::pair<Rational, Rational>> points;
    for (size_t j = 0; j < i; ++j) {
      const Rational det = lines[i][0] * lines[j][1] - lines[j][0] * lines[i][1];
      if (det.is_zero()) continue;  // parallel
      Rational x = (lines[i][2] * lines[j][1] - lines[j][2] * lines[i][1]) / det;
      Rational y = (lines[i][0] * lines[j][2] - lines[j][0] * lines[i][2]) / det;
      if (std::find(points.begin(), points.end(), std::make_pair(x, y)) == points.end())
        points.emplace_back(std::move(x), std::move(y));
    }
    regions += 1 + static_cast<long long>(points.size());
  }
  return regions;
}

GainSignedGraph edge_point_model(const Graph& g) {
  for (const Edge& e : g.edges())
    if (e.kind != EdgeKind::Link && e.kind != EdgeKind::Loop)
      throw std::invalid_argument("edge_point_model: graph must have links and loops only");
  std::vector<Sign> sigma(g.edge_count(), -1);
  std::vector<std::array<Sign, 2>> tau(g.edge_count(), {1, 1});  // extraverted
  SignedGraph sg(g, std::move(sigma));
  Orientation t(sg, std::move(tau));
  Group grp = Group::integers();
  std::vector<GroupElem> phi(g.edge_count(), grp.from_int(1));
  return GainSignedGraph(std::move(sg), std::move(t), grp, std::move(phi));
}

GainSignedGraph bidirected_model(const SignedGraph& sg, const Orientation& tau) {
  Group grp = Group::integers();
  std::vector<GroupElem> phi(sg.edge_count(), grp.from_int(1));
  return GainSignedGraph(sg, tau, grp, std::move(phi));
}

GainSignedGraph arc_model(const Graph& digraph) {
  std::vector<Sign> sigma(digraph.edge_count(), 1);
  std::vector<std::array<Sign, 2>> tau(digraph.edge_count(), {-1, 1});
  SignedGraph sg(digraph, std::move(sigma));
  Orientation t(sg, std::move(tau));
  Group grp = Group::integers();
  std::vector<GroupElem> phi(digraph.edge_count(), grp.from_int(1));
  return GainSignedGraph(std::move(sg), std::move(t), grp, std::move(phi));
}

GainSignedGraph double_arc_model(const Graph& digraph) {
  const int n = digraph.vertex_count();
  Graph doubled(2 * n);  // v- is v, v+ is n + v
  for (const Edge& e : digraph.edges()) {
    if (e.end_count() != 2)
      throw std::invalid_argument("double_arc_model: digraph must have links/loops only");
    doubled.add_link(e.ends[0], n + e.ends[1]);
  }
  return arc_model(doubled);
}

int polytope_dimension(const PolytopeQuery& q) {
  switch (q.family) {
    case PointFamily::EdgePoints: {
      GainSignedGraph u = edge_point_model(q.graph);
      return Matroid(u).rank(u.all_edges()) - 1;
    }
    case PointFamily::BidirectedEdgePoints: {
      if (!q.bidirected || !q.orientation)
        throw std::invalid_argument("polytope_dimension: bidirected input required");
      GainSignedGraph u = bidirected_model(*q.bidirected, *q.orientation);
      return Matroid(u).rank(u.all_edges());
    }
    case PointFamily::ArcPoints: {
      GainSignedGraph u = arc_model(q.graph);
      return Matroid(u).rank(u.all_edges());
    }
    case PointFamily::DoubleArcPoints: {
      GainSignedGraph u = double_arc_model(q.graph);
      return Matroid(u).rank(u.all_edges());
    }
  }
  throw std::invalid_argument("polytope_dimension: unknown family");
}

bool is_poised(const SignedGraph& sg, const Orientation& tau, const Walk& w) {
  const Graph& g = sg.graph();
  w.validate(g);
  const bool half_to_half = w.initial_half && w.terminal_half;
  const bool closed = !w.is_ultrawalk() && w.length() >= 1 && w.is_closed(g);
  if (!half_to_half && !closed)
    throw std::invalid_argument("is_poised: walk must be closed or half-to-half");

  // per-appearance sequence of (edge, tau at entering end, tau at leaving end)
  struct Leg {
    EdgeId edge;
    Sign in_tau;   // tau at the vertex where the leg ends
    Sign out_tau;  // tau at the vertex where the leg starts
  };
  std::vector<Leg> legs;
  if (w.initial_half)
    legs.push_back({*w.initial_half, tau.tau(*w.initial_half, 0),
                    tau.tau(*w.initial_half, 0)});
  for (const WalkStep& st : w.steps)
    legs.push_back({st.edge, tau.tau(st.edge, st.to_slot), tau.tau(st.edge, st.from_slot)});
  if (w.terminal_half)
    legs.push_back({*w.terminal_half, tau.tau(*w.terminal_half, 0),
                    tau.tau(*w.terminal_half, 0)});

  if (closed) {
    Sign s = 1;
    for (const Leg& l : legs) s *= sg.sign(l.edge);
    if (s != 1) return false;  // odd incoherence count: bipartition ill-defined
  }

  std::map<EdgeId, int> assignment;  // edge -> 0 (A) or 1 (B)
  int cur = 0;
  bool well_defined = true;
  auto assign = [&](EdgeId e, int side) {
    auto it = assignment.find(e);
    if (it == assignment.end())
      assignment[e] = side;
    else if (it->second != side)
      well_defined = false;
  };
  assign(legs[0].edge, cur);
  for (size_t i = 0; i + 1 < legs.size(); ++i) {
    // vertex between legs i and i+1: coherent iff arrows line up
    bool coherent = legs[i].in_tau == -legs[i + 1].out_tau;
    if (!coherent) cur ^= 1;
    assign(legs[i + 1].edge, cur);
  }
  if (closed) {
    bool coherent = legs.back().in_tau == -legs.front().out_tau;
    int closing = coherent ? cur : cur ^ 1;
    if (closing != 0) well_defined = false;  // parity mismatch around the circle
  }
  if (!well_defined) return false;
  int a = 0, b = 0;
  for (const auto& [e, side] : assignment) (side == 0 ? a : b)++;
  return a == b;
}

}  // namespace gsg
