#include "gsg/linalg.hpp"

#include <random>
#include <stdexcept>

namespace gsg {

namespace {

long long mod_inverse(long long a, long long p) {
  long long t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("Fp: not invertible");
  return ((t % p) + p) % p;
}

}  // namespace

Fp Fp::operator/(Fp o) const {
  if (o.v == 0) throw std::domain_error("Fp: division by zero");
  return {(v * mod_inverse(o.v, p)) % p, p};
}

bool is_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

template <typename S>
int exact_rank(Mat<S> m) {
  int r = 0;
  S prev{};
  bool have_prev = false;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i) {
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == -1) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    for (int i = r + 1; i < m.rows; ++i) {
      for (int j = c + 1; j < m.cols; ++j) {
        S num = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
        m.at(i, j) = have_prev ? num / prev : num;
      }
      m.at(i, c) = m.at(r, c) - m.at(r, c);  // zero of S
    }
    prev = m.at(r, c);
    have_prev = true;
    ++r;
  }
  return r;
}

template int exact_rank<Rational>(Mat<Rational>);
template int exact_rank<Fp>(Mat<Fp>);

std::vector<Rational> edge_vector_q(const GainSignedGraph& u, EdgeId e) {
  if (!u.group().embeds_in_rationals())
    throw std::invalid_argument("edge_vector_q: gain group does not embed in Q");
  const Edge& ed = u.graph().edge(e);
  std::vector<Rational> z(1 + u.vertex_count(), Rational(0));
  z[0] = u.gain(e).v;
  if (ed.end_count() >= 1) z[1 + ed.ends[0]] += Rational(u.tau(e, 0));
  if (ed.end_count() == 2) z[1 + ed.ends[1]] += Rational(u.tau(e, 1));
  return z;
}

std::vector<Rational> extra_point_vector_q(const GainSignedGraph& u) {
  std::vector<Rational> z(1 + u.vertex_count(), Rational(0));
  z[0] = Rational(1);
  return z;
}

ExactMatrix incidence_matrix_q(const GainSignedGraph& u, const EdgeSet& s,
                               bool extended) {
  const int m = u.edge_count();
  const int extra = extended ? m : -1;
  ExactMatrix out(1 + u.vertex_count(), s.count(), Rational(0));
  int col = 0;
  s.for_each([&](int id) {
    std::vector<Rational> z =
        id == extra ? extra_point_vector_q(u) : edge_vector_q(u, id);
    for (int r = 0; r < out.rows; ++r) out.at(r, col) = z[r];
    ++col;
  });
  return out;
}

Mat<Fp> incidence_matrix_fp(const GainSignedGraph& u, const EdgeSet& s,
                            bool extended, long long p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("incidence_matrix_fp: modulus must be an odd prime");
  if (!(u.group().kind() == Group::Kind::Modular && u.group().modulus() == p))
    throw std::invalid_argument("incidence_matrix_fp: group is not Zmod p");
  const int m = u.edge_count();
  const int extra = extended ? m : -1;
  Mat<Fp> out(1 + u.vertex_count(), s.count(), Fp{0, p});
  int col = 0;
  auto fp = [&](long long v) { return Fp{((v % p) + p) % p, p}; };
  s.for_each([&](int id) {
    if (id == extra) {
      out.at(0, col) = fp(1);
    } else {
      const Edge& ed = u.graph().edge(id);
      out.at(0, col) = fp(u.gain(id).v.num().as_longlong());
      if (ed.end_count() >= 1) {
        Fp& cell = out.at(1 + ed.ends[0], col);
        cell = cell + fp(u.tau(id, 0));
      }
      if (ed.end_count() == 2) {
        Fp& cell = out.at(1 + ed.ends[1], col);
        cell = cell + fp(u.tau(id, 1));
      }
    }
    ++col;
  });
  return out;
}

std::vector<Rational> walk_vector_q(const GainSignedGraph& u, const Walk& w) {
  w.validate(u.graph());
  std::vector<Rational> acc(1 + u.vertex_count(), Rational(0));
  auto add_scaled = [&](const std::vector<Rational>& z, int coeff) {
    if (coeff == 0) return;
    for (size_t i = 0; i < acc.size(); ++i)
      acc[i] += z[i] * Rational(coeff);
  };
  if (w.initial_half)
    add_scaled(edge_vector_q(u, *w.initial_half), u.tau(*w.initial_half, 0));
  Sign running = 1;
  for (const WalkStep& st : w.steps) {
    add_scaled(edge_vector_q(u, st.edge), -running * u.tau(st.edge, st.from_slot));
    running *= u.sign(st.edge);
  }
  if (w.terminal_half)
    add_scaled(edge_vector_q(u, *w.terminal_half),
               -running * u.tau(*w.terminal_half, 0));
  return acc;
}

RankTheoremReport verify_rank_theorem(const GainSignedGraph& u, bool extended,
                                      bool all_subsets, int samples,
                                      std::uint64_t seed) {
  RankTheoremReport rep;
  Matroid mat(u, extended);
  const int gs = mat.ground_size();
  const bool use_fp = u.group().kind() == Group::Kind::Modular;
  if (use_fp && !u.group().embeds_in_prime_field())
    throw std::invalid_argument(
        "verify_rank_theorem: modulus is not an odd prime; no field embedding");

  auto check = [&](const EdgeSet& s) {
    int combinatorial = mat.rank(s);
    int algebraic = use_fp
                        ? exact_rank(incidence_matrix_fp(u, s, extended,
                                                         u.group().modulus()))
                        : exact_rank(incidence_matrix_q(u, s, extended));
    ++rep.checked;
    if (combinatorial != algebraic && rep.pass) {
      rep.pass = false;
      rep.witness = "rank mismatch on {";
      s.for_each([&](int id) { rep.witness += " " + std::to_string(id); });
      rep.witness += " }: combinatorial " + std::to_string(combinatorial) +
                     ", matrix " + std::to_string(algebraic);
    }
  };

  if (all_subsets) {
    if (gs > 20)
      throw BudgetExceeded("verify_rank_theorem: too many subsets", 20);
    for_all_subsets(EdgeSet::full(gs), check);
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < samples; ++t) {
      EdgeSet s(gs);
      for (int i = 0; i < gs; ++i)
        if (rng() & 1u) s.set(i);
      check(s);
    }
  }
  return rep;
}

}  // namespace gsg
