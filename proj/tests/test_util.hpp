#pragma once

#include <string>
#include <vector>

#include "syzforms/ideal.hpp"
#include "syzforms/parser.hpp"
#include "syzforms/rng.hpp"

namespace syzforms::test {

inline Ideal ideal_of(const Ring& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, ring));
  return Ideal(ring, std::move(ps));
}

// Z = three reduced points in P^2, not on a line.
inline Ideal three_points(OrderKind kind = OrderKind::Degrevlex) {
  Ring r = make_ring(3, kind);
  return ideal_of(r, {"x0*x1", "x0*x2", "x1*x2"});
}

// Twisted cubic in P^3.
inline Ideal twisted_cubic(OrderKind kind = OrderKind::Degrevlex) {
  Ring r = make_ring(4, kind);
  return ideal_of(r, {"x1*x3 - x2^2", "x1*x2 - x0*x3", "x0*x2 - x1^2"});
}

// Length-5 point supported at (0:0:0:1), not a local complete intersection.
inline Ideal fat_point(OrderKind kind = OrderKind::Degrevlex) {
  Ring r = make_ring(4, kind);
  return ideal_of(r, {"x0^2", "x1^2", "x0*x2", "x1*x2", "x2^2 - x0*x1"});
}

// Random homogeneous polynomial of the given degree (possibly zero).
inline Polynomial random_homogeneous(const Ring& ring, int degree, SplitMix64& rng,
                                     int max_terms = 4, long coef_bound = 5) {
  std::vector<Term> terms;
  auto monos = monomials_of_degree(ring, degree);
  int k = static_cast<int>(rng.uniform_int(1, max_terms));
  for (int i = 0; i < k; ++i) {
    long c = rng.uniform_int(-coef_bound, coef_bound);
    if (c == 0) continue;
    auto m = monos[static_cast<std::size_t>(rng.uniform_int(0, monos.size() - 1))];
    terms.push_back({m, Rational(c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

inline Polynomial random_nonzero_homogeneous(const Ring& ring, int degree, SplitMix64& rng,
                                             int max_terms = 4, long coef_bound = 5) {
  for (;;) {
    Polynomial f = random_homogeneous(ring, degree, rng, max_terms, coef_bound);
    if (!f.is_zero()) return f;
  }
}

}  // namespace syzforms::test
