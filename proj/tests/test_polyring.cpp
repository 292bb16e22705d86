#include <doctest.h>

#include "syzforms/parser.hpp"
#include "syzforms/polynomial.hpp"
#include "test_util.hpp"

using namespace syzforms;
using syzforms::test::random_homogeneous;

TEST_CASE("parse_poly on the grammar") {
  Ring r3 = make_ring(3);
  Polynomial p = parse_poly("x0*x1 - x2^2", r3);
  CHECK(p.num_terms() == 2);
  CHECK(p.coefficient(Monomial::var(3, 0) * Monomial::var(3, 1)) == Rational(1));
  CHECK(p.coefficient(Monomial::var(3, 2, 2)) == Rational(-1));

  CHECK(parse_poly("0", r3).is_zero());

  Ring r4 = make_ring(4);
  Polynomial cubic = parse_poly("x_0*(x_2^2-x_3^2) - x_1*x_3*x_2", r4);
  CHECK(cubic.num_terms() == 3);
  CHECK(cubic.is_homogeneous());
  CHECK(cubic.degree() == 3);
  // x0 and x_0 name the same variable
  CHECK(parse_poly("x_0*x_1", r3) == parse_poly("x0*x1", r3));

  CHECK(parse_poly("2/3*x0 - 1/3*x0", r3) == parse_poly("1/3*x0", r3));

  CHECK_THROWS_AS(parse_poly("x7", r3), ParseError);
  CHECK_THROWS_AS(parse_poly("x0 + ", r3), ParseError);
  CHECK_THROWS_AS(parse_poly("y0", r3), ParseError);
  CHECK_THROWS_AS(parse_poly("x0^x1", r3), ParseError);
}

TEST_CASE("parse/format round trip") {
  Ring r = make_ring(3);
  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_homogeneous(r, static_cast<int>(rng.uniform_int(0, 4)), rng, 5, 9);
    CHECK(parse_poly(f.str(), r) == f);
  }
  // and for an inhomogeneous one with rational coefficients
  Polynomial g = parse_poly("3/2*x0^2 - x1 + 7", r);
  CHECK(parse_poly(g.str(), r) == g);
}

TEST_CASE("arithmetic examples") {
  Ring r = make_ring(3);
  Polynomial x0 = Polynomial::variable(r, 0);
  Polynomial x1 = Polynomial::variable(r, 1);
  CHECK((x0 + x1) * (x0 - x1) == parse_poly("x0^2 - x1^2", r));
  CHECK((x0 * Polynomial(r)).is_zero());

  Ring r4 = make_ring(4);
  CHECK(parse_poly("x1*x3 - x2^2", r4) + parse_poly("x2^2", r4) == parse_poly("x1*x3", r4));

  CHECK_THROWS_AS(Polynomial::variable(r, 0) + Polynomial::variable(r4, 0),
                  std::invalid_argument);
}

TEST_CASE("ring axioms on randomized inputs") {
  Ring r = make_ring(3);
  SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = random_homogeneous(r, static_cast<int>(rng.uniform_int(0, 3)), rng);
    Polynomial b = random_homogeneous(r, static_cast<int>(rng.uniform_int(0, 3)), rng);
    Polynomial c = random_homogeneous(r, static_cast<int>(rng.uniform_int(0, 3)), rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("homogeneous_component") {
  Ring r = make_ring(3);
  Polynomial f = parse_poly("x0 + x0*x1", r);
  CHECK(f.homogeneous_component(2) == parse_poly("x0*x1", r));
  CHECK(Polynomial(r).homogeneous_component(3).is_zero());
  CHECK(parse_poly("x0^2", r).homogeneous_component(1).is_zero());
}

TEST_CASE("partial derivative and the Euler identity") {
  Ring r = make_ring(3);
  CHECK(parse_poly("x0^2*x1", r).derivative(0) == parse_poly("2*x0*x1", r));
  CHECK(parse_poly("x1", r).derivative(0).is_zero());
  CHECK_THROWS_AS(parse_poly("x1", r).derivative(5), std::out_of_range);

  Polynomial f = parse_poly("x0*x1*x2", r);
  Polynomial sum(r);
  for (int i = 0; i < 3; ++i) sum += Polynomial::variable(r, i) * f.derivative(i);
  CHECK(sum == f.mul_scalar(Rational(3)));

  // Euler identity on random homogeneous polynomials
  SplitMix64 rng(3);
  for (int i = 0; i < 200; ++i) {
    int d = static_cast<int>(rng.uniform_int(1, 5));
    Polynomial g = random_homogeneous(r, d, rng);
    Polynomial acc(r);
    for (int j = 0; j < 3; ++j) acc += Polynomial::variable(r, j) * g.derivative(j);
    CHECK(acc == g.mul_scalar(Rational(d)));
  }
}

TEST_CASE("monomial orders are total, multiplicative, degree-compatible") {
  SplitMix64 rng(19);
  for (OrderKind kind : {OrderKind::Degrevlex, OrderKind::Deglex, OrderKind::Lex}) {
    Ring r = make_ring(3, kind);
    auto random_mono = [&] {
      Monomial m = Monomial::one(3);
      for (int i = 0; i < 3; ++i) m.e[i] = static_cast<std::uint16_t>(rng.uniform_int(0, 4));
      return m;
    };
    for (int i = 0; i < 200; ++i) {
      Monomial a = random_mono(), b = random_mono(), c = random_mono();
      auto ab = compare(r.order, a, b);
      // totality / antisymmetry
      CHECK(compare(r.order, b, a) == (0 <=> ab));
      if (ab == std::strong_ordering::equal) CHECK(a == b);
      // multiplicativity
      CHECK(compare(r.order, a * c, b * c) == ab);
      // 1 is minimal among monomials (well-order witness)
      CHECK(compare(r.order, a * b, a) != std::strong_ordering::less);
      if (kind != OrderKind::Lex && a.degree() != b.degree())
        CHECK((compare(r.order, a, b) == std::strong_ordering::greater) ==
              (a.degree() > b.degree()));
    }
  }
}

TEST_CASE("degrevlex tie-breaking matches the reference convention") {
  Ring r = make_ring(3);
  Monomial x0x1 = Monomial::var(3, 0) * Monomial::var(3, 1);
  Monomial x2sq = Monomial::var(3, 2, 2);
  // x0*x1 > x2^2 in degrevlex
  CHECK(compare(r.order, x0x1, x2sq) == std::strong_ordering::greater);
  Polynomial f = parse_poly("x2^2 - x0*x1", r);
  CHECK(f.leading_term().mono == x0x1);
}

TEST_CASE("exact_divide") {
  Ring r = make_ring(3);
  Polynomial f = parse_poly("x0^2*x1 + x0*x1^2", r);
  Polynomial g = parse_poly("x0*x1", r);
  CHECK(Polynomial::exact_divide(f, g) == parse_poly("x0 + x1", r));
  CHECK_THROWS_AS(Polynomial::exact_divide(parse_poly("x0^2 + x1", r), g), std::domain_error);
}
