#pragma once

#include <string>
#include <vector>

#include "syzforms/monomial.hpp"
#include "syzforms/rational.hpp"

namespace syzforms {

struct Term {
  Monomial mono;
  Rational coef;
};

// Multivariate polynomial with exact rational coefficients.
// Terms are kept sorted descending under the ring's monomial order and never
// store a zero coefficient; values are immutable in spirit (all operations
// return fresh polynomials).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, const Rational& c);
  static Polynomial variable(const Ring& ring, int i);
  static Polynomial from_term(const Ring& ring, const Monomial& m, const Rational& c);
  // Sorts, combines equal monomials, drops zeros.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);
  // Trusts the caller: terms already descending, distinct, nonzero.
  static Polynomial from_sorted_terms(const Ring& ring, std::vector<Term> terms);

  Polynomial drop_leading_term() const;

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const Term& leading_term() const;

  // Max total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  Rational constant_value() const;  // coefficient of 1 (0 if absent)
  Rational coefficient(const Monomial& m) const;

  Polynomial homogeneous_component(int d) const;
  Polynomial derivative(int i) const;

  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial mul_scalar(const Rational& c) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  // Canonical text form; parse_poly(str()) round-trips.
  std::string str() const;

  // Exact division by a single polynomial; throws domain_error when the
  // remainder is nonzero.
  static Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

  // Re-sorts the terms under a different ring (same variable count).
  Polynomial with_ring(const Ring& ring) const;

 private:
  Ring ring_;
  std::vector<Term> terms_;  // descending under ring_.order

  friend class PolynomialBuilder;
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

// All monomials of total degree d, descending under the ring order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int d);

// Total degree of a monomial times variable name helper for formatting.
std::string monomial_str(const Monomial& m);

}  // namespace syzforms
