#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "syzforms/polynomial.hpp"

namespace syzforms {

// Homogeneous ideal of R with a lazily computed reduced Groebner basis.
// Values are immutable; the basis cache is populated at most once.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Reduced Groebner basis w.r.t. the ring's order: monic, autoreduced,
  // sorted by leading monomial. Unique for a fixed order.
  const std::vector<Polynomial>& groebner_basis() const;

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<const std::vector<Polynomial>> gb_;
};

// ---- raw engine (no homogeneity requirement; used internally) ----

// Remainder of multivariate division by `basis` (need not be a GB; with a
// reduced GB the result is the canonical normal form).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis);

// Reduced Groebner basis of arbitrary generators under gens' ring order.
std::vector<Polynomial> buchberger(const Ring& ring, std::vector<Polynomial> gens);

Polynomial spoly(const Polynomial& f, const Polynomial& g);

// Test hook: every S-polynomial of `basis` reduces to zero.
bool buchberger_criterion_holds(const std::vector<Polynomial>& basis);

// ---- ideal operations ----

Polynomial normal_form(const Polynomial& f, const Ideal& I);
bool contains(const Ideal& I, const Polynomial& f);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
// (I : J^inf) by iterated quotient until the chain stabilizes.
Ideal saturate(const Ideal& I, const Ideal& J);
// Saturation w.r.t. the irrelevant maximal ideal (x_0,...,x_n).
Ideal saturate(const Ideal& I);

bool ideal_equal(const Ideal& I, const Ideal& J);
bool is_unit_ideal(const Ideal& I);
bool is_zero_ideal(const Ideal& I);

Ideal irrelevant_ideal(const Ring& ring);
Ideal unit_ideal(const Ring& ring);

// dim_k (I)_d
long graded_piece_dim(const Ideal& I, int d);
// basis of (I)_d: for each degree-d monomial u in the initial ideal, the
// element u - reduce(u) (distinct leading terms, hence independent)
std::vector<Polynomial> graded_piece_basis(const Ideal& I, int d);

Ideal with_order(const Ideal& I, OrderKind kind);

// ---- file format ----
// One generator per line in the polynomial grammar, '#' comments, and a
// header line `vars: n+1`.
Ideal parse_ideal_file(std::istream& in, OrderKind kind = OrderKind::Degrevlex);
Ideal parse_ideal_text(const std::string& text, OrderKind kind = OrderKind::Degrevlex);
std::string ideal_file_text(const Ideal& I);

}  // namespace syzforms
