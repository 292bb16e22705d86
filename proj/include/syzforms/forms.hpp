#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "syzforms/graded.hpp"
#include "syzforms/polynomial.hpp"

namespace syzforms {

// Polynomial differential p-form: coefficients indexed by strictly
// increasing index tuples, stored as bitmasks over the variables.
// Total degree of a homogeneous form = coefficient degree + p
// (deg dx_i = deg x_i = 1).
class PForm {
 public:
  PForm() = default;
  PForm(Ring ring, int p);

  static PForm basis_form(const Ring& ring, const std::vector<int>& idx);
  static PForm from_polynomial(const Polynomial& f);  // a 0-form

  const Ring& ring() const { return ring_; }
  int p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<std::uint32_t, Polynomial>& coefficients() const { return c_; }
  Polynomial coefficient(std::uint32_t mask) const;
  Polynomial coefficient(const std::vector<int>& idx) const;

  // Max over coefficients of (poly degree + p); -1 for zero.
  int total_degree() const;
  bool is_homogeneous() const;

  PForm operator-() const;
  friend PForm operator+(const PForm& a, const PForm& b);
  friend PForm operator-(const PForm& a, const PForm& b);
  friend bool operator==(const PForm& a, const PForm& b);
  PForm& operator+=(const PForm& b) { return *this = *this + b; }
  PForm& operator-=(const PForm& b) { return *this = *this - b; }

  PForm mul_poly(const Polynomial& f) const;
  PForm mul_scalar(const Rational& c) const;

  std::string str() const;

  void add_term(std::uint32_t mask, const Polynomial& coef);  // mask assumed sorted

 private:
  Ring ring_;
  int p_ = 0;
  std::map<std::uint32_t, Polynomial> c_;  // popcount(key) == p_, values nonzero
};

// v = sum coefficients[j] d/dx_j
struct VectorField {
  Ring ring;
  std::vector<Polynomial> coefficients;

  static VectorField radial(const Ring& ring);
  static VectorField basis(const Ring& ring, int j);
};

PForm wedge(const PForm& a, const PForm& b);
PForm exterior_derivative(const PForm& w);
// Interior product with d/dx_j.
PForm contract_basis(const PForm& w, int j);
PForm contract(const PForm& w, const VectorField& v);
// Iterated contraction by the multivector d/dx_{i_1} ^ ... ^ d/dx_{i_k},
// innermost first: i_k, then i_{k-1}, ...
PForm contract_multi(const PForm& w, const std::vector<int>& idx);
PForm contract_rad(const PForm& w);
bool descends(const PForm& w);  // contract_rad(w) == 0

// delta w = dw / deg w on a homogeneous form of nonzero total degree;
// splits contract_rad: contract_rad(delta(w)) == w whenever descends(w).
PForm delta(const PForm& w);

// The (n-1)-form iota_rad iota_v (dx_0 ^ ... ^ dx_n).
PForm nform_from_vfield(const VectorField& v);
// Inverse direction: iota_v dx_0^...^dx_n = dw/(d+n); returns the
// coefficient list of some v with that property.
VectorField vfield_from_nform(const PForm& w);

// Matrix of p-forms (uniform exterior degree), with wedge multiplication.
class FormMatrix {
 public:
  FormMatrix() = default;
  FormMatrix(Ring ring, int rows, int cols, int p);
  static FormMatrix from_graded_map(const GradedMap& m);  // 0-form entries

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int p() const { return p_; }
  const PForm& entry(int r, int c) const { return m_[r * cols_ + c]; }
  void set_entry(int r, int c, PForm f);
  bool is_zero() const;

 private:
  Ring ring_;
  int rows_ = 0, cols_ = 0, p_ = 0;
  std::vector<PForm> m_;
};

FormMatrix matrix_mul(const FormMatrix& a, const FormMatrix& b);
FormMatrix matrix_delta(const FormMatrix& a);        // entrywise, by entry degree
FormMatrix matrix_contract_rad(const FormMatrix& a); // entrywise
// a . t for a rational column vector t.
std::vector<PForm> matrix_apply(const FormMatrix& a, const std::vector<Rational>& t);

// Text format: sum of coef * dx_i^dx_j terms, '^' between dx symbols is the
// wedge; e.g. "x_0*x_1*dx_2 - x_0*x_2*dx_1".
PForm parse_form(const std::string& text, const Ring& ring);

// Flatten onto the (mask, monomial) basis with coefficient degree
// coeff_degree; masks ascending, monomials descending under the ring order.
std::vector<Rational> form_coefficient_vector(const PForm& w, int coeff_degree);

std::vector<std::uint32_t> masks_of_weight(int nvars, int p);
std::vector<int> mask_indices(std::uint32_t mask);

}  // namespace syzforms
