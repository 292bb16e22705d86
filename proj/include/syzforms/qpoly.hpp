#pragma once

#include <string>
#include <vector>

#include "syzforms/rational.hpp"

namespace syzforms {

// Univariate polynomial in t with rational coefficients (Hilbert polynomials).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPoly constant(const Rational& c) { return QPoly({c}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
  }

  Rational eval(const Rational& t) const;

  QPoly& operator+=(const QPoly& b);
  QPoly& operator-=(const QPoly& b);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rational& s) const;
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  std::string str() const;  // e.g. "1/2*t^2 + 3/2*t + 1"

  // C(t + shift, n) as a polynomial in t.
  static QPoly binomial_in_t(int shift, int n);

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;  // ascending powers
};

}  // namespace syzforms
