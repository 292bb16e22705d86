#include "syzforms/qpoly.hpp"

#include <sstream>

namespace syzforms {

Rational QPoly::eval(const Rational& t) const {
  Rational v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

QPoly& QPoly::operator+=(const QPoly& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), Rational(0));
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), Rational(0));
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(c));
}

QPoly QPoly::scaled(const Rational& s) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= s;
  return QPoly(std::move(c));
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational v = c_[k];
    if (v == 0) continue;
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (k == 0) {
      os << to_string(v);
    } else {
      if (v != 1) os << to_string(v) << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

QPoly QPoly::binomial_in_t(int shift, int n) {
  // C(t + shift, n) = (t+shift)(t+shift-1)...(t+shift-n+1) / n!
  QPoly p = QPoly::constant(Rational(1));
  for (int i = 0; i < n; ++i) p = p * QPoly({Rational(shift - i), Rational(1)});
  Rational fact(1);
  for (int i = 2; i <= n; ++i) fact *= i;
  return p.scaled(1 / fact);
}

}  // namespace syzforms
