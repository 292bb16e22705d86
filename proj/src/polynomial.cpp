#include "syzforms/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace syzforms {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial::one(ring.nvars), c});
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, int i) {
  Polynomial p(ring);
  p.terms_.push_back({Monomial::var(ring.nvars, i), Rational(1)});
  return p;
}

Polynomial Polynomial::from_term(const Ring& ring, const Monomial& m, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&ring](const Term& a, const Term& b) {
    return compare(ring.order, a.mono, b.mono) == std::strong_ordering::greater;
  });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(const Ring& ring, std::vector<Term> terms) {
  Polynomial p(ring);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::drop_leading_term() const {
  Polynomial p(ring_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational Polynomial::constant_value() const {
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coef;
  return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return Rational(0);
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial p(ring_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::derivative(int i) const {
  if (i < 0 || i >= ring_.nvars) throw std::out_of_range("derivative: variable index");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.e[i] == 0) continue;
    Term s = t;
    s.coef *= static_cast<long>(t.mono.e[i]);
    s.mono.e[i] -= 1;
    out.push_back(std::move(s));
  }
  // dividing an exponent keeps relative order under any monomial order only
  // up to ties with dropped terms, so re-sort
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coef * c});
  return p;  // multiplicativity of the order preserves sortedness
}

Polynomial Polynomial::mul_scalar(const Rational& c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coef * c});
  return p;
}

Polynomial Polynomial::operator-() const { return mul_scalar(Rational(-1)); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  Polynomial r(a.ring_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& ord = a.ring_.order;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    auto c = compare(ord, a.terms_[i].mono, b.terms_[j].mono);
    if (c == std::strong_ordering::greater) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Rational s = a.terms_[i].coef + b.terms_[j].coef;
      if (s != 0) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  std::vector<Term> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc.push_back({s.mono * t.mono, s.coef * t.coef});
  return Polynomial::from_terms(a.ring_, std::move(acc));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef)
      return false;
  return true;
}

std::string monomial_str(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.nv; ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << "*";
    os << "x_" << i;
    if (m.e[i] > 1) os << "^" << m.e[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (t.mono.is_one()) {
      os << to_string(c);
    } else if (c == 1) {
      os << monomial_str(t.mono);
    } else {
      os << to_string(c) << "*" << monomial_str(t.mono);
    }
    first = false;
  }
  return os.str();
}

Polynomial Polynomial::exact_divide(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  if (g.is_zero()) throw std::domain_error("exact_divide: division by zero");
  Polynomial rem = f;
  Polynomial quot(f.ring_);
  const Term& lg = g.leading_term();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term();
    if (!divides(lg.mono, lr.mono))
      throw std::domain_error("exact_divide: remainder is nonzero");
    Monomial m = lr.mono / lg.mono;
    Rational c = lr.coef / lg.coef;
    quot += Polynomial::from_term(f.ring_, m, c);
    rem -= g.mul_term(m, c);
  }
  return quot;
}

Polynomial Polynomial::with_ring(const Ring& ring) const {
  if (ring.nvars != ring_.nvars)
    throw std::invalid_argument("with_ring: variable count differs");
  return from_terms(ring, terms_);
}

namespace {
void enumerate_monomials(const Ring& ring, int var, int remaining, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (var == ring.nvars - 1) {
    cur.e[var] = static_cast<std::uint16_t>(remaining);
    out.push_back(cur);
    cur.e[var] = 0;
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur.e[var] = static_cast<std::uint16_t>(k);
    enumerate_monomials(ring, var + 1, remaining - k, cur, out);
  }
  cur.e[var] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur = Monomial::one(ring.nvars);
  enumerate_monomials(ring, 0, d, cur, out);
  std::sort(out.begin(), out.end(), [&ring](const Monomial& a, const Monomial& b) {
    return compare(ring.order, a, b) == std::strong_ordering::greater;
  });
  return out;
}

}  // namespace syzforms
