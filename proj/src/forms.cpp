#include "syzforms/forms.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "syzforms/parser.hpp"

namespace syzforms {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

// Sign of sorting dx_a-block in front of dx_b-block (both internally sorted):
// (-1)^{# inversions between the two index sets}.
int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inv = 0;
  for (int j = 0; j < 32; ++j) {
    if (!(b & (1u << j))) continue;
    inv += popcount(a >> (j + 1));  // elements of a greater than j
  }
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

PForm::PForm(Ring ring, int p) : ring_(std::move(ring)), p_(p) {}

PForm PForm::basis_form(const Ring& ring, const std::vector<int>& idx) {
  PForm w(ring, static_cast<int>(idx.size()));
  std::uint32_t mask = 0;
  for (int i : idx) {
    if (i < 0 || i >= ring.nvars) throw std::out_of_range("basis_form: index");
    std::uint32_t bit = 1u << i;
    if (mask & bit) return w;  // repeated index: zero form
    mask |= bit;
  }
  // sign of sorting idx
  int inv = 0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] > idx[j]) ++inv;
  w.add_term(mask, Polynomial::constant(ring, inv % 2 == 0 ? 1 : -1));
  return w;
}

PForm PForm::from_polynomial(const Polynomial& f) {
  PForm w(f.ring(), 0);
  w.add_term(0, f);
  return w;
}

Polynomial PForm::coefficient(std::uint32_t mask) const {
  auto it = c_.find(mask);
  return it == c_.end() ? Polynomial(ring_) : it->second;
}

Polynomial PForm::coefficient(const std::vector<int>& idx) const {
  std::uint32_t mask = 0;
  for (int i : idx) mask |= 1u << i;
  return coefficient(mask);
}

int PForm::total_degree() const {
  int d = -1;
  for (const auto& [mask, f] : c_) d = std::max(d, f.degree() + p_);
  return d;
}

bool PForm::is_homogeneous() const {
  int d = -2;
  for (const auto& [mask, f] : c_) {
    if (!f.is_homogeneous()) return false;
    if (d == -2)
      d = f.degree();
    else if (f.degree() != d)
      return false;
  }
  return true;
}

void PForm::add_term(std::uint32_t mask, const Polynomial& coef) {
  if (coef.is_zero()) return;
  if (popcount(mask) != p_) throw std::invalid_argument("add_term: wrong exterior degree");
  auto it = c_.find(mask);
  if (it == c_.end()) {
    c_.emplace(mask, coef);
  } else {
    it->second += coef;
    if (it->second.is_zero()) c_.erase(it);
  }
}

PForm PForm::operator-() const { return mul_scalar(Rational(-1)); }

PForm operator+(const PForm& a, const PForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!(a.ring_ == b.ring_) || a.p_ != b.p_)
    throw std::invalid_argument("form addition: mismatched forms");
  PForm r = a;
  for (const auto& [mask, f] : b.c_) r.add_term(mask, f);
  return r;
}

PForm operator-(const PForm& a, const PForm& b) { return a + (-b); }

bool operator==(const PForm& a, const PForm& b) {
  if (a.p_ != b.p_ && !a.is_zero() && !b.is_zero()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.c_.size() != b.c_.size()) return false;
  auto it = a.c_.begin();
  auto jt = b.c_.begin();
  for (; it != a.c_.end(); ++it, ++jt)
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  return true;
}

PForm PForm::mul_poly(const Polynomial& f) const {
  PForm r(ring_, p_);
  if (f.is_zero()) return r;
  for (const auto& [mask, g] : c_) r.add_term(mask, g * f);
  return r;
}

PForm PForm::mul_scalar(const Rational& c) const {
  PForm r(ring_, p_);
  if (c == 0) return r;
  for (const auto& [mask, g] : c_) r.add_term(mask, g.mul_scalar(c));
  return r;
}

std::string PForm::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, f] : c_) {
    for (const auto& t : f.terms()) {
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
      bool printed = false;
      if (c != 1 || (t.mono.is_one() && mask == 0)) {
        os << to_string(c);
        printed = true;
      }
      if (!t.mono.is_one()) {
        if (printed) os << "*";
        os << monomial_str(t.mono);
        printed = true;
      }
      if (mask != 0) {
        bool first_dx = true;
        for (int i : mask_indices(mask)) {
          os << (first_dx ? (printed ? "*" : "") : "^");
          os << "dx_" << i;
          first_dx = false;
          printed = true;
        }
      }
      first = false;
    }
  }
  return os.str();
}

VectorField VectorField::radial(const Ring& ring) {
  VectorField v{ring, {}};
  for (int i = 0; i < ring.nvars; ++i) v.coefficients.push_back(Polynomial::variable(ring, i));
  return v;
}

VectorField VectorField::basis(const Ring& ring, int j) {
  VectorField v{ring, std::vector<Polynomial>(ring.nvars, Polynomial(ring))};
  v.coefficients[j] = Polynomial::constant(ring, 1);
  return v;
}

PForm wedge(const PForm& a, const PForm& b) {
  if (!(a.ring() == b.ring()) && !a.is_zero() && !b.is_zero())
    throw std::invalid_argument("wedge: ring mismatch");
  PForm r(a.ring(), a.p() + b.p());
  if (a.p() + b.p() > a.ring().nvars) return r;
  for (const auto& [ma, fa] : a.coefficients())
    for (const auto& [mb, fb] : b.coefficients()) {
      if (ma & mb) continue;
      int sign = merge_sign(ma, mb);
      r.add_term(ma | mb, sign > 0 ? fa * fb : -(fa * fb));
    }
  return r;
}

PForm exterior_derivative(const PForm& w) {
  PForm r(w.ring(), w.p() + 1);
  if (w.p() + 1 > w.ring().nvars) return r;
  for (const auto& [mask, f] : w.coefficients()) {
    for (int i = 0; i < w.ring().nvars; ++i) {
      if (mask & (1u << i)) continue;
      Polynomial df = f.derivative(i);
      if (df.is_zero()) continue;
      int sign = merge_sign(1u << i, mask);
      r.add_term(mask | (1u << i), sign > 0 ? df : -df);
    }
  }
  return r;
}

PForm contract_basis(const PForm& w, int j) {
  PForm r(w.ring(), w.p() - 1);
  if (w.p() == 0) return PForm(w.ring(), 0);  // iota_v of a polynomial is 0
  for (const auto& [mask, f] : w.coefficients()) {
    std::uint32_t bit = 1u << j;
    if (!(mask & bit)) continue;
    int before = popcount(mask & (bit - 1));
    r.add_term(mask & ~bit, before % 2 == 0 ? f : -f);
  }
  return r;
}

PForm contract(const PForm& w, const VectorField& v) {
  if (w.p() == 0) return PForm(w.ring(), 0);
  PForm r(w.ring(), w.p() - 1);
  for (int j = 0; j < w.ring().nvars; ++j) {
    if (v.coefficients[j].is_zero()) continue;
    r += contract_basis(w, j).mul_poly(v.coefficients[j]);
  }
  return r;
}

PForm contract_multi(const PForm& w, const std::vector<int>& idx) {
  PForm r = w;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) r = contract_basis(r, *it);
  return r;
}

PForm contract_rad(const PForm& w) {
  if (w.p() == 0) return PForm(w.ring(), 0);
  PForm r(w.ring(), w.p() - 1);
  for (int j = 0; j < w.ring().nvars; ++j) {
    PForm cj = contract_basis(w, j);
    if (cj.is_zero()) continue;
    r += cj.mul_poly(Polynomial::variable(w.ring(), j));
  }
  return r;
}

bool descends(const PForm& w) { return contract_rad(w).is_zero(); }

PForm delta(const PForm& w) {
  if (w.is_zero()) return w;
  if (!w.is_homogeneous()) throw std::invalid_argument("delta: form must be homogeneous");
  int deg = w.total_degree();
  if (deg <= 0) throw std::domain_error("delta: undefined on forms of total degree 0");
  return exterior_derivative(w).mul_scalar(Rational(1, deg));
}

PForm nform_from_vfield(const VectorField& v) {
  const Ring& ring = v.ring;
  std::vector<int> all(ring.nvars);
  for (int i = 0; i < ring.nvars; ++i) all[i] = i;
  PForm vol = PForm::basis_form(ring, all);
  return contract_rad(contract(vol, v));
}

VectorField vfield_from_nform(const PForm& w) {
  const Ring& ring = w.ring();
  int n = ring.nvars - 1;
  if (w.p() != n - 1)
    throw std::invalid_argument("vfield_from_nform: expected an (n-1)-form");
  if (!w.is_homogeneous()) throw std::invalid_argument("vfield_from_nform: inhomogeneous");
  int d = w.total_degree() - w.p() - 1;  // coefficient degree = d+1
  PForm dw = exterior_derivative(w).mul_scalar(Rational(1, d + n));
  // dw/(d+n) = iota_v dx_0^...^dx_n: read v off the n-form coefficients
  VectorField v{ring, std::vector<Polynomial>(ring.nvars, Polynomial(ring))};
  std::uint32_t full = (1u << ring.nvars) - 1;
  for (int j = 0; j < ring.nvars; ++j) {
    // coefficient of iota_{d/dx_j} volume is (-1)^j on mask without j
    Polynomial cj = dw.coefficient(full & ~(1u << j));
    v.coefficients[j] = j % 2 == 0 ? cj : -cj;
  }
  return v;
}

FormMatrix::FormMatrix(Ring ring, int rows, int cols, int p)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), p_(p) {
  m_.assign(static_cast<std::size_t>(rows) * cols, PForm(ring_, p_));
}

FormMatrix FormMatrix::from_graded_map(const GradedMap& m) {
  FormMatrix f(m.ring(), m.rows(), m.cols(), 0);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.entry(r, c).is_zero()) f.set_entry(r, c, PForm::from_polynomial(m.entry(r, c)));
  return f;
}

void FormMatrix::set_entry(int r, int c, PForm f) {
  if (!f.is_zero() && f.p() != p_) throw std::invalid_argument("FormMatrix: degree mismatch");
  m_[static_cast<std::size_t>(r) * cols_ + c] = std::move(f);
}

bool FormMatrix::is_zero() const {
  for (const auto& e : m_)
    if (!e.is_zero()) return false;
  return true;
}

FormMatrix matrix_mul(const FormMatrix& a, const FormMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix_mul: shape mismatch");
  FormMatrix out(a.ring(), a.rows(), b.cols(), a.p() + b.p());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) {
      PForm s(a.ring(), a.p() + b.p());
      for (int k = 0; k < a.cols(); ++k) {
        if (a.entry(r, k).is_zero() || b.entry(k, c).is_zero()) continue;
        s += wedge(a.entry(r, k), b.entry(k, c));
      }
      out.set_entry(r, c, std::move(s));
    }
  return out;
}

FormMatrix matrix_delta(const FormMatrix& a) {
  FormMatrix out(a.ring(), a.rows(), a.cols(), a.p() + 1);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!a.entry(r, c).is_zero()) out.set_entry(r, c, delta(a.entry(r, c)));
  return out;
}

FormMatrix matrix_contract_rad(const FormMatrix& a) {
  FormMatrix out(a.ring(), a.rows(), a.cols(), a.p() - 1);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!a.entry(r, c).is_zero()) out.set_entry(r, c, contract_rad(a.entry(r, c)));
  return out;
}

std::vector<PForm> matrix_apply(const FormMatrix& a, const std::vector<Rational>& t) {
  if (static_cast<int>(t.size()) != a.cols())
    throw std::invalid_argument("matrix_apply: length mismatch");
  std::vector<PForm> out;
  out.reserve(a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    PForm s(a.ring(), a.p());
    for (int c = 0; c < a.cols(); ++c)
      if (t[c] != 0 && !a.entry(r, c).is_zero()) s += a.entry(r, c).mul_scalar(t[c]);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

using detail::Lexer;
using detail::TokKind;

class FormParser {
 public:
  FormParser(const std::string& text, const Ring& ring) : lex_(text), ring_(ring) {}

  PForm parse() {
    PForm acc(ring_, -1);
    bool have = false;
    bool neg = false;
    if (lex_.peek().kind == TokKind::Plus) lex_.next();
    else if (lex_.peek().kind == TokKind::Minus) { lex_.next(); neg = true; }
    for (;;) {
      PForm t = term();
      if (neg) t = -t;
      if (!have) {
        acc = t;
        have = true;
      } else {
        if (acc.is_zero()) acc = t;
        else if (!t.is_zero()) acc += t;
      }
      if (lex_.peek().kind == TokKind::Plus) { lex_.next(); neg = false; }
      else if (lex_.peek().kind == TokKind::Minus) { lex_.next(); neg = true; }
      else break;
    }
    if (lex_.peek().kind != TokKind::End)
      throw ParseError("trailing input after form expression", lex_.peek().pos);
    return acc;
  }

 private:
  PForm term() {
    Polynomial coef = Polynomial::constant(ring_, 1);
    std::vector<int> chain;
    bool saw_factor = false;
    for (;;) {
      const auto& tok = lex_.peek();
      if (tok.kind == TokKind::Dx) {
        chain.push_back(dx_index());
        while (lex_.peek().kind == TokKind::Caret) {
          lex_.next();
          if (lex_.peek().kind != TokKind::Dx)
            throw ParseError("expected dx after wedge '^'", lex_.peek().pos);
          chain.push_back(dx_index());
        }
      } else if (tok.kind == TokKind::Number || tok.kind == TokKind::Var ||
                 tok.kind == TokKind::LParen || tok.kind == TokKind::Minus) {
        coef *= poly_factor();
      } else {
        if (!saw_factor) throw ParseError("expected a form term", tok.pos);
        break;
      }
      saw_factor = true;
      if (lex_.peek().kind == TokKind::Star) {
        lex_.next();
        continue;
      }
      break;
    }
    PForm base = PForm::basis_form(ring_, chain);
    return base.mul_poly(coef);
  }

  int dx_index() {
    auto t = lex_.next();
    if (t.value >= ring_.nvars)
      throw ParseError("unknown differential dx_" + std::to_string(t.value), t.pos);
    return static_cast<int>(t.value);
  }

  Polynomial poly_factor() {
    const auto& tok = lex_.peek();
    switch (tok.kind) {
      case TokKind::Minus:
      case TokKind::Number: {
        bool neg = false;
        if (lex_.peek().kind == TokKind::Minus) {
          lex_.next();
          neg = true;
        }
        auto t = lex_.next();
        if (t.kind != TokKind::Number) throw ParseError("expected integer", t.pos);
        Rational q(t.value);
        if (lex_.peek().kind == TokKind::Slash) {
          lex_.next();
          auto d = lex_.next();
          if (d.kind != TokKind::Number || d.value == 0)
            throw ParseError("expected positive denominator", d.pos);
          q /= Rational(d.value);
        }
        return Polynomial::constant(ring_, neg ? Rational(-q) : q);
      }
      case TokKind::Var: {
        auto t = lex_.next();
        if (t.value >= ring_.nvars)
          throw ParseError("unknown variable x_" + std::to_string(t.value), t.pos);
        int power = 1;
        if (lex_.peek().kind == TokKind::Caret) {
          lex_.next();
          auto e = lex_.next();
          if (e.kind != TokKind::Number)
            throw ParseError("expected integer exponent", e.pos);
          power = static_cast<int>(e.value);
        }
        return Polynomial::from_term(
            ring_, Monomial::var(ring_.nvars, static_cast<int>(t.value), power), Rational(1));
      }
      case TokKind::LParen: {
        lex_.next();
        // a parenthesized polynomial subexpression
        Polynomial acc = poly_expr();
        auto t = lex_.next();
        if (t.kind != TokKind::RParen) throw ParseError("expected ')'", t.pos);
        return acc;
      }
      default:
        throw ParseError("expected a coefficient factor", tok.pos);
    }
  }

  Polynomial poly_expr() {
    bool neg = false;
    if (lex_.peek().kind == TokKind::Plus) lex_.next();
    else if (lex_.peek().kind == TokKind::Minus) { lex_.next(); neg = true; }
    Polynomial acc = poly_term();
    if (neg) acc = -acc;
    while (lex_.peek().kind == TokKind::Plus || lex_.peek().kind == TokKind::Minus) {
      bool minus = lex_.next().kind == TokKind::Minus;
      Polynomial t = poly_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial poly_term() {
    Polynomial acc = poly_factor();
    while (lex_.peek().kind == TokKind::Star) {
      lex_.next();
      acc *= poly_factor();
    }
    return acc;
  }

  Lexer lex_;
  const Ring& ring_;
};

}  // namespace

PForm parse_form(const std::string& text, const Ring& ring) {
  return FormParser(text, ring).parse();
}

std::vector<std::uint32_t> masks_of_weight(int nvars, int p) {
  std::vector<std::uint32_t> out;
  if (p < 0 || p > nvars) return out;
  for (std::uint32_t m = 0; m < (1u << nvars); ++m)
    if (popcount(m) == p) out.push_back(m);
  return out;
}

std::vector<int> mask_indices(std::uint32_t mask) {
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) idx.push_back(i);
  return idx;
}

std::vector<Rational> form_coefficient_vector(const PForm& w, int coeff_degree) {
  const Ring& ring = w.ring();
  auto masks = masks_of_weight(ring.nvars, w.p());
  auto monos = monomials_of_degree(ring, coeff_degree);
  std::vector<Rational> out;
  out.reserve(masks.size() * monos.size());
  for (auto mask : masks) {
    Polynomial f = w.coefficient(mask);
    if (!f.is_zero() && f.degree() != coeff_degree)
      throw std::invalid_argument("form_coefficient_vector: unexpected coefficient degree");
    for (const auto& m : monos) out.push_back(f.coefficient(m));
  }
  return out;
}

}  // namespace syzforms
