#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "syzforms/ideal.hpp"
#include "syzforms/parser.hpp"

namespace syzforms {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw std::invalid_argument("Ideal: generator ring mismatch");
    if (!g.is_homogeneous())
      throw std::invalid_argument("Ideal: non-homogeneous generator: " + g.str());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  if (!gb_) gb_ = std::make_shared<const std::vector<Polynomial>>(buchberger(ring_, gens_));
  return *gb_;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
  Polynomial work = f;
  std::vector<Term> remainder;  // collected in descending order
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.leading_term().mono, lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      const Term& lg = divisor->leading_term();
      work -= divisor->mul_term(lt.mono / lg.mono, lt.coef / lg.coef);
    } else {
      remainder.push_back(lt);
      work = work.drop_leading_term();
    }
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(remainder));
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  Monomial l = lcm(lf.mono, lg.mono);
  return f.mul_term(l / lf.mono, 1 / lf.coef) - g.mul_term(l / lg.mono, 1 / lg.coef);
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm_;
  int degree;
};

bool pair_less(const MonomialOrder& ord, const Pair& a, const Pair& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  auto c = compare(ord, a.lcm_, b.lcm_);
  if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

// Reduced basis from any GB: minimal leads, tails fully reduced, monic,
// sorted ascending by leading monomial.
std::vector<Polynomial> autoreduce(const Ring& ring, std::vector<Polynomial> basis) {
  std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
  std::sort(basis.begin(), basis.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return compare(ring.order, a.leading_term().mono, b.leading_term().mono) ==
           std::strong_ordering::less;
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (divides(h.leading_term().mono, g.leading_term().mono)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    Polynomial r = reduce(minimal[k], others);
    out.push_back(r.mul_scalar(1 / r.leading_term().coef));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> buchberger(const Ring& ring, std::vector<Polynomial> gens) {
  std::vector<Polynomial> basis;
  for (auto& g : gens) {
    if (!(g.ring() == ring)) throw std::invalid_argument("buchberger: ring mismatch");
    if (!g.is_zero()) basis.push_back(g.mul_scalar(1 / g.leading_term().coef));
  }

  std::vector<Pair> pairs;
  auto add_element_pairs = [&](std::size_t t) {
    const Monomial& lt = basis[t].leading_term().mono;
    // candidate pairs (i, t) with Gebauer-Moller pruning
    std::vector<Pair> cand;
    for (std::size_t i = 0; i < t; ++i) {
      Monomial l = lcm(basis[i].leading_term().mono, lt);
      cand.push_back({i, t, l, l.degree()});
    }
    // M: drop (i,t) when some (j,t) has a strictly smaller lcm dividing it
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[a] || !keep[b]) continue;
        if (!(cand[b].lcm_ == cand[a].lcm_) && divides(cand[b].lcm_, cand[a].lcm_))
          keep[a] = false;
      }
    // F: among equal lcms keep the lowest index
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = 0; b < a; ++b) {
        if (!keep[a] || !keep[b]) continue;
        if (cand[a].lcm_ == cand[b].lcm_) keep[a] = false;
      }
    // Buchberger's product criterion
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (keep[a] &&
          coprime(basis[cand[a].i].leading_term().mono, lt))
        keep[a] = false;
    // B: prune old pairs strictly dominated by the new element
    std::erase_if(pairs, [&](const Pair& p) {
      if (!divides(lt, p.lcm_)) return false;
      Monomial li = lcm(basis[p.i].leading_term().mono, lt);
      Monomial lj = lcm(basis[p.j].leading_term().mono, lt);
      return !(li == p.lcm_) && !(lj == p.lcm_);
    });
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (keep[a]) pairs.push_back(cand[a]);
  };

  for (std::size_t t = 1; t < basis.size(); ++t) add_element_pairs(t);

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pair_less(ring.order, pairs[k], pairs[best])) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + best);

    Polynomial s = reduce(spoly(basis[p.i], basis[p.j]), basis);
    if (s.is_zero()) continue;
    basis.push_back(s.mul_scalar(1 / s.leading_term().coef));
    add_element_pairs(basis.size() - 1);
  }

  return autoreduce(ring, std::move(basis));
}

bool buchberger_criterion_holds(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(spoly(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  if (!(f.ring() == I.ring())) throw std::invalid_argument("normal_form: ring mismatch");
  return reduce(f, I.groebner_basis());
}

bool contains(const Ideal& I, const Polynomial& f) { return normal_form(f, I).is_zero(); }

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

namespace {

// Lift f from R into R[t] (t appended as the last variable).
Polynomial extend_poly(const Polynomial& f, const Ring& bigger) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Term s = t;
    s.mono.nv = bigger.nvars;
    terms.push_back(std::move(s));
  }
  return Polynomial::from_terms(bigger, std::move(terms));
}

// Drop the last variable; caller guarantees it does not occur.
Polynomial restrict_poly(const Polynomial& f, const Ring& smaller) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Term s = t;
    s.mono.nv = smaller.nvars;
    terms.push_back(std::move(s));
  }
  return Polynomial::from_terms(smaller, std::move(terms));
}

bool uses_last_var(const Polynomial& f) {
  for (const auto& t : f.terms())
    if (t.mono.e[t.mono.nv - 1] != 0) return true;
  return false;
}

}  // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw std::invalid_argument("ideal_intersect: ring mismatch");
  const Ring& ring = I.ring();
  if (I.generators().empty() || J.generators().empty()) return Ideal(ring, {});

  Ring big = ring;
  big.nvars += 1;
  big.order.kind = OrderKind::ElimLast;
  big.order.perm.clear();
  if (big.nvars > kMaxVars) throw std::invalid_argument("ideal_intersect: too many variables");

  Polynomial t = Polynomial::variable(big, big.nvars - 1);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * extend_poly(f, big));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * extend_poly(g, big));

  std::vector<Polynomial> gb = buchberger(big, std::move(gens));
  std::vector<Polynomial> out;
  for (const auto& g : gb)
    if (!uses_last_var(g)) out.push_back(restrict_poly(g, ring));
  return Ideal(ring, std::move(out));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
  if (!(f.ring() == I.ring())) throw std::invalid_argument("ideal_quotient: ring mismatch");
  if (f.is_zero()) return unit_ideal(I.ring());
  if (f.is_constant()) return I;
  if (!f.is_homogeneous())
    throw std::invalid_argument("ideal_quotient: non-homogeneous divisor");
  Ideal fI(I.ring(), {f});
  Ideal inter = ideal_intersect(I, fI);
  std::vector<Polynomial> gens;
  for (const auto& g : inter.generators()) gens.push_back(Polynomial::exact_divide(g, f));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  if (J.generators().empty()) return unit_ideal(I.ring());
  Ideal acc = ideal_quotient(I, J.generators().front());
  for (std::size_t k = 1; k < J.generators().size(); ++k)
    acc = ideal_intersect(acc, ideal_quotient(I, J.generators()[k]));
  return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (;;) {
    Ideal next = ideal_quotient(cur, J);
    if (ideal_equal(next, cur)) return cur;
    cur = next;
  }
}

Ideal saturate(const Ideal& I) { return saturate(I, irrelevant_ideal(I.ring())); }

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) return false;
  const auto& a = I.groebner_basis();
  const auto& b = J.groebner_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

bool is_unit_ideal(const Ideal& I) {
  const auto& gb = I.groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool is_zero_ideal(const Ideal& I) { return I.groebner_basis().empty(); }

Ideal irrelevant_ideal(const Ring& ring) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < ring.nvars; ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal unit_ideal(const Ring& ring) {
  return Ideal(ring, {Polynomial::constant(ring, 1)});
}

long graded_piece_dim(const Ideal& I, int d) {
  if (d < 0) return 0;
  const auto& gb = I.groebner_basis();
  long count = 0;
  for (const auto& m : monomials_of_degree(I.ring(), d))
    for (const auto& g : gb)
      if (divides(g.leading_term().mono, m)) {
        ++count;
        break;
      }
  return count;
}

std::vector<Polynomial> graded_piece_basis(const Ideal& I, int d) {
  std::vector<Polynomial> out;
  if (d < 0) return out;
  const auto& gb = I.groebner_basis();
  for (const auto& m : monomials_of_degree(I.ring(), d)) {
    bool in_initial = false;
    for (const auto& g : gb)
      if (divides(g.leading_term().mono, m)) {
        in_initial = true;
        break;
      }
    if (!in_initial) continue;
    Polynomial um = Polynomial::from_term(I.ring(), m, Rational(1));
    out.push_back(um - reduce(um, gb));
  }
  return out;
}

Ideal with_order(const Ideal& I, OrderKind kind) {
  Ring ring = I.ring();
  ring.order.kind = kind;
  ring.order.perm.clear();
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.with_ring(ring));
  return Ideal(ring, std::move(gens));
}

Ideal parse_ideal_file(std::istream& in, OrderKind kind) {
  std::string line;
  int nvars = -1;
  std::vector<std::string> exprs;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.rfind("vars:", 0) == 0) {
      nvars = std::stoi(line.substr(5));
      continue;
    }
    exprs.push_back(line);
  }
  if (nvars < 1) throw std::invalid_argument("ideal file: missing 'vars: n' header");
  Ring ring = make_ring(nvars, kind);
  std::vector<Polynomial> gens;
  for (const auto& e : exprs) gens.push_back(parse_poly(e, ring));
  return Ideal(ring, std::move(gens));
}

Ideal parse_ideal_text(const std::string& text, OrderKind kind) {
  std::istringstream in(text);
  return parse_ideal_file(in, kind);
}

std::string ideal_file_text(const Ideal& I) {
  std::ostringstream os;
  os << "vars: " << I.ring().nvars << "\n";
  for (const auto& g : I.generators()) os << g.str() << "\n";
  return os.str();
}

}  // namespace syzforms
