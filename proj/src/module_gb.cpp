#include "syzforms/module_gb.hpp"

#include <algorithm>
#include <stdexcept>

namespace syzforms {

const ModTerm& ModPoly::lead() const {
  if (terms.empty()) throw std::domain_error("lead of zero module element");
  return terms.front();
}

std::strong_ordering mod_compare(const MonomialOrder& ord, const ModTerm& a, const ModTerm& b) {
  auto c = compare(ord, a.mono, b.mono);
  if (c != std::strong_ordering::equal) return c;
  return b.comp <=> a.comp;  // lower component ranks higher
}

ModPoly mod_from_terms(const Ring& ring, std::vector<ModTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&ring](const ModTerm& a, const ModTerm& b) {
    return mod_compare(ring.order, a, b) == std::strong_ordering::greater;
  });
  ModPoly p;
  for (auto& t : terms) {
    if (!p.terms.empty() && p.terms.back().mono == t.mono && p.terms.back().comp == t.comp) {
      p.terms.back().coef += t.coef;
      if (p.terms.back().coef == 0) p.terms.pop_back();
    } else if (t.coef != 0) {
      p.terms.push_back(std::move(t));
    }
  }
  return p;
}

ModPoly mod_add(const Ring& ring, const ModPoly& a, const ModPoly& b) {
  ModPoly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    auto c = mod_compare(ring.order, a.terms[i], b.terms[j]);
    if (c == std::strong_ordering::greater) {
      r.terms.push_back(a.terms[i++]);
    } else if (c == std::strong_ordering::less) {
      r.terms.push_back(b.terms[j++]);
    } else {
      Rational s = a.terms[i].coef + b.terms[j].coef;
      if (s != 0) {
        ModTerm t = a.terms[i];
        t.coef = std::move(s);
        r.terms.push_back(std::move(t));
      }
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

ModPoly mod_mul_term(const ModPoly& a, const Monomial& m, const Rational& c) {
  ModPoly r;
  if (c == 0) return r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back({t.mono * m, t.comp, t.coef * c});
  return r;
}

ModPoly mod_from_column(const Ring& ring, const std::vector<Polynomial>& column) {
  std::vector<ModTerm> terms;
  for (std::size_t comp = 0; comp < column.size(); ++comp)
    for (const auto& t : column[comp].terms())
      terms.push_back({t.mono, static_cast<int>(comp), t.coef});
  return mod_from_terms(ring, std::move(terms));
}

std::vector<Polynomial> mod_to_column(const Ring& ring, const ModPoly& v, int rank) {
  std::vector<std::vector<Term>> split(rank);
  for (const auto& t : v.terms) {
    if (t.comp < 0 || t.comp >= rank) throw std::out_of_range("mod_to_column: component");
    split[t.comp].push_back({t.mono, t.coef});
  }
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& terms : split) out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  return out;
}

namespace {

struct TrackedElem {
  ModPoly value;
  std::vector<Polynomial> track;  // over the original generators
};

struct ModPair {
  std::size_t i, j;
  Monomial lcm_;
  int comp;
  int degree;
};

bool mod_pair_less(const MonomialOrder& ord, const ModPair& a, const ModPair& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  auto c = compare(ord, a.lcm_, b.lcm_);
  if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  if (a.comp != b.comp) return a.comp < b.comp;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

// Fully reduce elem.value against the basis, updating elem.track so that
// value == sum track[c]*gens[c] stays true throughout.
void reduce_tracked(const Ring& ring, TrackedElem& elem, const std::vector<TrackedElem>& basis) {
  ModPoly work = std::move(elem.value);
  std::vector<ModTerm> remainder;
  while (!work.is_zero()) {
    const ModTerm& lt = work.terms.front();
    const TrackedElem* divisor = nullptr;
    for (const auto& b : basis) {
      if (b.value.is_zero()) continue;
      const ModTerm& lb = b.value.lead();
      if (lb.comp == lt.comp && divides(lb.mono, lt.mono)) {
        divisor = &b;
        break;
      }
    }
    if (divisor) {
      const ModTerm& lb = divisor->value.lead();
      Monomial q = lt.mono / lb.mono;
      Rational c = lt.coef / lb.coef;
      work = mod_add(ring, work, mod_mul_term(divisor->value, q, -c));
      for (std::size_t k = 0; k < elem.track.size(); ++k)
        if (!divisor->track[k].is_zero())
          elem.track[k] -= divisor->track[k].mul_term(q, c);
    } else {
      remainder.push_back(lt);
      work.terms.erase(work.terms.begin());
    }
  }
  ModPoly rem;
  rem.terms = std::move(remainder);
  elem.value = std::move(rem);
}

}  // namespace

ModuleGB module_groebner(const Ring& ring, const std::vector<ModPoly>& gens,
                         bool collect_syzygies, PairStrategy strategy) {
  ModuleGB out;
  std::vector<TrackedElem> basis;
  const std::size_t n = gens.size();

  auto unit_track = [&](std::size_t c) {
    std::vector<Polynomial> tr(n, Polynomial(ring));
    tr[c] = Polynomial::constant(ring, 1);
    return tr;
  };

  for (std::size_t c = 0; c < n; ++c) {
    if (gens[c].is_zero()) {
      // a zero generator is its own relation
      if (collect_syzygies) out.syzygies.push_back(unit_track(c));
      continue;
    }
    basis.push_back({gens[c], unit_track(c)});
  }

  std::vector<ModPair> pairs;
  auto add_element_pairs = [&](std::size_t t) {
    const ModTerm& lt = basis[t].value.lead();
    std::vector<ModPair> cand;
    for (std::size_t i = 0; i < t; ++i) {
      const ModTerm& li = basis[i].value.lead();
      if (li.comp != lt.comp) continue;
      Monomial l = lcm(li.mono, lt.mono);
      cand.push_back({i, t, l, lt.comp, l.degree()});
    }
    std::vector<bool> keep(cand.size(), true);
    // M criterion
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[a] || !keep[b]) continue;
        if (!(cand[b].lcm_ == cand[a].lcm_) && divides(cand[b].lcm_, cand[a].lcm_))
          keep[a] = false;
      }
    // F criterion
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = 0; b < a; ++b) {
        if (!keep[a] || !keep[b]) continue;
        if (cand[a].lcm_ == cand[b].lcm_) keep[a] = false;
      }
    // B criterion against older pairs
    std::erase_if(pairs, [&](const ModPair& p) {
      if (p.comp != lt.comp || !divides(lt.mono, p.lcm_)) return false;
      Monomial li = lcm(basis[p.i].value.lead().mono, lt.mono);
      Monomial lj = lcm(basis[p.j].value.lead().mono, lt.mono);
      return !(li == p.lcm_) && !(lj == p.lcm_);
    });
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (keep[a]) pairs.push_back(cand[a]);
  };

  for (std::size_t t = 1; t < basis.size(); ++t) add_element_pairs(t);

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      bool better = mod_pair_less(ring.order, pairs[k], pairs[best]);
      if (strategy == PairStrategy::Reverse)
        better = mod_pair_less(ring.order, pairs[best], pairs[k]);
      if (better) best = k;
    }
    ModPair p = pairs[best];
    pairs.erase(pairs.begin() + best);

    const TrackedElem& fi = basis[p.i];
    const TrackedElem& fj = basis[p.j];
    const ModTerm& li = fi.value.lead();
    const ModTerm& lj = fj.value.lead();
    Monomial mi = p.lcm_ / li.mono;
    Monomial mj = p.lcm_ / lj.mono;

    TrackedElem s;
    s.value = mod_add(ring, mod_mul_term(fi.value, mi, 1 / li.coef),
                      mod_mul_term(fj.value, mj, Rational(-1) / lj.coef));
    s.track.assign(n, Polynomial(ring));
    for (std::size_t k = 0; k < n; ++k) {
      if (!fi.track[k].is_zero()) s.track[k] += fi.track[k].mul_term(mi, 1 / li.coef);
      if (!fj.track[k].is_zero()) s.track[k] -= fj.track[k].mul_term(mj, 1 / lj.coef);
    }
    reduce_tracked(ring, s, basis);
    if (s.value.is_zero()) {
      if (collect_syzygies) {
        bool trivial = true;
        for (const auto& q : s.track)
          if (!q.is_zero()) trivial = false;
        if (!trivial) out.syzygies.push_back(std::move(s.track));
      }
      continue;
    }
    basis.push_back(std::move(s));
    add_element_pairs(basis.size() - 1);
  }

  for (auto& b : basis) {
    out.basis.push_back(std::move(b.value));
    out.cofactors.push_back(std::move(b.track));
  }
  return out;
}

std::vector<std::vector<Polynomial>> module_lift(const Ring& ring,
                                                 const std::vector<ModPoly>& gens,
                                                 const std::vector<ModPoly>& targets) {
  ModuleGB gb = module_groebner(ring, gens, /*collect_syzygies=*/false);
  std::vector<TrackedElem> basis;
  for (std::size_t k = 0; k < gb.basis.size(); ++k) basis.push_back({gb.basis[k], gb.cofactors[k]});

  std::vector<std::vector<Polynomial>> lifted;
  for (const auto& target : targets) {
    TrackedElem e;
    e.value = target;
    e.track.assign(gens.size(), Polynomial(ring));
    reduce_tracked(ring, e, basis);
    if (!e.value.is_zero())
      throw std::domain_error("module_lift: element not in the submodule");
    // target - sum track = 0 with track accumulated negatively; negate back
    for (auto& q : e.track) q = -q;
    lifted.push_back(std::move(e.track));
  }
  return lifted;
}

}  // namespace syzforms
