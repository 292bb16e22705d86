#pragma once

#include <vector>

#include "syzforms/polynomial.hpp"

namespace syzforms {

// Term of an element of a free module R^k: coef * mono * e_comp.
struct ModTerm {
  Monomial mono;
  int comp = 0;
  Rational coef;
};

// Element of a free module. Terms sorted descending under the module order:
// ring order on monomials, ties broken toward the lower component.
struct ModPoly {
  std::vector<ModTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const ModTerm& lead() const;
};

std::strong_ordering mod_compare(const MonomialOrder& ord, const ModTerm& a, const ModTerm& b);

ModPoly mod_from_terms(const Ring& ring, std::vector<ModTerm> terms);
ModPoly mod_add(const Ring& ring, const ModPoly& a, const ModPoly& b);
ModPoly mod_mul_term(const ModPoly& a, const Monomial& m, const Rational& c);
ModPoly mod_from_column(const Ring& ring, const std::vector<Polynomial>& column);
std::vector<Polynomial> mod_to_column(const Ring& ring, const ModPoly& v, int rank);

// Groebner basis of the submodule generated by `gens`, with every basis
// element tracked as an explicit combination of the input generators.
// When syzygy collection is on, S-pairs that reduce to zero are emitted as
// relations among the generators; by Schreyer's theorem these generate the
// whole syzygy module.
struct ModuleGB {
  std::vector<ModPoly> basis;
  std::vector<std::vector<Polynomial>> cofactors;  // basis[k] == sum cofactors[k][c]*gens[c]
  std::vector<std::vector<Polynomial>> syzygies;   // each: sum v[c]*gens[c] == 0
};

enum class PairStrategy { Normal, Reverse };

ModuleGB module_groebner(const Ring& ring, const std::vector<ModPoly>& gens,
                         bool collect_syzygies,
                         PairStrategy strategy = PairStrategy::Normal);

// Express each element of `targets` over `gens`: targets[t] = sum L[t][c]*gens[c].
// Throws when an element does not lie in the submodule.
std::vector<std::vector<Polynomial>> module_lift(const Ring& ring,
                                                 const std::vector<ModPoly>& gens,
                                                 const std::vector<ModPoly>& targets);

}  // namespace syzforms
