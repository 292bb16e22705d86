#pragma once

#include <vector>

#include "syzforms/forms.hpp"
#include "syzforms/ideal.hpp"
#include "syzforms/resolution.hpp"

namespace syzforms {

// Basis of the degree-d piece of the space of p-forms vanishing on Z,
// split into the image of xi (indexed by syzygies) and products of ideal
// elements with radial contractions of constant (p+1)-forms.
struct FormSpace {
  enum class Provenance { XiImage, RadialPart, Solved };

  struct Element {
    PForm form;
    Provenance provenance;
  };

  int p = 0;
  int d = 0;
  std::vector<Element> basis;
  long tor_dim = 0;
  long radial_dim = 0;

  long dim() const { return static_cast<long>(basis.size()); }
  std::vector<PForm> forms() const;
};

// xi_p(t) = (phi_0 . delta phi_1 . ... . delta phi_p) . t, evaluated
// innermost-first. t is a coordinate vector on F_p supported in a single
// twist degree m; the result is a homogeneous p-form of total degree m with
// all coefficients in the ideal and zero radial contraction.
PForm xi(const FreeResolution& res, int p, const std::vector<Rational>& t);
PForm xi(const Ideal& I, int p, const std::vector<Rational>& t);

// Linear-strand shortcut phi_0^0 . d phi_1^0 ^ ... ^ d phi_p^0 . t, valid
// only when (I)_d = 0. t is indexed by the degree-(d+p+1) columns of F_p.
// Spans agree with xi; the vectors themselves differ by the factor p!
// coming from the omitted 1/deg normalizations.
PForm xi_linear_strand(const Ideal& I, const FreeResolution& res, int p, int d,
                       const std::vector<Rational>& t);

FormSpace form_space(const Ideal& I, int p, int d);
FormSpace form_space(const Ideal& I, const FreeResolution& res, int p, int d);

// Independent oracle: one exact linear system on the coefficients, with the
// radial-contraction and ideal-membership conditions as rows.
FormSpace brute_force_space(const Ideal& I, int p, int d);

// Verifies f*xi_p(t) = phi_0 . iota_rad(delta f ^ delta(phi_1 . ...) . t)
// exactly, for homogeneous nonconstant f.
bool radial_decomposition_check(const FreeResolution& res, int p,
                                const std::vector<Rational>& t, const Polynomial& f);

// Coefficient vectors of a set of forms on the common (mask, monomial) basis.
std::vector<std::vector<Rational>> forms_to_vectors(const std::vector<PForm>& forms,
                                                    int coeff_degree);

}  // namespace syzforms
