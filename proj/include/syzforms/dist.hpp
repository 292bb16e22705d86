#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <utility>

#include "syzforms/form_space.hpp"
#include "syzforms/forms.hpp"
#include "syzforms/ideal.hpp"
#include "syzforms/resolution.hpp"

namespace syzforms {

// Locally decomposable off the singular set: (iota_v w) ^ w = 0 for every
// basis multivector v of degree p-1.
bool lds_check(const PForm& w);
// Frobenius condition (iota_v w) ^ dw = 0; only meaningful for LDS forms.
bool integrability_check(const PForm& w);

// Saturation of the ideal generated by the coefficients of w.
Ideal sing_scheme(const PForm& w);
// Unsaturated coefficient ideal.
Ideal coefficient_ideal(const PForm& w);

// The complex O -> O(1) (x) V -> O(d+2) (x) Wedge^{p-1} V*; first map is the
// radial column, second has column j = coefficients of iota_{d/dx_j} w.
std::pair<GradedMap, GradedMap> cw_complex(const PForm& w);

// Finitely presented graded module standing for a coherent sheaf; the
// presentation is minimalized on construction, the resolution cached.
class SheafPresentation {
 public:
  explicit SheafPresentation(GradedMap pres);

  const GradedMap& presentation() const { return pres_; }
  const FreeResolution& resolution() const;
  const Ring& ring() const { return pres_.ring(); }

  SheafPresentation twisted(int a) const;
  bool is_zero() const { return pres_.target().rank() == 0; }

  QPoly hilbert() const { return hilbert_polynomial(resolution()); }
  // Rank of the sheaf on P^n: n! times the leading Hilbert coefficient when
  // the Hilbert polynomial has full degree, otherwise 0.
  long rank() const;

 private:
  GradedMap pres_;
  mutable std::shared_ptr<const FreeResolution> res_;
};

SheafPresentation tangent_sheaf(const PForm& w);
SheafPresentation normal_sheaf(const PForm& w);
SheafPresentation conormal_sheaf(const PForm& w);
// Hom(M, R) via the kernel of the transposed presentation.
SheafPresentation dual(const SheafPresentation& m);

struct ChernClasses {
  long rank;
  std::array<long, 3> c;
  QPoly hilbert;
};

// Chern classes on P^3 by matching the Hilbert polynomial against
// Riemann-Roch; exact, integrality enforced.
ChernClasses chern_classes(const SheafPresentation& f);

// h^i(F(d)) on P^n: graded dual Ext for i >= 1, saturated graded piece for
// i = 0.
long sheaf_cohomology_dim(const SheafPresentation& f, int i, int d);

// Intersection of k ideals of random disjoint lines in P^3, pairwise
// disjointness certified by saturate(L_i + L_j) = (1). Deterministic per seed.
Ideal random_disjoint_lines(const Ring& ring, int k, std::uint64_t seed);

// Random small-integer combination of a basis of the degree-d vanishing
// p-forms on Z. Deterministic per seed; throws when the space is empty.
PForm random_vanishing_form(int p, int d, const Ideal& Z, std::uint64_t seed);
PForm random_vanishing_form(const FormSpace& space, std::uint64_t seed);

}  // namespace syzforms
