#include "syzforms/dist.hpp"

#include <stdexcept>

#include "syzforms/rng.hpp"

namespace syzforms {

namespace {

void require_descends(const PForm& w, const char* where) {
  if (!descends(w))
    throw std::invalid_argument(std::string(where) + ": form has nonzero radial contraction");
}

}  // namespace

bool lds_check(const PForm& w) {
  require_descends(w, "lds_check");
  const Ring& ring = w.ring();
  if (w.p() <= 1) return true;  // iota over Lambda^0 is the identity; w ^ w = 0
  for (auto mask : masks_of_weight(ring.nvars, w.p() - 1)) {
    PForm c = contract_multi(w, mask_indices(mask));
    if (!wedge(c, w).is_zero()) return false;
  }
  return true;
}

bool integrability_check(const PForm& w) {
  if (!lds_check(w))
    throw std::invalid_argument("integrability_check: form is not LDS");
  PForm dw = exterior_derivative(w);
  if (w.p() == 1) return wedge(w, dw).is_zero();
  for (auto mask : masks_of_weight(w.ring().nvars, w.p() - 1)) {
    PForm c = contract_multi(w, mask_indices(mask));
    if (!wedge(c, dw).is_zero()) return false;
  }
  return true;
}

Ideal coefficient_ideal(const PForm& w) {
  std::vector<Polynomial> gens;
  for (const auto& [mask, f] : w.coefficients()) gens.push_back(f);
  return Ideal(w.ring(), std::move(gens));
}

Ideal sing_scheme(const PForm& w) {
  require_descends(w, "sing_scheme");
  return saturate(coefficient_ideal(w));
}

std::pair<GradedMap, GradedMap> cw_complex(const PForm& w) {
  require_descends(w, "cw_complex");
  if (!w.is_homogeneous()) throw std::invalid_argument("cw_complex: inhomogeneous form");
  const Ring& ring = w.ring();
  int p = w.p();
  int d = w.total_degree() - p - 1;

  GradedFreeModule r0{{0}};
  GradedFreeModule f1;
  f1.twists.assign(ring.nvars, -1);
  GradedMap a(ring, f1, r0);
  for (int j = 0; j < ring.nvars; ++j) a.set_entry(j, 0, Polynomial::variable(ring, j));

  auto rows = masks_of_weight(ring.nvars, p - 1);
  GradedFreeModule f2;
  f2.twists.assign(rows.size(), -(d + 2));
  GradedMap b(ring, f2, f1);
  for (int j = 0; j < ring.nvars; ++j) {
    PForm cj = contract_basis(w, j);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Polynomial e = cj.coefficient(rows[r]);
      if (!e.is_zero()) b.set_entry(static_cast<int>(r), j, std::move(e));
    }
  }
  return {std::move(a), std::move(b)};
}

SheafPresentation::SheafPresentation(GradedMap pres) : pres_(minimal_presentation(pres)) {}

const FreeResolution& SheafPresentation::resolution() const {
  if (!res_) res_ = std::make_shared<const FreeResolution>(resolve_presentation(pres_));
  return *res_;
}

SheafPresentation SheafPresentation::twisted(int a) const {
  return SheafPresentation(pres_.twisted(a));
}

long SheafPresentation::rank() const {
  QPoly h = hilbert();
  int n = ring().nvars - 1;
  if (h.degree() < n) return 0;
  Rational fact(1);
  for (int i = 2; i <= n; ++i) fact *= i;
  Rational r = h.leading() * fact;
  if (!is_integer(r)) throw std::domain_error("rank: non-integral leading coefficient");
  return static_cast<long>(r.get_num().get_si());
}

SheafPresentation tangent_sheaf(const PForm& w) {
  if (!lds_check(w)) throw std::invalid_argument("tangent_sheaf: form is not LDS");
  auto [a, b] = cw_complex(w);
  return SheafPresentation(homology_presentation(a, b));
}

SheafPresentation normal_sheaf(const PForm& w) {
  if (!lds_check(w)) throw std::invalid_argument("normal_sheaf: form is not LDS");
  auto [a, b] = cw_complex(w);
  // image of b, presented on its source by the syzygies of its columns
  return SheafPresentation(syzygy_map(b));
}

SheafPresentation dual(const SheafPresentation& m) {
  GradedMap kernel_gens = syzygy_map(m.presentation().transpose());
  return SheafPresentation(syzygy_map(kernel_gens));
}

SheafPresentation conormal_sheaf(const PForm& w) { return dual(normal_sheaf(w)); }

ChernClasses chern_classes(const SheafPresentation& f) {
  if (f.ring().nvars != 4)
    throw std::invalid_argument("chern_classes: only implemented over P^3");
  QPoly h = f.hilbert();
  // chi(F(t)) = r/6 t^3 + (c1/2 + r) t^2 + ((c1^2-2c2)/2 + 2c1 + 11r/6) t
  //           + (c1^3-3c1c2+3c3)/6 + c1^2 - 2c2 + 11c1/6 + r
  Rational a3 = h.coeff(3), a2 = h.coeff(2), a1 = h.coeff(1), a0 = h.coeff(0);
  Rational r = 6 * a3;
  Rational c1 = 2 * (a2 - r);
  Rational c2 = c1 * c1 / 2 + 2 * c1 + Rational(11, 6) * r - a1;
  Rational c3 = 2 * a0 - 2 * c1 * c1 + 4 * c2 - Rational(11, 3) * c1 - 2 * r -
                c1 * c1 * c1 / 3 + c1 * c2;
  for (const Rational& v : {r, c1, c2, c3})
    if (!is_integer(v))
      throw std::domain_error("chern_classes: non-integral solution (not a sheaf?)");
  ChernClasses out;
  out.rank = static_cast<long>(r.get_num().get_si());
  out.c = {static_cast<long>(c1.get_num().get_si()), static_cast<long>(c2.get_num().get_si()),
           static_cast<long>(c3.get_num().get_si())};
  out.hilbert = h;
  return out;
}

long sheaf_cohomology_dim(const SheafPresentation& f, int i, int d) {
  int n = f.ring().nvars - 1;
  if (i < 0 || i > n) return 0;
  const FreeResolution& res = f.resolution();
  if (i == 0) {
    // graded piece of the saturation: dim M_d - h^0_m + h^1_m via duality
    long md = module_piece_dim(f.presentation(), d);
    long h0m = graded_ext_dim(res, n + 1, -d);
    long h1m = graded_ext_dim(res, n, -d);
    return md - h0m + h1m;
  }
  return graded_ext_dim(res, n - i, -d);
}

namespace {

Polynomial random_linear_form(const Ring& ring, SplitMix64& rng) {
  std::vector<Term> terms;
  for (int i = 0; i < ring.nvars; ++i) {
    long c = rng.uniform_int(-50, 50);
    if (c != 0) terms.push_back({Monomial::var(ring.nvars, i), Rational(c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

Ideal random_disjoint_lines(const Ring& ring, int k, std::uint64_t seed) {
  if (ring.nvars != 4)
    throw std::invalid_argument("random_disjoint_lines: ambient must be P^3");
  if (k < 1) throw std::invalid_argument("random_disjoint_lines: need k >= 1");
  SplitMix64 rng(seed);
  std::vector<Ideal> lines;
  int attempts = 0;
  while (static_cast<int>(lines.size()) < k) {
    if (++attempts > 200)
      throw std::runtime_error("random_disjoint_lines: retry budget exhausted");
    Polynomial l1 = random_linear_form(ring, rng);
    Polynomial l2 = random_linear_form(ring, rng);
    if (l1.is_zero() || l2.is_zero()) continue;
    Ideal line(ring, {l1, l2});
    if (graded_piece_dim(line, 1) != 2) continue;  // dependent forms
    bool disjoint = true;
    for (const auto& other : lines)
      if (!is_unit_ideal(saturate(ideal_sum(line, other)))) {
        disjoint = false;
        break;
      }
    if (!disjoint) continue;
    lines.push_back(std::move(line));
  }
  Ideal acc = lines.front();
  for (std::size_t i = 1; i < lines.size(); ++i) acc = ideal_intersect(acc, lines[i]);
  return acc;
}

PForm random_vanishing_form(const FormSpace& space, std::uint64_t seed) {
  if (space.basis.empty())
    throw std::domain_error("random_vanishing_form: the space is empty");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    PForm acc(space.basis.front().form.ring(), space.p);
    bool nonzero = false;
    for (const auto& e : space.basis) {
      long c = rng.uniform_int(-50, 50);
      if (c == 0) continue;
      acc += e.form.mul_scalar(Rational(c));
      nonzero = true;
    }
    if (nonzero && !acc.is_zero()) return acc;
  }
  throw std::runtime_error("random_vanishing_form: retry budget exhausted");
}

PForm random_vanishing_form(int p, int d, const Ideal& Z, std::uint64_t seed) {
  return random_vanishing_form(form_space(Z, p, d), seed);
}

}  // namespace syzforms
