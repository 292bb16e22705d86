#include "syzforms/form_space.hpp"

#include <climits>
#include <stdexcept>

namespace syzforms {

std::vector<PForm> FormSpace::forms() const {
  std::vector<PForm> out;
  out.reserve(basis.size());
  for (const auto& e : basis) out.push_back(e.form);
  return out;
}

namespace {

// Inner matrix delta(phi_1 . delta(phi_2 . ... . delta phi_p)) of p-form
// entries; xi_p(t) = phi_0 . X . t.
FormMatrix xi_inner_matrix(const FreeResolution& res, int p) {
  FormMatrix x = matrix_delta(FormMatrix::from_graded_map(res.phi(p)));
  for (int j = p - 1; j >= 1; --j)
    x = matrix_delta(matrix_mul(FormMatrix::from_graded_map(res.phi(j)), x));
  return x;
}

void check_tor_vector(const FreeResolution& res, int p, const std::vector<Rational>& t) {
  const auto& twists = res.module(p).twists;
  if (t.size() != twists.size())
    throw std::invalid_argument("xi: coordinate vector has wrong length");
  int deg = INT_MIN;
  for (std::size_t c = 0; c < t.size(); ++c) {
    if (t[c] == 0) continue;
    if (deg == INT_MIN)
      deg = twists[c];
    else if (twists[c] != deg)
      throw std::invalid_argument("xi: coordinate vector mixes Tor degrees");
  }
}

PForm row_times_column(const GradedMap& row, const std::vector<PForm>& col, int p) {
  PForm out(row.ring(), p);
  for (int k = 0; k < row.cols(); ++k) {
    if (row.entry(0, k).is_zero() || col[k].is_zero()) continue;
    out += col[k].mul_poly(row.entry(0, k));
  }
  return out;
}

}  // namespace

PForm xi(const FreeResolution& res, int p, const std::vector<Rational>& t) {
  if (p < 0) throw std::invalid_argument("xi: negative exterior degree");
  if (!res.gens) throw std::invalid_argument("xi: needs an ideal resolution");
  if (p > res.length()) {
    if (!t.empty()) throw std::invalid_argument("xi: no Tor in this degree");
    return PForm(res.ring, p);
  }
  check_tor_vector(res, p, t);
  if (p == 0) {
    // phi_0 . t is a polynomial: a 0-form
    Polynomial s(res.ring);
    for (int k = 0; k < res.gens->cols(); ++k)
      if (t[k] != 0) s += res.gens->entry(0, k).mul_scalar(t[k]);
    return PForm::from_polynomial(s);
  }
  FormMatrix x = xi_inner_matrix(res, p);
  std::vector<PForm> col = matrix_apply(x, t);
  return row_times_column(*res.gens, col, p);
}

PForm xi(const Ideal& I, int p, const std::vector<Rational>& t) {
  return xi(free_resolution(I), p, t);
}

PForm xi_linear_strand(const Ideal& I, const FreeResolution& res, int p, int d,
                       const std::vector<Rational>& t) {
  if (graded_piece_dim(I, d) != 0)
    throw std::invalid_argument("xi_linear_strand: (I)_d != 0, shortcut invalid");
  if (p < 1) throw std::invalid_argument("xi_linear_strand: p must be >= 1");

  // strand columns: twist j + d + 1 at homological position j
  std::vector<std::vector<int>> strand(p + 1);
  for (int j = 0; j <= p && j <= res.length(); ++j) {
    const auto& tw = res.module(j).twists;
    for (std::size_t c = 0; c < tw.size(); ++c)
      if (tw[c] == j + d + 1) strand[j].push_back(static_cast<int>(c));
  }
  if (t.size() != strand[p].size())
    throw std::invalid_argument("xi_linear_strand: wrong coordinate length");

  const Ring& ring = res.ring;
  // product d(phi_1^0) ^ ... ^ d(phi_p^0), built outermost-first
  FormMatrix prod;
  bool have = false;
  for (int j = 1; j <= p; ++j) {
    if (j > res.length() || strand[j].empty() || strand[j - 1].empty())
      return PForm(ring, p);  // empty strand: zero
    const GradedMap& phi = res.phi(j);
    FormMatrix dblock(ring, static_cast<int>(strand[j - 1].size()),
                      static_cast<int>(strand[j].size()), 1);
    for (std::size_t r = 0; r < strand[j - 1].size(); ++r)
      for (std::size_t c = 0; c < strand[j].size(); ++c) {
        const Polynomial& e = phi.entry(strand[j - 1][r], strand[j][c]);
        if (e.is_zero()) continue;
        dblock.set_entry(static_cast<int>(r), static_cast<int>(c),
                         exterior_derivative(PForm::from_polynomial(e)));
      }
    prod = have ? matrix_mul(prod, dblock) : dblock;
    have = true;
  }
  std::vector<PForm> col = matrix_apply(prod, t);
  PForm out(ring, p);
  for (std::size_t r = 0; r < strand[0].size(); ++r) {
    const Polynomial& g = res.gens->entry(0, strand[0][r]);
    if (!g.is_zero() && !col[r].is_zero()) out += col[r].mul_poly(g);
  }
  return out;
}

FormSpace form_space(const Ideal& I, int p, int d) {
  return form_space(I, free_resolution(I), p, d);
}

FormSpace form_space(const Ideal& I, const FreeResolution& res, int p, int d) {
  const Ring& ring = I.ring();
  FormSpace out;
  out.p = p;
  out.d = d;

  // radial part: F * iota_rad(eta) for F in a basis of (I)_d and eta a
  // constant (p+1)-form; reduced to an independent spanning subset
  std::vector<std::vector<Rational>> kept_vectors;
  for (const auto& f : graded_piece_basis(I, d)) {
    for (auto mask : masks_of_weight(ring.nvars, p + 1)) {
      PForm eta(ring, p + 1);
      eta.add_term(mask, Polynomial::constant(ring, 1));
      PForm cand = contract_rad(eta).mul_poly(f);
      if (cand.is_zero()) continue;
      auto vec = form_coefficient_vector(cand, d + 1);
      if (in_span(kept_vectors, vec)) continue;
      kept_vectors.push_back(std::move(vec));
      out.basis.push_back({std::move(cand), FormSpace::Provenance::RadialPart});
    }
  }
  out.radial_dim = static_cast<long>(out.basis.size());

  for (const auto& t : tor_basis(res, p, d + p + 1)) {
    PForm w = xi(res, p, t);
    out.basis.push_back({std::move(w), FormSpace::Provenance::XiImage});
    ++out.tor_dim;
  }
  return out;
}

FormSpace brute_force_space(const Ideal& I, int p, int d) {
  const Ring& ring = I.ring();
  FormSpace out;
  out.p = p;
  out.d = d;
  if (p < 0 || p > ring.nvars - 1 || d < 0) return out;

  auto masks = masks_of_weight(ring.nvars, p);
  auto monos = monomials_of_degree(ring, d + 1);
  const std::size_t block = monos.size();
  const std::size_t ncols = masks.size() * block;
  if (ncols == 0) return out;

  QMatrix sys(0, ncols);

  // radial-contraction rows: for each (p-1)-mask S and monomial of degree
  // d+2, the coefficient of iota_rad(omega) vanishes
  auto sub_masks = masks_of_weight(ring.nvars, p - 1);
  auto monos2 = monomials_of_degree(ring, d + 2);
  for (auto s : sub_masks) {
    QMatrix rows(monos2.size(), ncols);
    bool nonzero = false;
    for (std::size_t ti = 0; ti < masks.size(); ++ti) {
      std::uint32_t tmask = masks[ti];
      for (int j = 0; j < ring.nvars; ++j) {
        std::uint32_t bit = 1u << j;
        if ((tmask & bit) == 0 || (tmask & ~bit) != s) continue;
        // coefficient of dx_S in iota_rad of A_T dx_T picks x_j with the
        // parity of j's position inside T
        int before = 0;
        for (int i = 0; i < j; ++i)
          if (tmask & (1u << i)) ++before;
        int sign = before % 2 == 0 ? 1 : -1;
        for (std::size_t mi = 0; mi < block; ++mi) {
          Monomial prod = monos[mi] * Monomial::var(ring.nvars, j);
          for (std::size_t ri = 0; ri < monos2.size(); ++ri)
            if (monos2[ri] == prod) {
              rows.at(ri, ti * block + mi) += Rational(sign);
              nonzero = true;
              break;
            }
        }
      }
    }
    if (nonzero) sys = sys.stacked_below(rows);
  }

  // membership rows: the normal form of each coefficient must vanish
  const auto& gb = I.groebner_basis();
  std::vector<Polynomial> nf(block, Polynomial(ring));
  for (std::size_t mi = 0; mi < block; ++mi)
    nf[mi] = reduce(Polynomial::from_term(ring, monos[mi], Rational(1)), gb);
  for (std::size_t ti = 0; ti < masks.size(); ++ti) {
    QMatrix rows(block, ncols);  // indexed by standard monomials of degree d+1
    bool nonzero = false;
    for (std::size_t mi = 0; mi < block; ++mi) {
      for (const auto& term : nf[mi].terms()) {
        for (std::size_t ri = 0; ri < block; ++ri)
          if (monos[ri] == term.mono) {
            rows.at(ri, ti * block + mi) += term.coef;
            nonzero = true;
            break;
          }
      }
    }
    if (nonzero) sys = sys.stacked_below(rows);
  }

  for (const auto& v : sys.kernel_basis()) {
    PForm w(ring, p);
    for (std::size_t ti = 0; ti < masks.size(); ++ti) {
      std::vector<Term> terms;
      for (std::size_t mi = 0; mi < block; ++mi)
        if (v[ti * block + mi] != 0) terms.push_back({monos[mi], v[ti * block + mi]});
      if (!terms.empty()) w.add_term(masks[ti], Polynomial::from_terms(ring, std::move(terms)));
    }
    if (!w.is_zero()) out.basis.push_back({std::move(w), FormSpace::Provenance::Solved});
  }
  return out;
}

bool radial_decomposition_check(const FreeResolution& res, int p,
                                const std::vector<Rational>& t, const Polynomial& f) {
  if (f.is_constant() || !f.is_homogeneous())
    throw std::invalid_argument("radial_decomposition_check: f must be homogeneous nonconstant");
  check_tor_vector(res, p, t);
  if (p < 1) throw std::invalid_argument("radial_decomposition_check: p must be >= 1");

  PForm lhs = xi(res, p, t).mul_poly(f);

  FormMatrix x = xi_inner_matrix(res, p);
  std::vector<PForm> col = matrix_apply(x, t);
  PForm df = delta(PForm::from_polynomial(f));
  PForm rhs(res.ring, p);
  for (int k = 0; k < res.gens->cols(); ++k) {
    const Polynomial& g = res.gens->entry(0, k);
    if (g.is_zero() || col[k].is_zero()) continue;
    rhs += contract_rad(wedge(df, col[k])).mul_poly(g);
  }
  return lhs == rhs;
}

std::vector<std::vector<Rational>> forms_to_vectors(const std::vector<PForm>& forms,
                                                    int coeff_degree) {
  std::vector<std::vector<Rational>> out;
  out.reserve(forms.size());
  for (const auto& w : forms) out.push_back(form_coefficient_vector(w, coeff_degree));
  return out;
}

}  // namespace syzforms
