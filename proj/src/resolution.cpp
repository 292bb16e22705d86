#include "syzforms/resolution.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace syzforms {

const GradedMap& FreeResolution::phi(int p) const {
  if (p == 0) {
    if (!gens) throw std::logic_error("phi(0) requested on a module resolution");
    return *gens;
  }
  return maps.at(p - 1);
}

GradedMap syzygy_map(const GradedMap& phi, PairStrategy strategy) {
  const Ring& ring = phi.ring();
  std::vector<ModPoly> columns;
  for (int c = 0; c < phi.cols(); ++c) columns.push_back(mod_from_column(ring, phi.column(c)));

  ModuleGB gb = module_groebner(ring, columns, /*collect_syzygies=*/true, strategy);

  struct Col {
    int degree;
    std::vector<Polynomial> entries;
  };
  std::vector<Col> cols;
  for (const auto& syz : gb.syzygies) {
    int degree = INT_MIN;
    for (int k = 0; k < phi.cols(); ++k) {
      const Polynomial& e = syz[k];
      if (e.is_zero()) continue;
      if (!e.is_homogeneous()) throw std::logic_error("syzygy_map: inhomogeneous syzygy");
      int d = e.degree() + phi.source().twists[k];
      if (degree == INT_MIN)
        degree = d;
      else if (degree != d)
        throw std::logic_error("syzygy_map: syzygy mixes degrees");
    }
    if (degree == INT_MIN) continue;  // zero syzygy
    cols.push_back({degree, syz});
  }
  std::stable_sort(cols.begin(), cols.end(), [&](const Col& a, const Col& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t k = 0; k < a.entries.size(); ++k) {
      auto c = poly_compare(a.entries[k], b.entries[k]);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
    }
    return false;
  });

  GradedFreeModule src;
  for (const auto& col : cols) src.twists.push_back(col.degree);
  GradedMap psi(ring, phi.source(), src);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < phi.cols(); ++r) psi.set_entry(r, static_cast<int>(c), cols[c].entries[r]);
  return psi;
}

void minimalize_pair(GradedMap* prev, GradedMap& b) {
  for (;;) {
    int ur = -1, uc = -1;
    for (int r = 0; r < b.rows() && ur < 0; ++r)
      for (int c = 0; c < b.cols(); ++c) {
        const Polynomial& e = b.entry(r, c);
        if (!e.is_zero() && e.is_constant()) {
          ur = r;
          uc = c;
          break;
        }
      }
    if (ur < 0) break;

    Rational u = b.entry(ur, uc).constant_value();
    // column operations clear row ur (basis change of the source of b)
    for (int c = 0; c < b.cols(); ++c) {
      if (c == uc) continue;
      const Polynomial& e = b.entry(ur, c);
      if (e.is_zero()) continue;
      b.add_multiple_of_col(c, uc, -e.mul_scalar(1 / u));
    }
    // row operations clear column uc; they only touch deleted entries of b
    // but change the basis of b's target, which rewrites prev's columns
    if (prev) {
      for (int r = 0; r < b.rows(); ++r) {
        if (r == ur) continue;
        const Polynomial& e = b.entry(r, uc);
        if (e.is_zero()) continue;
        prev->add_multiple_of_col(ur, r, e.mul_scalar(1 / u));
      }
    }
    b.delete_row(ur);
    b.delete_col(uc);
    if (prev) prev->delete_col(ur);
  }
  for (int c = b.cols() - 1; c >= 0; --c) {
    bool zero = true;
    for (int r = 0; r < b.rows() && zero; ++r) zero = b.entry(r, c).is_zero();
    if (zero) b.delete_col(c);
  }
}

namespace {

FreeResolution resolve_chain(const Ring& ring, GradedMap first, bool ideal_mode,
                             PairStrategy strategy) {
  FreeResolution res;
  res.ring = ring;
  GradedMap* cur = &first;
  std::vector<GradedMap> chain;
  while (true) {
    if (cur->cols() == 0) break;
    GradedMap raw = syzygy_map(*cur, strategy);
    minimalize_pair(cur, raw);
    if (raw.cols() == 0) break;
    chain.push_back(std::move(raw));
    cur = &chain.back();
    if (static_cast<int>(chain.size()) > ring.nvars + 1)
      throw std::logic_error("free resolution exceeds the syzygy-theorem bound");
  }
  if (ideal_mode) {
    res.f0 = first.source();
    res.gens = std::move(first);
    res.maps = std::move(chain);
  } else {
    res.f0 = first.target();
    res.maps.push_back(std::move(first));
    for (auto& m : chain) res.maps.push_back(std::move(m));
  }
  return res;
}

}  // namespace

FreeResolution free_resolution(const Ideal& I, PairStrategy strategy) {
  const Ring& ring = I.ring();
  GradedFreeModule ambient{{0}};
  GradedFreeModule f0;
  for (const auto& g : I.generators()) f0.twists.push_back(g.degree());
  GradedMap phi0(ring, ambient, f0);
  for (int c = 0; c < f0.rank(); ++c) phi0.set_entry(0, c, I.generators()[c]);
  return resolve_chain(ring, std::move(phi0), /*ideal_mode=*/true, strategy);
}

FreeResolution resolve_presentation(const GradedMap& pres, PairStrategy strategy) {
  GradedMap first = pres;
  minimalize_pair(nullptr, first);
  if (first.cols() == 0) {
    // free module: resolution is just F_0
    FreeResolution res;
    res.ring = pres.ring();
    res.f0 = first.target();
    return res;
  }
  return resolve_chain(pres.ring(), std::move(first), /*ideal_mode=*/false, strategy);
}

GradedMap minimal_presentation(const GradedMap& pres) {
  GradedMap p = pres;
  minimalize_pair(nullptr, p);
  return p;
}

bool is_zero_module(const GradedMap& pres) {
  return minimal_presentation(pres).target().rank() == 0;
}

BettiTable betti(const FreeResolution& res) {
  for (const auto& m : res.maps)
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        const Polynomial& e = m.entry(r, c);
        if (!e.is_zero() && e.is_constant())
          throw std::invalid_argument("betti: resolution is not minimal");
      }
  BettiTable t;
  for (int i = 0; i <= res.length(); ++i)
    for (int j : res.module(i).twists) t.entries[{i, j}] += 1;
  return t;
}

std::vector<std::vector<Rational>> tor_basis(const FreeResolution& res, int p, int m) {
  std::vector<std::vector<Rational>> out;
  if (p < 0 || p > res.length()) return out;
  const auto& twists = res.module(p).twists;
  for (std::size_t c = 0; c < twists.size(); ++c) {
    if (twists[c] != m) continue;
    std::vector<Rational> v(twists.size(), Rational(0));
    v[c] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

long tor_dim(const FreeResolution& res, int p, int m) {
  if (p < 0 || p > res.length()) return 0;
  long n = 0;
  for (int j : res.module(p).twists)
    if (j == m) ++n;
  return n;
}

long hilbert_function(const FreeResolution& res, int t) {
  long acc = 0;
  for (int i = 0; i <= res.length(); ++i) {
    long s = 0;
    for (int j : res.module(i).twists) s += dim_poly_degree(res.ring.nvars, t - j);
    acc += (i % 2 == 0) ? s : -s;
  }
  return acc;
}

QPoly hilbert_polynomial(const FreeResolution& res) {
  int n = res.ring.nvars - 1;
  QPoly p;
  for (int i = 0; i <= res.length(); ++i)
    for (int j : res.module(i).twists) {
      QPoly b = QPoly::binomial_in_t(n - j, n);
      if (i % 2 == 0)
        p += b;
      else
        p -= b;
    }
  return p;
}

QPoly hilbert_polynomial(const GradedMap& pres) {
  return hilbert_polynomial(resolve_presentation(pres));
}

long module_piece_dim(const GradedMap& pres, int d) {
  long dim = 0;
  for (int j : pres.target().twists) dim += dim_poly_degree(pres.ring().nvars, d - j);
  return dim - static_cast<long>(pres.graded_piece(d).rank());
}

int regularity(const FreeResolution& res) {
  int reg = INT_MIN;
  for (int i = 0; i <= res.length(); ++i)
    for (int j : res.module(i).twists) reg = std::max(reg, j - i);
  return reg == INT_MIN ? 0 : reg;
}

int regularity(const Ideal& I) { return regularity(free_resolution(I)); }

GradedMap homology_presentation(const GradedMap& A, const GradedMap& B) {
  if (!is_zero_map(compose(B, A)))
    throw std::invalid_argument("homology_presentation: B o A != 0");
  const Ring& ring = A.ring();
  GradedMap kappa = syzygy_map(B);  // generators of ker(B)

  std::vector<ModPoly> kappa_cols;
  for (int c = 0; c < kappa.cols(); ++c)
    kappa_cols.push_back(mod_from_column(ring, kappa.column(c)));
  std::vector<ModPoly> a_cols;
  for (int c = 0; c < A.cols(); ++c) a_cols.push_back(mod_from_column(ring, A.column(c)));

  auto lifted = module_lift(ring, kappa_cols, a_cols);  // A = kappa . Lambda
  GradedMap lambda(ring, kappa.source(), A.source());
  for (int c = 0; c < A.cols(); ++c)
    for (int r = 0; r < kappa.cols(); ++r) lambda.set_entry(r, c, lifted[c][r]);

  GradedMap sigma = syzygy_map(kappa);
  return concat_columns(lambda, sigma);
}

long graded_ext_dim(const FreeResolution& res, int q, int d) {
  if (q < 0 || q > res.length()) return 0;
  const Ring& ring = res.ring;
  int w = ring.nvars;  // dualize against R(-n-1) = R(-nvars)

  auto dual_piece_dim = [&](int i) {
    long s = 0;
    for (int j : res.module(i).twists) s += dim_poly_degree(ring.nvars, d - (w - j));
    return s;
  };
  auto dual_rank = [&](int i) -> long {
    // rank of Hom(psi_i, R(-w)) in degree d; psi_i = maps[i-1]
    const GradedMap& psi = res.maps[i - 1];
    GradedMap dualized = psi.transpose().twisted(-w);
    return static_cast<long>(dualized.graded_piece(d).rank());
  };

  long dim = dual_piece_dim(q);
  long rank_in = q >= 1 ? dual_rank(q) : 0;
  long rank_out = q < res.length() ? dual_rank(q + 1) : 0;
  return dim - rank_in - rank_out;
}

long graded_ext_dim(const GradedMap& pres, int q, int d) {
  return graded_ext_dim(resolve_presentation(pres), q, d);
}

bool resolution_exact_at(const FreeResolution& res, int i, int d) {
  if (i < 0 || i > res.length()) throw std::out_of_range("resolution_exact_at");
  long dim = 0;
  for (int j : res.module(i).twists) dim += dim_poly_degree(res.ring.nvars, d - j);
  long rank_out;  // rank of the map leaving F_i
  if (i == 0) {
    if (!res.gens) return true;  // F_0 presents the module itself
    rank_out = static_cast<long>(res.gens->graded_piece(d).rank());
  } else {
    rank_out = static_cast<long>(res.maps[i - 1].graded_piece(d).rank());
  }
  long rank_in =
      i < res.length() ? static_cast<long>(res.maps[i].graded_piece(d).rank()) : 0;
  return rank_out + rank_in == dim;
}

}  // namespace syzforms
