#pragma once

#include <map>
#include <optional>
#include <vector>

#include "syzforms/graded.hpp"
#include "syzforms/ideal.hpp"
#include "syzforms/module_gb.hpp"
#include "syzforms/qpoly.hpp"

namespace syzforms {

// beta_{i,j} = dim Tor_i(M, k)_j, read off a minimal resolution.
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;  // (i, j) -> beta

  long get(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
};

// Chain F_L -> ... -> F_1 -> F_0 of graded free modules resolving a module.
// maps[k] : F_{k+1} -> F_k. For an ideal, `gens` additionally records
// F_0 -> R, the row of minimal generators; the resolved module is the ideal
// itself (not R/I).
struct FreeResolution {
  Ring ring;
  GradedFreeModule f0;
  std::vector<GradedMap> maps;
  std::optional<GradedMap> gens;

  int length() const { return static_cast<int>(maps.size()); }
  const GradedFreeModule& module(int i) const {
    return i == 0 ? f0 : maps[i - 1].source();
  }
  // phi_p in the convention phi_0 = generator row, phi_p = maps[p-1].
  const GradedMap& phi(int p) const;
};

// Syzygies of the columns of phi: psi with phi o psi = 0 and
// im(psi) = ker(phi), columns sorted by degree.
GradedMap syzygy_map(const GradedMap& phi, PairStrategy strategy = PairStrategy::Normal);

// Minimal graded free resolution of the ideal as a module.
FreeResolution free_resolution(const Ideal& I, PairStrategy strategy = PairStrategy::Normal);

// Minimal resolution of coker(pres).
FreeResolution resolve_presentation(const GradedMap& pres,
                                    PairStrategy strategy = PairStrategy::Normal);

// Cancel unit entries of b against its neighbour `prev` (may be null);
// afterwards b has no constant entries and no zero columns.
void minimalize_pair(GradedMap* prev, GradedMap& b);

GradedMap minimal_presentation(const GradedMap& pres);
bool is_zero_module(const GradedMap& pres);

BettiTable betti(const FreeResolution& res);

// Unit coordinate vectors on the degree-m columns of F_p.
std::vector<std::vector<Rational>> tor_basis(const FreeResolution& res, int p, int m);
long tor_dim(const FreeResolution& res, int p, int m);

// Alternating binomial sum over the resolution: exact Hilbert function for
// every t, and the Hilbert polynomial (they agree for t >= regularity).
long hilbert_function(const FreeResolution& res, int t);
QPoly hilbert_polynomial(const FreeResolution& res);
QPoly hilbert_polynomial(const GradedMap& pres);

// dim coker(pres)_d
long module_piece_dim(const GradedMap& pres, int d);

int regularity(const FreeResolution& res);
int regularity(const Ideal& I);

// Presentation of ker(B)/im(A) for a complex A, B with B o A = 0.
GradedMap homology_presentation(const GradedMap& A, const GradedMap& B);

// dim_k Ext^q_R(M, R(-nvars))_d for M = coker(pres), via the dualized
// minimal resolution. (R(-nvars) = R(-n-1) on P^n.)
long graded_ext_dim(const GradedMap& pres, int q, int d);
long graded_ext_dim(const FreeResolution& res, int q, int d);

// Rank-exactness of the resolution at homological position i in degree d.
bool resolution_exact_at(const FreeResolution& res, int i, int d);

}  // namespace syzforms
