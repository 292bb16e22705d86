#pragma once

#include <vector>

#include "syzforms/polynomial.hpp"
#include "syzforms/qmatrix.hpp"

namespace syzforms {

// F = (+) R(-twists[k]); the basis element k has degree twists[k].
struct GradedFreeModule {
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  bool operator==(const GradedFreeModule&) const = default;
};

// Matrix of homogeneous polynomials between twisted graded free modules.
// Entry (r,c) is homogeneous of degree source[c] - target[r], or zero.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(Ring ring, GradedFreeModule target, GradedFreeModule source);

  const Ring& ring() const { return ring_; }
  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }

  const Polynomial& entry(int r, int c) const { return m_[r][c]; }
  void set_entry(int r, int c, Polynomial p);

  // Throws unless every entry matches the grading invariant.
  void validate() const;

  bool is_zero() const;
  std::vector<Polynomial> column(int c) const;

  GradedMap transpose() const;    // F* <- G* with negated twists
  GradedMap twisted(int a) const; // same matrix, M(a): twists shifted by -a

  void delete_row(int r);
  void delete_col(int c);
  void add_multiple_of_col(int dst, int src, const Polynomial& factor);
  void add_multiple_of_row(int dst, int src, const Polynomial& factor);

  // Matrix of the degree-d piece over monomial bases of source and target.
  QMatrix graded_piece(int d) const;
  long source_piece_dim(int d) const;
  long target_piece_dim(int d) const;

 private:
  Ring ring_;
  GradedFreeModule target_, source_;
  std::vector<std::vector<Polynomial>> m_;  // rows x cols
};

GradedMap compose(const GradedMap& a, const GradedMap& b);
// Columns of a followed by columns of b (same target).
GradedMap concat_columns(const GradedMap& a, const GradedMap& b);
bool is_zero_map(const GradedMap& a);

// Deterministic total order on polynomials, for canonical column sorting.
std::strong_ordering poly_compare(const Polynomial& a, const Polynomial& b);

}  // namespace syzforms
