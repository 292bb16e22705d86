#pragma once

#include <cstddef>
#include <vector>

#include "syzforms/rational.hpp"

namespace syzforms {

// Dense matrix over the rationals; just enough exact linear algebra for
// graded pieces: rank, reduced row echelon form, kernel bases.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;

  // In-place reduced row echelon form; returns the pivot column indices.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  // Basis of the right kernel, one vector (length cols) per basis element,
  // in deterministic order of free columns.
  std::vector<std::vector<Rational>> kernel_basis() const;

  // Stack b below this (column counts must agree).
  QMatrix stacked_below(const QMatrix& b) const;

  // Append a row given as a vector of length cols().
  void append_row(const std::vector<Rational>& row);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// rank of the span of a list of coefficient vectors
std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors);

// span(a) == span(b) as subspaces of Q^n, by exact rank comparisons
bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b);

// true when v lies in span(basis)
bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v);

}  // namespace syzforms
