#include "syzforms/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace syzforms {

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

namespace {
// Crude size measure for pivot selection: bit length of numerator plus
// denominator. Picking small pivots keeps intermediate entries short.
std::size_t rational_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}
}  // namespace

std::vector<std::size_t> QMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t best = rows_;
    std::size_t best_size = 0;
    for (std::size_t r = row; r < rows_; ++r) {
      const Rational& v = at(r, col);
      if (v == 0) continue;
      std::size_t s = rational_size(v);
      if (best == rows_ || s < best_size) {
        best = r;
        best_size = s;
      }
    }
    if (best == rows_) continue;
    if (best != row)
      for (std::size_t c = col; c < cols_; ++c) std::swap(at(row, c), at(best, c));
    Rational inv = 1 / at(row, col);
    for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const Rational f = at(r, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix m = *this;
  return m.rref().size();
}

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
  QMatrix m = *this;
  std::vector<std::size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix QMatrix::stacked_below(const QMatrix& b) const {
  if (cols_ != b.cols_ && rows_ != 0 && b.rows_ != 0)
    throw std::invalid_argument("stacked_below: column mismatch");
  std::size_t cols = rows_ ? cols_ : b.cols_;
  QMatrix r(rows_ + b.rows_, cols);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) r.at(rows_ + i, j) = b.at(i, j);
  return r;
}

void QMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) return 0;
  QMatrix m;
  for (const auto& v : vectors) m.append_row(v);
  return m.rank();
}

bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b) {
  std::size_t ra = span_rank(a);
  std::size_t rb = span_rank(b);
  if (ra != rb) return false;
  std::vector<std::vector<Rational>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both) == ra;
}

bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
  std::size_t r = span_rank(basis);
  std::vector<std::vector<Rational>> ext = basis;
  ext.push_back(v);
  return span_rank(ext) == r;
}

}  // namespace syzforms
