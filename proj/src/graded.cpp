#include "syzforms/graded.hpp"

#include <stdexcept>

namespace syzforms {

GradedMap::GradedMap(Ring ring, GradedFreeModule target, GradedFreeModule source)
    : ring_(std::move(ring)), target_(std::move(target)), source_(std::move(source)) {
  m_.assign(target_.rank(), std::vector<Polynomial>(source_.rank(), Polynomial(ring_)));
}

void GradedMap::set_entry(int r, int c, Polynomial p) {
  if (!(p.ring() == ring_)) throw std::invalid_argument("set_entry: ring mismatch");
  m_[r][c] = std::move(p);
}

void GradedMap::validate() const {
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) {
      const Polynomial& e = m_[r][c];
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.degree() != source_.twists[c] - target_.twists[r])
        throw std::logic_error("GradedMap: entry degree violates the grading");
    }
}

bool GradedMap::is_zero() const {
  for (const auto& row : m_)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

std::vector<Polynomial> GradedMap::column(int c) const {
  std::vector<Polynomial> col;
  col.reserve(rows());
  for (int r = 0; r < rows(); ++r) col.push_back(m_[r][c]);
  return col;
}

GradedMap GradedMap::transpose() const {
  GradedFreeModule src, tgt;
  for (int t : target_.twists) src.twists.push_back(-t);
  for (int t : source_.twists) tgt.twists.push_back(-t);
  GradedMap out(ring_, std::move(tgt), std::move(src));
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) out.m_[c][r] = m_[r][c];
  return out;
}

GradedMap GradedMap::twisted(int a) const {
  GradedMap out = *this;
  for (int& t : out.target_.twists) t -= a;
  for (int& t : out.source_.twists) t -= a;
  return out;
}

void GradedMap::delete_row(int r) {
  target_.twists.erase(target_.twists.begin() + r);
  m_.erase(m_.begin() + r);
}

void GradedMap::delete_col(int c) {
  source_.twists.erase(source_.twists.begin() + c);
  for (auto& row : m_) row.erase(row.begin() + c);
}

void GradedMap::add_multiple_of_col(int dst, int src, const Polynomial& factor) {
  for (int r = 0; r < rows(); ++r)
    if (!m_[r][src].is_zero()) m_[r][dst] += m_[r][src] * factor;
}

void GradedMap::add_multiple_of_row(int dst, int src, const Polynomial& factor) {
  for (int c = 0; c < cols(); ++c)
    if (!m_[src][c].is_zero()) m_[dst][c] += m_[src][c] * factor;
}

QMatrix GradedMap::graded_piece(int d) const {
  std::vector<std::vector<Monomial>> src_monos(cols()), tgt_monos(rows());
  std::size_t ncols = 0, nrows = 0;
  std::vector<std::size_t> col_off(cols()), row_off(rows());
  for (int c = 0; c < cols(); ++c) {
    src_monos[c] = monomials_of_degree(ring_, d - source_.twists[c]);
    col_off[c] = ncols;
    ncols += src_monos[c].size();
  }
  for (int r = 0; r < rows(); ++r) {
    tgt_monos[r] = monomials_of_degree(ring_, d - target_.twists[r]);
    row_off[r] = nrows;
    nrows += tgt_monos[r].size();
  }
  QMatrix mat(nrows, ncols);
  for (int r = 0; r < rows(); ++r) {
    if (tgt_monos[r].empty()) continue;
    for (int c = 0; c < cols(); ++c) {
      const Polynomial& e = m_[r][c];
      if (e.is_zero()) continue;
      for (std::size_t k = 0; k < src_monos[c].size(); ++k) {
        for (const auto& t : e.terms()) {
          Monomial prod = t.mono * src_monos[c][k];
          // binary search in the descending-ordered target basis
          const auto& basis = tgt_monos[r];
          std::size_t lo = 0, hi = basis.size();
          while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            auto cmp = compare(ring_.order, basis[mid], prod);
            if (cmp == std::strong_ordering::greater)
              lo = mid + 1;
            else
              hi = mid;
          }
          if (lo >= basis.size() || !(basis[lo] == prod))
            throw std::logic_error("graded_piece: product monomial missing from basis");
          mat.at(row_off[r] + lo, col_off[c] + k) += t.coef;
        }
      }
    }
  }
  return mat;
}

long GradedMap::source_piece_dim(int d) const {
  long n = 0;
  for (int c = 0; c < cols(); ++c) n += dim_poly_degree(ring_.nvars, d - source_.twists[c]);
  return n;
}

long GradedMap::target_piece_dim(int d) const {
  long n = 0;
  for (int r = 0; r < rows(); ++r) n += dim_poly_degree(ring_.nvars, d - target_.twists[r]);
  return n;
}

GradedMap compose(const GradedMap& a, const GradedMap& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("compose: ring mismatch");
  if (!(a.source() == b.target())) throw std::invalid_argument("compose: module mismatch");
  GradedMap out(a.ring(), a.target(), b.source());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) {
      Polynomial s(a.ring());
      for (int k = 0; k < a.cols(); ++k)
        if (!a.entry(r, k).is_zero() && !b.entry(k, c).is_zero())
          s += a.entry(r, k) * b.entry(k, c);
      out.set_entry(r, c, std::move(s));
    }
  return out;
}

GradedMap concat_columns(const GradedMap& a, const GradedMap& b) {
  if (!(a.ring() == b.ring()) || !(a.target() == b.target()))
    throw std::invalid_argument("concat_columns: target mismatch");
  GradedFreeModule src = a.source();
  src.twists.insert(src.twists.end(), b.source().twists.begin(), b.source().twists.end());
  GradedMap out(a.ring(), a.target(), std::move(src));
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.set_entry(r, c, a.entry(r, c));
    for (int c = 0; c < b.cols(); ++c) out.set_entry(r, a.cols() + c, b.entry(r, c));
  }
  return out;
}

bool is_zero_map(const GradedMap& a) { return a.is_zero(); }

std::strong_ordering poly_compare(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare(a.ring().order, ta[i].mono, tb[i].mono);
    if (c != std::strong_ordering::equal) return c;
    if (ta[i].coef != tb[i].coef) return ta[i].coef < tb[i].coef ? std::strong_ordering::less
                                                                 : std::strong_ordering::greater;
  }
  return ta.size() <=> tb.size();
}

}  // namespace syzforms
