#include "vecdil/linalg.hpp"

#include <algorithm>

namespace vecdil {

Mat::Mat(std::initializer_list<std::initializer_list<long>> init)
    : Mat(init.size(), init.begin()->size()) {
  size_t i = 0;
  for (const auto& row : init) {
    if (row.size() != cols_) throw std::invalid_argument("Mat: ragged rows");
    size_t j = 0;
    for (long x : row) (*this)(i, j++) = Rat(x);
    ++i;
  }
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) throw std::invalid_argument("Mat: no rows");
  Mat m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("Mat: ragged rows");
    for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVec Mat::row(size_t i) const {
  RatVec r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RatVec Mat::col(size_t j) const {
  RatVec c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::select_rows(const std::vector<size_t>& idx) const {
  Mat m(idx.size(), cols_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

RatVec Mat::mul(const RatVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Mat::mul: dimension mismatch");
  RatVec out(rows_, Rat(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Mat Mat::mul(const Mat& other) const {
  if (other.rows_ != cols_) throw std::invalid_argument("Mat::mul: dimension mismatch");
  Mat out(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (size_t j = 0; j < other.cols_; ++j)
        out(i, j) += (*this)(i, k) * other(k, j);
    }
  return out;
}

namespace {

// Reduces [M | rhs...] to row echelon form in place, returns (rank, det of
// the leading square part if square, pivot columns).
struct Echelon {
  Mat work;
  size_t rk = 0;
  Rat determinant = 1;
  std::vector<size_t> pivot_cols;
};

Echelon echelon(Mat work, size_t main_cols) {
  Echelon e{std::move(work)};
  size_t r = 0;
  for (size_t c = 0; c < main_cols && r < e.work.rows(); ++c) {
    size_t piv = r;
    while (piv < e.work.rows() && e.work(piv, c) == 0) ++piv;
    if (piv == e.work.rows()) continue;
    if (piv != r) {
      for (size_t j = 0; j < e.work.cols(); ++j) std::swap(e.work(piv, j), e.work(r, j));
      e.determinant = -e.determinant;
    }
    Rat p = e.work(r, c);
    e.determinant *= p;
    for (size_t j = c; j < e.work.cols(); ++j) e.work(r, j) /= p;
    for (size_t i = 0; i < e.work.rows(); ++i) {
      if (i == r || e.work(i, c) == 0) continue;
      Rat f = e.work(i, c);
      for (size_t j = c; j < e.work.cols(); ++j) e.work(i, j) -= f * e.work(r, j);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rk = r;
  return e;
}

}  // namespace

Rat det(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  Echelon e = echelon(m, m.cols());
  return e.rk == m.rows() ? e.determinant : Rat(0);
}

std::optional<RatVec> solve(const Mat& m, const RatVec& v) {
  if (m.rows() != m.cols()) throw std::invalid_argument("solve: non-square matrix");
  if (v.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = v[i];
  }
  Echelon e = echelon(std::move(aug), m.cols());
  if (e.rk < m.rows()) return std::nullopt;
  RatVec x(m.cols());
  for (size_t i = 0; i < m.cols(); ++i) x[i] = e.work(i, m.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
  size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = echelon(std::move(aug), n);
  if (e.rk < n) return std::nullopt;
  Mat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.work(i, n + j);
  return inv;
}

size_t rank(const Mat& m) { return echelon(m, m.cols()).rk; }

std::vector<RatVec> nullspace(const Mat& m) {
  Echelon e = echelon(m, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec x(m.cols(), Rat(0));
    x[free] = 1;
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
      x[e.pivot_cols[r]] = -e.work(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool feasible_nonneg(const Mat& e_in, const RatVec& f_in) {
  if (f_in.size() != e_in.rows()) throw std::invalid_argument("feasible_nonneg: dimension mismatch");
  size_t m = e_in.rows(), n = e_in.cols();
  // Tableau for phase-1: columns = structural vars, artificial vars, rhs.
  // Row signs fixed so rhs >= 0; artificials form the starting basis.
  Mat t(m + 1, n + m + 1);
  for (size_t i = 0; i < m; ++i) {
    Rat s = (f_in[i] < 0) ? Rat(-1) : Rat(1);
    for (size_t j = 0; j < n; ++j) t(i, j) = s * e_in(i, j);
    t(i, n + i) = 1;
    t(i, n + m) = s * f_in[i];
  }
  // Objective row: minimize sum of artificials; expressed in reduced form.
  for (size_t j = 0; j <= n + m; ++j) {
    Rat s = 0;
    for (size_t i = 0; i < m; ++i) s += t(i, j);
    t(m, j) = (j >= n && j < n + m) ? Rat(0) : s;
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;
  for (;;) {
    // Bland: smallest-index entering column with positive reduced cost.
    size_t enter = n + m;
    for (size_t j = 0; j < n + m; ++j)
      if (t(m, j) > 0) { enter = j; break; }
    if (enter == n + m) break;
    // Ratio test, Bland tie-break on basis variable index.
    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rat ratio = t(i, n + m) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded; cannot happen for phase 1
    Rat p = t(leave, enter);
    for (size_t j = 0; j <= n + m; ++j) t(leave, j) /= p;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      Rat f = t(i, enter);
      for (size_t j = 0; j <= n + m; ++j) t(i, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }
  return t(m, n + m) == 0;
}

bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& p) {
  if (points.empty()) return false;
  size_t n = p.size();
  Mat e(n + 1, points.size());
  RatVec f(n + 1);
  for (size_t j = 0; j < points.size(); ++j) {
    for (size_t i = 0; i < n; ++i) e(i, j) = points[j][i];
    e(n, j) = 1;
  }
  for (size_t i = 0; i < n; ++i) f[i] = p[i];
  f[n] = 1;
  return feasible_nonneg(e, f);
}

bool in_cone(const std::vector<RatVec>& generators, const RatVec& p) {
  if (is_zero_vec(p)) return true;
  if (generators.empty()) return false;
  size_t n = p.size();
  Mat e(n, generators.size());
  for (size_t j = 0; j < generators.size(); ++j)
    for (size_t i = 0; i < n; ++i) e(i, j) = generators[j][i];
  return feasible_nonneg(e, p);
}

}  // namespace vecdil
