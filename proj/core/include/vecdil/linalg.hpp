#pragma once

// Exact dense rational matrices, linear solving, and nonnegative linear
// feasibility. Everything is value-semantic and immutable after
// construction; dimensions are fixed at construction time.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vecdil/rational.hpp"

namespace vecdil {

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("Mat: empty shape");
  }
  Mat(std::initializer_list<std::initializer_list<long>> init);

  static Mat identity(size_t n);
  static Mat from_rows(const std::vector<RatVec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  RatVec row(size_t i) const;
  RatVec col(size_t j) const;
  Mat transpose() const;

  // Rows selected by index list, in the given order.
  Mat select_rows(const std::vector<size_t>& idx) const;

  RatVec mul(const RatVec& v) const;
  Mat mul(const Mat& other) const;

  bool operator==(const Mat& other) const = default;

 private:
  size_t rows_, cols_;
  std::vector<Rat> data_;
};

// Exact Gaussian elimination with full fraction pivoting.
Rat det(const Mat& m);
std::optional<RatVec> solve(const Mat& m, const RatVec& v);
std::optional<Mat> inverse(const Mat& m);

// Rank of an arbitrary rectangular matrix.
size_t rank(const Mat& m);

// A basis of the nullspace {x : Mx = 0}.
std::vector<RatVec> nullspace(const Mat& m);

// Decides whether there is x >= 0 with Ex = f. Exact phase-1 simplex with
// Bland's rule.
bool feasible_nonneg(const Mat& e, const RatVec& f);

// Is p a convex combination of the given points?
bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& p);

// Is p a nonnegative combination of the given generators? (p = 0 always is.)
bool in_cone(const std::vector<RatVec>& generators, const RatVec& p);

}  // namespace vecdil
