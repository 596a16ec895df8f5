#pragma once

// Sparse multivariate polynomials over Q with a fixed number of variables.

#include <map>
#include <optional>
#include <vector>

#include "vecdil/linalg.hpp"
#include "vecdil/rational.hpp"

namespace vecdil {

class MPoly {
 public:
  using Expo = std::vector<int>;

  MPoly() : nvars_(0) {}
  explicit MPoly(size_t nvars) : nvars_(nvars) {}

  static MPoly constant(size_t nvars, const Rat& c);
  static MPoly monomial(size_t nvars, const Expo& e, const Rat& c);

  size_t nvars() const { return nvars_; }
  const std::map<Expo, Rat>& terms() const { return terms_; }

  void add_term(const Expo& e, const Rat& c);

  Rat eval(const RatVec& x) const;
  MPoly derivative(size_t var) const;
  MPoly operator+(const MPoly& other) const;
  MPoly operator-(const MPoly& other) const;
  MPoly operator*(const MPoly& other) const;
  MPoly scaled(const Rat& c) const;

  // Substitutes x_i = sum_j M(i,j) y_j; result has M.cols() variables.
  MPoly compose_linear(const Mat& m) const;

  int total_degree() const;
  int degree_in(size_t var) const;
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const MPoly& other) const = default;

 private:
  size_t nvars_;
  std::map<Expo, Rat> terms_;  // zero coefficients never stored
};

// Exponent vectors e in {0,1,...}^k with sum(e) <= max_total and
// e[j] <= per_var_cap[j] (cap ignored when per_var_cap is empty).
std::vector<MPoly::Expo> exponents_up_to(size_t k, int max_total,
                                         const std::vector<int>& per_var_cap = {});

// Interpolates the polynomial with the given monomial support through exact
// samples (point, value). Returns nullopt when the linear system is
// singular or inconsistent.
std::optional<MPoly> fit_polynomial(size_t nvars, const std::vector<MPoly::Expo>& basis,
                                    const std::vector<std::pair<RatVec, Rat>>& samples);

}  // namespace vecdil
