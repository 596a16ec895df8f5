#pragma once

// Reconstruction of rational Ehrhart quasi-polynomials from exact lattice
// counts: pointwise coefficient extraction on a shift grid, cell-wise
// polynomial coefficient functions for Minkowski-sum dilations, the
// right-hand-side quasi-polynomial of a chamber, mixed volumes, and the
// derivative-ladder verification.

#include <map>

#include "vecdil/chambers.hpp"
#include "vecdil/lattice.hpp"
#include "vecdil/polynomial.hpp"
#include "vecdil/polytope.hpp"

namespace vecdil {

// Exact pointwise coefficient values {G_I(r)} at one argument.
struct CoeffVector {
  RatVec point;
  std::map<MPoly::Expo, Rat> values;  // multi-indices I with |I|_1 <= n
};

// One open cell of the wall arrangement over the fundamental box, with its
// polynomial coefficient functions.
struct QPCell {
  std::vector<RatVec> wall_normals;  // cell = {r : normals.r <= offsets}
  RatVec wall_offsets;
  RatVec sample;                     // an interior point
  std::map<MPoly::Expo, MPoly> coeffs;

  bool strictly_contains(const RatVec& r) const;
};

struct MultiQuasiPoly {
  std::vector<VRep> parts;
  size_t arity = 0;   // k
  size_t degree = 0;  // n = dim of the ambient space
  RatVec periods;     // componentwise denrat of the parts
  std::vector<QPCell> cells;

  // Componentwise reduction into the fundamental box prod [0, d_j).
  RatVec reduce(const RatVec& r) const;

  // Coefficient values at r: from the containing cell's polynomials, or by
  // direct pointwise extraction when r reduces onto a wall.
  CoeffVector coefficients(const RatVec& r) const;

  // Exact count value sum_I G_I(r) r^I.
  Rat evaluate(const RatVec& r) const;
};

// Shift-grid coefficient extraction: counts at r + U (.) d for U in
// {0..n}^k, tensor-product Vandermonde solve over the full box of
// multi-indices; coefficients beyond the simplex |I|_1 <= n must vanish.
CoeffVector coeffs_at(const std::vector<VRep>& parts, const RatVec& r,
                      uint64_t max_points = kDefaultMaxPoints);

MultiQuasiPoly reconstruct_minkowski(const std::vector<VRep>& parts,
                                     uint64_t max_points = kDefaultMaxPoints);

MultiQuasiPoly reconstruct_univariate(const VRep& p,
                                      uint64_t max_points = kDefaultMaxPoints);

// d/dr_j p_I == -(I_j+1) p_{I+e_j} on one cell, as exact polynomials.
bool derivative_check(const MultiQuasiPoly& qp, size_t cell_index,
                      const MPoly::Expo& i_index, size_t j);

// The ladder over all cells, indices and variables.
bool derivative_check_all(const MultiQuasiPoly& qp);

// I-th mixed volumes (|I|_1 = n) from exact volume samples of weighted sums.
std::map<MPoly::Expo, Rat> mixed_volumes(const std::vector<VRep>& parts);

// Coefficient vectors agree at equivalent arguments (McMullen / Cor class
// constancy). Precondition: r ~ s.
bool mcmullen_class_check(const std::vector<VRep>& parts, const RatVec& r, const RatVec& s,
                          const std::vector<RatVec>& generators,
                          uint64_t max_points = kDefaultMaxPoints);

// Quasi-polynomial in the right-hand side b over one chamber closure.
// Coefficient values are computed on demand: a shift grid along the first m
// independent generators, a tensor Vandermonde solve for the Gamma_I, and
// the multinomial change of basis to the Phi_J.
struct RhsQuasiPoly {
  Mat a;
  Chamber chamber;
  std::vector<RatVec> generators;  // reordered: first m linearly independent
  Mat h;                           // columns h_1..h_m
  Mat h_inv;
  RatVec periods;                  // denrat(P_A(h_i)), i = 1..m
  size_t n = 0, m = 0;

  bool in_closure(const RatVec& b) const;

  // Gamma_I(lambda(b)) for I in {0..n}^m, |I|_1 <= n.
  std::map<MPoly::Expo, Rat> gamma_at(const RatVec& b, uint64_t max_points = kDefaultMaxPoints) const;

  // Phi_J(A, b) for J in {0..n}^m, |J|_1 <= n.
  std::map<MPoly::Expo, Rat> phi_at(const RatVec& b, uint64_t max_points = kDefaultMaxPoints) const;

  // Phi(A, b) = sum_J Phi_J(A,b) b^J.
  Rat evaluate(const RatVec& b, uint64_t max_points = kDefaultMaxPoints) const;

  // Value of the leading part sum_{|J|_1 = n} Phi_J(A,b) b^J.
  Rat leading_term(const RatVec& b, uint64_t max_points = kDefaultMaxPoints) const;
};

RhsQuasiPoly reconstruct_rhs(const Mat& a, const Chamber& ch);

// Local polynomial forms of the Phi_J around an interior base point,
// obtained by exact interpolation of the Gamma_I on a principal lattice and
// the multinomial change of basis. Verified on held-out samples.
struct RhsLocalForm {
  RatVec base;
  std::map<MPoly::Expo, MPoly> phi;  // polynomials in b
};
std::optional<RhsLocalForm> rhs_local_form(const RhsQuasiPoly& rqp, const RatVec& b0,
                                           uint64_t max_points = kDefaultMaxPoints);

// Ladder d/db_l Phi_J == -(J_l+1) Phi_{J+e_l} on a local form.
bool rhs_derivative_check(const RhsLocalForm& form, size_t n, size_t m);

// The multinomial conversion weight sum_{K in M2(I,J)} binom(I,K) (H^-1)^K.
Rat rhs_basis_weight(const Mat& h_inv, const MPoly::Expo& i_index, const MPoly::Expo& j_index);

}  // namespace vecdil
