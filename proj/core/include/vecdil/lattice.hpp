#pragma once

// Brute-force lattice point counting: integer bounding box from the vertex
// coordinates, then a per-point exact constraint test. Ground truth for all
// quasi-polynomial reconstructions.

#include <cstdint>

#include "vecdil/polytope.hpp"

namespace vecdil {

inline constexpr uint64_t kDefaultMaxPoints = 1'000'000;

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// #(P_A(b) cap Z^n); 0 for empty. Throws DomainError when unbounded,
// BudgetError when the candidate box exceeds max_points.
uint64_t count(const HRep& h, uint64_t max_points = kDefaultMaxPoints,
               bool check_bounded = true);

// Integer points satisfying every row strictly.
uint64_t count_interior(const HRep& h, uint64_t max_points = kDefaultMaxPoints,
                        bool check_bounded = true);

// #((sum_i weights_i * parts_i) cap Z^n); membership by exact feasibility.
uint64_t count_minkowski(const std::vector<VRep>& parts, const RatVec& weights,
                         uint64_t max_points = kDefaultMaxPoints);

// Lattice points of conv(v).
uint64_t count_vrep(const VRep& v, uint64_t max_points = kDefaultMaxPoints);
std::vector<RatVec> lattice_points(const VRep& v, uint64_t max_points = kDefaultMaxPoints);

struct ReciprocityReport {
  Rat phi_reflected;        // Phi(A, -b), by periodic continuation
  uint64_t interior_count;  // #(inter(P_A(b)) cap Z^n)
  bool equal;               // (-1)^dim * phi_reflected == interior_count
};

// Evaluates both sides of the Ehrhart-Macdonald reciprocity
// (-1)^dim Phi(A,-b) = #(inter(P_A(b)) cap Z^n). The left
// side is the counting quasi-polynomial t -> #(P_A(tb) cap Z^n) continued
// to t = -1 through its coefficient periodicity: coefficients are read off
// at the smallest t' >= 0 with t' = -1 (mod denrat), then summed with signs
// (-1)^i. Both sides are reported; equality is the caller's claim to make
// (it can fail for lower-dimensional P_A(b)).
ReciprocityReport reciprocity_check(const HRep& h, uint64_t max_points = kDefaultMaxPoints);

}  // namespace vecdil
