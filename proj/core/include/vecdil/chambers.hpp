#pragma once

// Decomposition of right-hand-side space Q^m into chambers of constant
// normal fan. Chambers are keyed by fan signature (the set of active-row
// sets); closure cones are intersections of basis cones, with extreme-ray
// generators computed by double description.

#include <set>

#include "vecdil/polytope.hpp"

namespace vecdil {

struct BasisCone {
  std::vector<size_t> sigma;  // n-subset of row indices, A_sigma nonsingular
  Mat cone_rows;              // rows G with K_sigma = {b : G b <= 0}
};

struct Chamber {
  std::set<std::set<size_t>> fan_signature;
  Mat closure;                     // rows G with cl(C) = {b : G b <= 0}
  std::vector<RatVec> generators;  // primitive integral, cone(generators) = cl(C)
};

// One BasisCone per nonsingular n-subset of rows. Throws DomainError when no
// nonsingular subset exists.
std::vector<BasisCone> basis_cones(const Mat& a);

// Chamber of b: fan signature plus closure cone and generators. Requires
// P_A(b) nonempty (and the system bounded).
Chamber chamber_of(const Mat& a, const RatVec& b);

bool same_chamber(const Mat& a, const RatVec& b1, const RatVec& b2);

// Exact equality of sum_i r_i h_i and sum_i s_i h_i.
bool equivalent(const RatVec& r, const RatVec& s, const std::vector<RatVec>& generators);

// Generators of the cone {x : G x <= 0} (lineality directions appear with
// both signs). Minimal under nonnegative-combination containment.
std::vector<RatVec> cone_generators(const Mat& g);

// Dimension of the cone {x : G x <= 0}.
size_t cone_dim(const Mat& g, const std::vector<RatVec>& generators);

struct ContainmentReport {
  std::vector<Chamber> chambers;
  // (i, j): chambers[i] is lower-dimensional and contained in cl(chambers[j]).
  std::vector<std::pair<size_t, size_t>> containments;
  bool complete;  // false when the sampling budget was exhausted
};

ContainmentReport chamber_containment_report(const Mat& a, size_t max_samples = 20000);

}  // namespace vecdil
