#pragma once

// Rational polytopes: paired H-representation {x : Ax <= b} with integral A,
// and V-representation as an irredundant vertex list. Vertex enumeration is
// exhaustive basis search; extremality and membership tests are exact linear
// feasibility. Desk scale: m <= 10, n <= 4.

#include <set>
#include <stdexcept>
#include <vector>

#include "vecdil/linalg.hpp"
#include "vecdil/rational.hpp"

namespace vecdil {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HRep {
  Mat A;   // integral entries
  RatVec b;

  HRep(Mat a, RatVec rhs) : A(std::move(a)), b(std::move(rhs)) {
    if (b.size() != A.rows()) throw std::invalid_argument("HRep: |b| != rows(A)");
  }

  size_t dim() const { return A.cols(); }
  size_t num_rows() const { return A.rows(); }
};

struct VRep {
  std::vector<RatVec> vertices;  // empty list = empty polytope

  bool empty() const { return vertices.empty(); }
  size_t dim() const { return vertices.empty() ? 0 : vertices[0].size(); }

  // Set semantics.
  bool operator==(const VRep& other) const;
};

struct NormalFan {
  struct Cone {
    RatVec vertex;
    std::set<size_t> active_rows;
  };
  std::vector<Cone> cones;

  // Combinatorial signature: the set of active-row sets.
  std::set<std::set<size_t>> signature() const;
};

// A facet of conv(vertices): primitive integral outer normal u with
// u.x <= offset valid and tight on the facet.
struct Facet {
  RatVec normal;
  Rat offset;
};

// cone(A^T) = R^n, i.e. P_A(b) bounded for every b. Exact.
bool is_bounded_system(const Mat& a);

// All vertices of P_A(b). Empty VRep when infeasible. Throws DomainError on
// an unbounded system.
VRep vertices(const HRep& h, bool check_bounded = true);

Rat support(const VRep& v, const RatVec& z);

// V-rep of sum_i weights_i * parts_i. Weights must be >= 0; the empty sum
// convention gives {origin}.
VRep minkowski(const std::vector<VRep>& parts, const RatVec& weights);

struct Denominators {
  Int den;     // smallest positive integer d with d*P integral
  Rat denrat;  // smallest positive rational d with d*P integral
};
Denominators denominators(const VRep& v);

// Exact n-dimensional volume; 0 when dim(conv) < n.
Rat volume(const VRep& v);

// Facets of a full-dimensional polytope, brute-force hyperplane detection.
std::vector<Facet> facets(const VRep& v);

// Affine dimension of the vertex set.
size_t affine_dim(const VRep& v);

NormalFan normal_fan(const HRep& h);

bool contains(const HRep& h, const RatVec& x);
bool contains_strictly(const HRep& h, const RatVec& x);

VRep scale(const VRep& v, const Rat& t);

}  // namespace vecdil
