#include "vecdil/polytope.hpp"

#include <algorithm>
#include <functional>

namespace vecdil {

namespace {

// All size-k index subsets of {0,...,m-1}, visited in lexicographic order.
void for_each_subset(size_t m, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return;
  for (;;) {
    fn(idx);
    size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<RatVec> basic_feasible_points(const Mat& a, const RatVec& b) {
  size_t n = a.cols();
  std::vector<RatVec> pts;
  for_each_subset(a.rows(), n, [&](const std::vector<size_t>& sigma) {
    Mat sub = a.select_rows(sigma);
    RatVec rhs(n);
    for (size_t i = 0; i < n; ++i) rhs[i] = b[sigma[i]];
    auto x = solve(sub, rhs);
    if (!x) return;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (dot(a.row(i), *x) > b[i]) return;
    }
    if (std::find(pts.begin(), pts.end(), *x) == pts.end()) pts.push_back(std::move(*x));
  });
  return pts;
}

}  // namespace

bool VRep::operator==(const VRep& other) const {
  if (vertices.size() != other.vertices.size()) return false;
  for (const auto& v : vertices)
    if (std::find(other.vertices.begin(), other.vertices.end(), v) == other.vertices.end())
      return false;
  return true;
}

std::set<std::set<size_t>> NormalFan::signature() const {
  std::set<std::set<size_t>> sig;
  for (const auto& c : cones) sig.insert(c.active_rows);
  return sig;
}

bool is_bounded_system(const Mat& a) {
  // Recession cone {y : Ay <= 0} is trivial iff its intersection with the
  // unit box contains no nonzero point; all such points appear among basic
  // feasible points of the boxed system.
  size_t n = a.cols(), m = a.rows();
  Mat boxed(m + 2 * n, n);
  RatVec rhs(m + 2 * n, Rat(0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) boxed(i, j) = a(i, j);
  for (size_t j = 0; j < n; ++j) {
    boxed(m + 2 * j, j) = 1;
    boxed(m + 2 * j + 1, j) = -1;
    rhs[m + 2 * j] = 1;
    rhs[m + 2 * j + 1] = 1;
  }
  for (const RatVec& p : basic_feasible_points(boxed, rhs))
    if (!is_zero_vec(p)) return false;
  return true;
}

VRep vertices(const HRep& h, bool check_bounded) {
  if (check_bounded && !is_bounded_system(h.A))
    throw DomainError("vertices: unbounded system (cone(A^T) != R^n)");
  return VRep{basic_feasible_points(h.A, h.b)};
}

Rat support(const VRep& v, const RatVec& z) {
  if (v.empty()) throw DomainError("support: empty polytope");
  Rat best = dot(z, v.vertices[0]);
  for (size_t i = 1; i < v.vertices.size(); ++i) best = std::max(best, dot(z, v.vertices[i]));
  return best;
}

VRep minkowski(const std::vector<VRep>& parts, const RatVec& weights) {
  if (weights.size() != parts.size())
    throw std::invalid_argument("minkowski: |weights| != |parts|");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw DomainError("minkowski: empty part");
    if (weights[i] < 0) throw DomainError("minkowski: negative weight");
  }
  size_t n = parts.empty() ? 0 : parts[0].dim();
  std::vector<RatVec> candidates{RatVec(n, Rat(0))};
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<RatVec> next;
    for (const RatVec& base : candidates)
      for (const RatVec& v : parts[i].vertices) {
        RatVec s = vec_add(base, vec_scale(weights[i], v));
        if (std::find(next.begin(), next.end(), s) == next.end()) next.push_back(std::move(s));
      }
    candidates = std::move(next);
  }
  // Keep the extreme points only.
  std::vector<RatVec> extreme;
  for (size_t i = 0; i < candidates.size(); ++i) {
    std::vector<RatVec> others;
    for (size_t j = 0; j < candidates.size(); ++j)
      if (j != i) others.push_back(candidates[j]);
    if (others.empty() || !in_convex_hull(others, candidates[i]))
      extreme.push_back(candidates[i]);
  }
  return VRep{std::move(extreme)};
}

Denominators denominators(const VRep& v) {
  if (v.empty()) throw DomainError("denominators: empty polytope");
  Int lcm_den = 1;
  for (const auto& vert : v.vertices)
    for (const Rat& x : vert)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  Int g = 0;
  for (const auto& vert : v.vertices)
    for (const Rat& x : vert) {
      Int num = x.get_num() * (lcm_den / x.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
  if (g == 0) g = 1;  // all-zero polytope
  Rat denrat(lcm_den, g);
  denrat.canonicalize();
  return Denominators{lcm_den, denrat};
}

size_t affine_dim(const VRep& v) {
  if (v.empty()) throw DomainError("affine_dim: empty polytope");
  if (v.vertices.size() == 1) return 0;
  std::vector<RatVec> diffs;
  for (size_t i = 1; i < v.vertices.size(); ++i)
    diffs.push_back(vec_sub(v.vertices[i], v.vertices[0]));
  return rank(Mat::from_rows(diffs));
}

namespace {

// Exact coordinates of points within their affine hull: each point maps to
// its coefficient vector over a maximal independent set of difference
// directions. Injective affine map; preserves the face lattice.
std::vector<RatVec> chart_coordinates(const std::vector<RatVec>& pts, size_t target_dim) {
  const RatVec& p0 = pts[0];
  std::vector<RatVec> basis;
  for (size_t i = 1; i < pts.size() && basis.size() < target_dim; ++i) {
    RatVec d = vec_sub(pts[i], p0);
    std::vector<RatVec> trial = basis;
    trial.push_back(d);
    if (rank(Mat::from_rows(trial)) == trial.size()) basis = std::move(trial);
  }
  if (basis.size() != target_dim) throw InternalError("chart_coordinates: rank deficit");
  // Solve B y = p - p0 for each point (B has the basis as columns). The
  // system is consistent, so a square subsystem of r independent rows of B
  // determines the unique solution; the subsystem depends only on B.
  size_t amb = p0.size(), r = target_dim;
  std::vector<size_t> row_idx;
  {
    std::vector<RatVec> acc;
    for (size_t i = 0; i < amb && row_idx.size() < r; ++i) {
      RatVec brow(r);
      for (size_t j = 0; j < r; ++j) brow[j] = basis[j][i];
      std::vector<RatVec> trial = acc;
      trial.push_back(brow);
      if (rank(Mat::from_rows(trial)) == trial.size()) {
        acc = std::move(trial);
        row_idx.push_back(i);
      }
    }
  }
  if (row_idx.size() != r) throw InternalError("chart_coordinates: rank deficit in basis");
  Mat sq(r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) sq(i, j) = basis[j][row_idx[i]];
  std::vector<RatVec> coords;
  for (const RatVec& p : pts) {
    RatVec rhs(r);
    for (size_t i = 0; i < r; ++i) rhs[i] = p[row_idx[i]] - p0[row_idx[i]];
    auto y = solve(sq, rhs);
    if (!y) throw InternalError("chart_coordinates: inconsistent chart solve");
    coords.push_back(std::move(*y));
  }
  return coords;
}

struct FacetIdx {
  RatVec normal;
  Rat offset;
  std::vector<size_t> members;  // indices of points on the facet
};

// Facets of conv(pts) where pts affinely span the ambient space R^d.
std::vector<FacetIdx> brute_facets(const std::vector<RatVec>& pts) {
  size_t d = pts[0].size();
  std::vector<FacetIdx> out;
  std::vector<std::pair<RatVec, Rat>> seen;
  for_each_subset(pts.size(), d, [&](const std::vector<size_t>& idx) {
    // Hyperplane through the chosen d points, if affinely independent.
    if (d == 0) return;
    std::vector<RatVec> diffs;
    for (size_t i = 1; i < d; ++i) diffs.push_back(vec_sub(pts[idx[i]], pts[idx[0]]));
    RatVec u;
    if (d == 1) {
      u = RatVec{Rat(1)};
    } else {
      auto ns = nullspace(Mat::from_rows(diffs));
      if (ns.size() != 1) return;  // affinely dependent (or degenerate span)
      u = ns[0];
    }
    Rat c = dot(u, pts[idx[0]]);
    int side = 0;  // -1: some below, +1: some above
    for (const RatVec& p : pts) {
      Rat s = dot(u, p) - c;
      if (s > 0) {
        if (side < 0) return;  // points on both sides: not a facet
        side = 1;
      } else if (s < 0) {
        if (side > 0) return;
        side = -1;
      }
    }
    if (side == 0) return;  // everything on the hyperplane; lower-dimensional input
    if (side > 0) {
      for (Rat& x : u) x = -x;
      c = -c;
    }
    RatVec prim = primitive(u);
    // primitive() preserves direction; rescale the offset consistently.
    Rat scale_factor;
    for (size_t i = 0; i < u.size(); ++i)
      if (u[i] != 0) {
        scale_factor = prim[i] / u[i];
        break;
      }
    Rat prim_c = scale_factor * c;
    for (const auto& s : seen)
      if (s.first == prim && s.second == prim_c) return;
    seen.emplace_back(prim, prim_c);
    FacetIdx f{prim, prim_c, {}};
    for (size_t i = 0; i < pts.size(); ++i)
      if (dot(prim, pts[i]) == prim_c) f.members.push_back(i);
    out.push_back(std::move(f));
  });
  return out;
}

// Triangulation of conv(pts) (pts affinely spanning R^d) into d-simplices,
// returned as index lists into pts. Recursive boundary triangulation from
// the first point.
std::vector<std::vector<size_t>> triangulate(const std::vector<RatVec>& pts) {
  size_t d = pts[0].size();
  if (d == 0 || pts.size() == 1) return {{0}};
  if (d == 1) {
    // Segment: min and max.
    size_t lo = 0, hi = 0;
    for (size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    return {{lo, hi}};
  }
  std::vector<std::vector<size_t>> simplices;
  for (const FacetIdx& f : brute_facets(pts)) {
    if (std::find(f.members.begin(), f.members.end(), size_t{0}) != f.members.end()) continue;
    std::vector<RatVec> fpts;
    for (size_t i : f.members) fpts.push_back(pts[i]);
    std::vector<RatVec> coords = chart_coordinates(fpts, d - 1);
    for (const auto& sub : triangulate(coords)) {
      std::vector<size_t> simplex{0};
      for (size_t local : sub) simplex.push_back(f.members[local]);
      simplices.push_back(std::move(simplex));
    }
  }
  return simplices;
}

}  // namespace

std::vector<Facet> facets(const VRep& v) {
  if (v.empty()) throw DomainError("facets: empty polytope");
  if (affine_dim(v) != v.dim()) throw DomainError("facets: polytope not full-dimensional");
  std::vector<Facet> out;
  for (const FacetIdx& f : brute_facets(v.vertices)) out.push_back(Facet{f.normal, f.offset});
  return out;
}

Rat volume(const VRep& v) {
  if (v.empty()) return 0;
  size_t n = v.dim();
  if (n == 0) return 0;
  if (affine_dim(v) < n) return 0;
  Rat total = 0;
  Int nfact = 1;
  for (size_t i = 2; i <= n; ++i) nfact *= i;
  for (const auto& simplex : triangulate(v.vertices)) {
    Mat edge(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        edge(i, j) = v.vertices[simplex[i + 1]][j] - v.vertices[simplex[0]][j];
    Rat d = det(edge);
    total += abs(d);
  }
  return total / Rat(nfact);
}

NormalFan normal_fan(const HRep& h) {
  VRep v = vertices(h);
  if (v.empty()) throw DomainError("normal_fan: empty polytope");
  NormalFan fan;
  for (const RatVec& vert : v.vertices) {
    NormalFan::Cone cone;
    cone.vertex = vert;
    for (size_t i = 0; i < h.num_rows(); ++i)
      if (dot(h.A.row(i), vert) == h.b[i]) cone.active_rows.insert(i);
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

bool contains(const HRep& h, const RatVec& x) {
  for (size_t i = 0; i < h.num_rows(); ++i)
    if (dot(h.A.row(i), x) > h.b[i]) return false;
  return true;
}

bool contains_strictly(const HRep& h, const RatVec& x) {
  for (size_t i = 0; i < h.num_rows(); ++i)
    if (dot(h.A.row(i), x) >= h.b[i]) return false;
  return true;
}

VRep scale(const VRep& v, const Rat& t) {
  if (t == 0) return VRep{{RatVec(v.dim(), Rat(0))}};
  VRep out;
  for (const auto& vert : v.vertices) out.vertices.push_back(vec_scale(t, vert));
  return out;
}

}  // namespace vecdil
