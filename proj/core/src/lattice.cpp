#include "vecdil/lattice.hpp"

#include <algorithm>
#include <functional>
#include <memory>

namespace vecdil {

namespace {

struct Box {
  std::vector<Int> lo, hi;
  uint64_t cells;  // product of side counts
};

Box bounding_box(const VRep& v, uint64_t max_points) {
  size_t n = v.dim();
  Box box;
  box.lo.resize(n);
  box.hi.resize(n);
  for (size_t j = 0; j < n; ++j) {
    Rat mn = v.vertices[0][j], mx = v.vertices[0][j];
    for (const auto& vert : v.vertices) {
      mn = std::min(mn, vert[j]);
      mx = std::max(mx, vert[j]);
    }
    box.lo[j] = rat_ceil(mn);
    box.hi[j] = rat_floor(mx);
  }
  box.cells = 1;
  for (size_t j = 0; j < n; ++j) {
    if (box.hi[j] < box.lo[j]) {
      box.cells = 0;
      return box;
    }
    Int side = box.hi[j] - box.lo[j] + 1;
    if (!side.fits_ulong_p()) throw BudgetError("lattice count: box side overflow");
    uint64_t s = side.get_ui();
    if (box.cells > max_points / s + 1) throw BudgetError("lattice count: enumeration budget exceeded");
    box.cells *= s;
  }
  if (box.cells > max_points) throw BudgetError("lattice count: enumeration budget exceeded");
  return box;
}

template <typename Pred>
uint64_t count_box(const Box& box, size_t n, Pred&& pred) {
  if (box.cells == 0) return 0;
  std::vector<Int> z = box.lo;
  uint64_t total = 0;
  for (;;) {
    RatVec p(n);
    for (size_t j = 0; j < n; ++j) p[j] = Rat(z[j]);
    if (pred(p)) ++total;
    size_t j = 0;
    while (j < n && z[j] == box.hi[j]) {
      z[j] = box.lo[j];
      ++j;
    }
    if (j == n) break;
    ++z[j];
  }
  return total;
}

}  // namespace

uint64_t count(const HRep& h, uint64_t max_points, bool check_bounded) {
  VRep v = vertices(h, check_bounded);
  if (v.empty()) return 0;
  Box box = bounding_box(v, max_points);
  return count_box(box, h.dim(), [&](const RatVec& p) { return contains(h, p); });
}

uint64_t count_interior(const HRep& h, uint64_t max_points, bool check_bounded) {
  VRep v = vertices(h, check_bounded);
  if (v.empty()) return 0;
  Box box = bounding_box(v, max_points);
  return count_box(box, h.dim(), [&](const RatVec& p) { return contains_strictly(h, p); });
}

namespace {

// Membership test for conv(v): facet inequalities when full-dimensional,
// exact feasibility otherwise.
std::function<bool(const RatVec&)> hull_membership(const VRep& v) {
  if (affine_dim(v) == v.dim() && v.dim() > 0) {
    auto fs = std::make_shared<std::vector<Facet>>(facets(v));
    return [fs](const RatVec& p) {
      for (const Facet& f : *fs)
        if (dot(f.normal, p) > f.offset) return false;
      return true;
    };
  }
  auto verts = std::make_shared<std::vector<RatVec>>(v.vertices);
  return [verts](const RatVec& p) { return in_convex_hull(*verts, p); };
}

}  // namespace

uint64_t count_vrep(const VRep& v, uint64_t max_points) {
  if (v.empty()) return 0;
  Box box = bounding_box(v, max_points);
  auto member = hull_membership(v);
  return count_box(box, v.dim(), member);
}

std::vector<RatVec> lattice_points(const VRep& v, uint64_t max_points) {
  std::vector<RatVec> pts;
  if (v.empty()) return pts;
  Box box = bounding_box(v, max_points);
  auto member = hull_membership(v);
  count_box(box, v.dim(), [&](const RatVec& p) {
    if (member(p)) pts.push_back(p);
    return false;
  });
  return pts;
}

uint64_t count_minkowski(const std::vector<VRep>& parts, const RatVec& weights,
                         uint64_t max_points) {
  if (weights.size() != parts.size())
    throw std::invalid_argument("count_minkowski: |weights| != |parts|");
  for (const auto& p : parts)
    if (p.empty()) throw DomainError("count_minkowski: empty part");
  // conv of all scaled vertex sums equals the weighted Minkowski sum; no
  // extremality filtering is needed for membership tests.
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
  return count_vrep(VRep{std::move(candidates)}, max_points);
}

ReciprocityReport reciprocity_check(const HRep& h, uint64_t max_points) {
  VRep v = vertices(h);
  if (v.empty()) throw DomainError("reciprocity_check: empty polytope");
  size_t n = h.dim();
  Rat d = denominators(v).denrat;
  // Smallest t' >= 0 congruent to -1 modulo the period.
  Rat tp = rat_ceil(1 / d) * d - 1;
  Mat vand(n + 1, n + 1);
  RatVec counts(n + 1);
  for (size_t u = 0; u <= n; ++u) {
    Rat t = tp + Rat(long(u)) * d;
    Rat p = 1;
    for (size_t i = 0; i <= n; ++i) {
      vand(u, i) = p;
      p *= t;
    }
    counts[u] = Rat(long(count(HRep(h.A, vec_scale(t, h.b)), max_points, false)));
  }
  auto g = solve(vand, counts);
  if (!g) throw InternalError("reciprocity_check: coincident evaluation nodes");
  ReciprocityReport rep{};
  rep.phi_reflected = 0;
  for (size_t i = 0; i <= n; ++i) rep.phi_reflected += (i % 2 ? -(*g)[i] : (*g)[i]);
  rep.interior_count = count_interior(h, max_points);
  Rat sign = (affine_dim(v) % 2) ? Rat(-1) : Rat(1);
  rep.equal = sign * rep.phi_reflected == Rat(long(rep.interior_count));
  return rep;
}

}  // namespace vecdil
