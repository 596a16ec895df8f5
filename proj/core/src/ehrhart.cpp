#include "vecdil/ehrhart.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace vecdil {

namespace {

RatVec ones(size_t k) { return RatVec(k, Rat(1)); }

size_t simplex_norm(const MPoly::Expo& e) {
  size_t s = 0;
  for (int x : e) s += size_t(x);
  return s;
}

// All multi-indices in the full box {0..n}^k, linearized with stride
// (n+1)^j in coordinate j.
std::vector<MPoly::Expo> box_indices(size_t k, size_t n) {
  std::vector<MPoly::Expo> out;
  MPoly::Expo e(k, 0);
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == k) {
      out.push_back(e);
      return;
    }
    for (int v = 0; v <= int(n); ++v) {
      e[pos] = v;
      rec(pos + 1);
    }
    e[pos] = 0;
  };
  rec(0);
  return out;
}

size_t linear_index(const MPoly::Expo& u, size_t n) {
  size_t idx = 0, stride = 1;
  for (int x : u) {
    idx += size_t(x) * stride;
    stride *= (n + 1);
  }
  return idx;
}

// Solves the tensor-product Vandermonde system
//   sum_I g_I prod_j nodes[j][U_j]^{I_j} = values[U],  U in {0..n}^k,
// factor by factor along each dimension.
std::vector<Rat> tensor_vandermonde_solve(size_t k, size_t n,
                                          const std::vector<std::vector<Rat>>& nodes,
                                          std::vector<Rat> values) {
  size_t side = n + 1;
  size_t total = 1;
  for (size_t j = 0; j < k; ++j) total *= side;
  size_t stride = 1;
  for (size_t j = 0; j < k; ++j) {
    Mat v(side, side);
    for (size_t u = 0; u < side; ++u) {
      Rat p = 1;
      for (size_t i = 0; i < side; ++i) {
        v(u, i) = p;
        p *= nodes[j][u];
      }
    }
    auto vinv = inverse(v);
    if (!vinv) throw InternalError("tensor_vandermonde_solve: coincident shift nodes");
    // Apply vinv along dimension j for every slice.
    for (size_t base = 0; base < total; ++base) {
      if ((base / stride) % side != 0) continue;
      RatVec slice(side);
      for (size_t u = 0; u < side; ++u) slice[u] = values[base + u * stride];
      RatVec solved = vinv->mul(slice);
      for (size_t u = 0; u < side; ++u) values[base + u * stride] = solved[u];
    }
    stride *= side;
  }
  return values;
}

Int factorial(size_t x) {
  Int f = 1;
  for (size_t i = 2; i <= x; ++i) f *= i;
  return f;
}

}  // namespace

bool QPCell::strictly_contains(const RatVec& r) const {
  for (size_t i = 0; i < wall_normals.size(); ++i)
    if (dot(wall_normals[i], r) >= wall_offsets[i]) return false;
  return true;
}

RatVec MultiQuasiPoly::reduce(const RatVec& r) const {
  RatVec out(r.size());
  for (size_t j = 0; j < r.size(); ++j) {
    Rat q = r[j] / periods[j];
    out[j] = r[j] - periods[j] * Rat(rat_floor(q));
  }
  return out;
}

CoeffVector MultiQuasiPoly::coefficients(const RatVec& r) const {
  RatVec red = reduce(r);
  for (const QPCell& cell : cells) {
    if (!cell.strictly_contains(red)) continue;
    CoeffVector cv;
    cv.point = r;
    for (const auto& [i, poly] : cell.coeffs) cv.values[i] = poly.eval(red);
    return cv;
  }
  // On a wall: exact pointwise extraction.
  CoeffVector cv = coeffs_at(parts, red);
  cv.point = r;
  return cv;
}

Rat MultiQuasiPoly::evaluate(const RatVec& r) const {
  CoeffVector cv = coefficients(r);
  Rat total = 0;
  for (const auto& [i, val] : cv.values) {
    Rat term = val;
    for (size_t j = 0; j < arity; ++j)
      for (int p = 0; p < i[j]; ++p) term *= r[j];
    total += term;
  }
  return total;
}

CoeffVector coeffs_at(const std::vector<VRep>& parts, const RatVec& r, uint64_t max_points) {
  size_t k = parts.size();
  if (k == 0 || r.size() != k) throw std::invalid_argument("coeffs_at: arity mismatch");
  for (const Rat& x : r)
    if (x < 0) throw DomainError("coeffs_at: negative argument");
  // Lower-dimensional sums are allowed here; the box-coefficient vanishing
  // check below catches inputs whose counting function is not of this shape.
  size_t n = parts[0].dim();
  RatVec d(k);
  for (size_t j = 0; j < k; ++j) d[j] = denominators(parts[j]).denrat;

  std::vector<MPoly::Expo> box = box_indices(k, n);
  std::vector<Rat> values(box.size());
  for (const MPoly::Expo& u : box) {
    RatVec weights(k);
    for (size_t j = 0; j < k; ++j) weights[j] = r[j] + Rat(u[j]) * d[j];
    values[linear_index(u, n)] = Rat(long(count_minkowski(parts, weights, max_points)));
  }
  std::vector<std::vector<Rat>> nodes(k, std::vector<Rat>(n + 1));
  for (size_t j = 0; j < k; ++j)
    for (size_t u = 0; u <= n; ++u) nodes[j][u] = r[j] + Rat(long(u)) * d[j];
  std::vector<Rat> solved = tensor_vandermonde_solve(k, n, nodes, std::move(values));

  CoeffVector cv;
  cv.point = r;
  for (const MPoly::Expo& i : box) {
    const Rat& g = solved[linear_index(i, n)];
    if (simplex_norm(i) > n) {
      if (g != 0) throw InternalError("coeffs_at: nonzero coefficient beyond total degree");
    } else {
      cv.values[i] = g;
    }
  }
  return cv;
}

namespace {

struct Wall {
  RatVec normal;  // in r-space, primitive with sign-canonical first entry
  Rat offset;
};

std::vector<Wall> candidate_walls(const std::vector<VRep>& parts, const RatVec& periods,
                                  size_t n, uint64_t max_points, bool half_refine) {
  size_t k = parts.size();
  VRep generic_sum = minkowski(parts, ones(k));
  std::vector<Facet> fs = facets(generic_sum);

  RatVec big_weights(k);
  for (size_t j = 0; j < k; ++j) big_weights[j] = Rat(long(n + 1)) * periods[j];
  VRep big = minkowski(parts, big_weights);
  std::vector<RatVec> zs = lattice_points(big, max_points);

  std::vector<Wall> walls;
  auto push_wall = [&](RatVec s, Rat c) {
    // Canonical direction: first nonzero coordinate positive.
    for (const Rat& x : s) {
      if (x == 0) continue;
      if (x < 0) {
        s = vec_scale(Rat(-1), s);
        c = -c;
      }
      break;
    }
    RatVec prim = primitive(s);
    Rat fct;
    for (size_t i = 0; i < s.size(); ++i)
      if (s[i] != 0) {
        fct = prim[i] / s[i];
        break;
      }
    c *= fct;
    // Keep only walls that cut the open fundamental box.
    Rat lo = 0, hi = 0;
    for (size_t j = 0; j < k; ++j) {
      Rat edge = prim[j] * periods[j];
      if (edge > 0)
        hi += edge;
      else
        lo += edge;
    }
    if (!(lo < c && c < hi)) return;
    for (const Wall& w : walls)
      if (w.normal == prim && w.offset == c) return;
    walls.push_back(Wall{prim, c});
  };

  for (const Facet& f : fs) {
    RatVec s(k);
    bool nonzero = false;
    for (size_t j = 0; j < k; ++j) {
      s[j] = support(parts[j], f.normal);
      if (s[j] != 0) nonzero = true;
    }
    if (!nonzero) continue;
    for (const RatVec& z : zs) {
      Rat c = dot(f.normal, z);
      push_wall(s, c);
      if (half_refine) {
        push_wall(s, c + Rat(1, 2));
        push_wall(s, c - Rat(1, 2));
      }
    }
  }
  return walls;
}

struct RawCell {
  std::vector<RatVec> normals;
  RatVec offsets;
  std::vector<RatVec> verts;
};

std::vector<RatVec> cell_vertices(const std::vector<RatVec>& normals, const RatVec& offsets) {
  return vertices(HRep(Mat::from_rows(normals), offsets), false).vertices;
}

std::vector<RawCell> split_cells(size_t k, const RatVec& periods, const std::vector<Wall>& walls) {
  RawCell box;
  for (size_t j = 0; j < k; ++j) {
    RatVec lo(k, Rat(0)), hi(k, Rat(0));
    lo[j] = -1;
    hi[j] = 1;
    box.normals.push_back(lo);
    box.offsets.push_back(0);
    box.normals.push_back(hi);
    box.offsets.push_back(periods[j]);
  }
  box.verts = cell_vertices(box.normals, box.offsets);
  std::vector<RawCell> cells{box};
  for (const Wall& w : walls) {
    std::vector<RawCell> next;
    for (RawCell& cell : cells) {
      bool below = false, above = false;
      for (const RatVec& v : cell.verts) {
        Rat s = dot(w.normal, v);
        if (s < w.offset) below = true;
        if (s > w.offset) above = true;
      }
      if (below && above) {
        RawCell lo = cell, hi = cell;
        lo.normals.push_back(w.normal);
        lo.offsets.push_back(w.offset);
        hi.normals.push_back(vec_scale(Rat(-1), w.normal));
        hi.offsets.push_back(-w.offset);
        lo.verts = cell_vertices(lo.normals, lo.offsets);
        hi.verts = cell_vertices(hi.normals, hi.offsets);
        next.push_back(std::move(lo));
        next.push_back(std::move(hi));
      } else {
        next.push_back(std::move(cell));
      }
    }
    cells = std::move(next);
  }
  return cells;
}

RatVec centroid(const std::vector<RatVec>& pts) {
  RatVec c(pts[0].size(), Rat(0));
  for (const RatVec& p : pts) c = vec_add(c, p);
  return vec_scale(Rat(1, long(pts.size())), c);
}

// Distinct interior sample points of a cell: centroid plus seeded random
// convex combinations of the vertices.
std::vector<RatVec> interior_samples(const RawCell& cell, size_t count, std::mt19937& rng) {
  std::vector<RatVec> samples{centroid(cell.verts)};
  std::uniform_int_distribution<int> coin(1, 53);
  size_t guard = 0;
  while (samples.size() < count && guard++ < 4000) {
    RatVec p(cell.verts[0].size(), Rat(0));
    Rat total = 0;
    for (const RatVec& v : cell.verts) {
      Rat w(coin(rng));
      p = vec_add(p, vec_scale(w, v));
      total += w;
    }
    p = vec_scale(1 / total, p);
    if (std::find(samples.begin(), samples.end(), p) == samples.end()) samples.push_back(std::move(p));
  }
  if (samples.size() < count) throw InternalError("interior_samples: could not draw enough points");
  return samples;
}

bool fit_cell(const std::vector<VRep>& parts, size_t n, const RawCell& raw, QPCell& out,
              uint64_t max_points, std::mt19937& rng) {
  size_t k = parts.size();
  size_t max_basis = exponents_up_to(k, int(n)).size();
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<RatVec> pts = interior_samples(raw, max_basis + 3 + size_t(attempt) * 2, rng);
    std::vector<CoeffVector> cvs;
    for (const RatVec& p : pts) cvs.push_back(coeffs_at(parts, p, max_points));
    QPCell cell;
    cell.wall_normals = raw.normals;
    cell.wall_offsets = raw.offsets;
    cell.sample = pts[0];
    bool ok = true;
    for (const MPoly::Expo& i : exponents_up_to(k, int(n))) {
      std::vector<int> caps(k);
      for (size_t j = 0; j < k; ++j) caps[j] = int(n) - i[j];
      auto basis = exponents_up_to(k, int(n) - int(simplex_norm(i)), caps);
      std::vector<std::pair<RatVec, Rat>> samples;
      for (size_t t = 0; t < pts.size(); ++t) samples.emplace_back(pts[t], cvs[t].values.at(i));
      auto poly = fit_polynomial(k, basis, samples);
      if (!poly) {
        ok = false;
        break;
      }
      cell.coeffs[i] = std::move(*poly);
    }
    if (ok) {
      out = std::move(cell);
      return true;
    }
  }
  return false;
}

}  // namespace

MultiQuasiPoly reconstruct_minkowski(const std::vector<VRep>& parts, uint64_t max_points) {
  size_t k = parts.size();
  if (k == 0 || k > 3) throw DomainError("reconstruct_minkowski: arity out of desk-scale range");
  size_t n = parts[0].dim();
  if (affine_dim(minkowski(parts, ones(k))) != n)
    throw DomainError("reconstruct_minkowski: Minkowski sum not full-dimensional");

  MultiQuasiPoly qp;
  qp.parts = parts;
  qp.arity = k;
  qp.degree = n;
  qp.periods.resize(k);
  for (size_t j = 0; j < k; ++j) qp.periods[j] = denominators(parts[j]).denrat;

  std::mt19937 rng(0xE47A11);
  for (int round = 0; round < 2; ++round) {
    bool half_refine = round > 0;
    std::vector<Wall> walls = candidate_walls(parts, qp.periods, n, max_points, half_refine);
    std::vector<RawCell> raws = split_cells(k, qp.periods, walls);
    qp.cells.clear();
    bool all_ok = true;
    for (const RawCell& raw : raws) {
      QPCell cell;
      if (!fit_cell(parts, n, raw, cell, max_points, rng)) {
        all_ok = false;
        break;
      }
      qp.cells.push_back(std::move(cell));
    }
    if (all_ok) return qp;
  }
  throw InternalError("reconstruct_minkowski: cell verification failed after refinement");
}

MultiQuasiPoly reconstruct_univariate(const VRep& p, uint64_t max_points) {
  return reconstruct_minkowski({p}, max_points);
}

bool derivative_check(const MultiQuasiPoly& qp, size_t cell_index, const MPoly::Expo& i_index,
                      size_t j) {
  if (simplex_norm(i_index) >= qp.degree)
    throw std::invalid_argument("derivative_check: |I| must be < n");
  const QPCell& cell = qp.cells.at(cell_index);
  MPoly::Expo up = i_index;
  ++up[j];
  const MPoly& p_i = cell.coeffs.at(i_index);
  const MPoly& p_up = cell.coeffs.at(up);
  return p_i.derivative(j) == p_up.scaled(Rat(-(i_index[j] + 1)));
}

bool derivative_check_all(const MultiQuasiPoly& qp) {
  for (size_t c = 0; c < qp.cells.size(); ++c)
    for (const auto& [i, poly] : qp.cells[c].coeffs) {
      if (simplex_norm(i) >= qp.degree) continue;
      for (size_t j = 0; j < qp.arity; ++j)
        if (!derivative_check(qp, c, i, j)) return false;
    }
  return true;
}

std::map<MPoly::Expo, Rat> mixed_volumes(const std::vector<VRep>& parts) {
  size_t k = parts.size();
  size_t n = parts[0].dim();
  if (affine_dim(minkowski(parts, ones(k))) != n)
    throw DomainError("mixed_volumes: Minkowski sum not full-dimensional");
  std::vector<MPoly::Expo> basis;
  for (const MPoly::Expo& e : exponents_up_to(k, int(n)))
    if (simplex_norm(e) == n) basis.push_back(e);

  std::mt19937 rng(0x517ED);
  std::uniform_int_distribution<int> coin(1, 23);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<std::pair<RatVec, Rat>> samples;
    std::vector<RatVec> seen;
    while (samples.size() < basis.size() + 3) {
      RatVec w(k);
      for (size_t j = 0; j < k; ++j) w[j] = rat(coin(rng), 7);
      if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
      seen.push_back(w);
      samples.emplace_back(w, volume(minkowski(parts, w)));
    }
    auto poly = fit_polynomial(k, basis, samples);
    if (!poly) continue;
    std::map<MPoly::Expo, Rat> out;
    Int nfact = factorial(n);
    for (const MPoly::Expo& i : basis) {
      Rat coef = 0;
      auto it = poly->terms().find(i);
      if (it != poly->terms().end()) coef = it->second;
      Int ifact = 1;
      for (int x : i) ifact *= factorial(size_t(x));
      out[i] = coef * Rat(ifact) / Rat(nfact);
    }
    return out;
  }
  throw InternalError("mixed_volumes: rank-deficient volume fit");
}

bool mcmullen_class_check(const std::vector<VRep>& parts, const RatVec& r, const RatVec& s,
                          const std::vector<RatVec>& generators, uint64_t max_points) {
  bool same_class;
  if (!generators.empty())
    same_class = equivalent(r, s, generators);
  else
    same_class = minkowski(parts, r) == minkowski(parts, s);
  if (!same_class) throw DomainError("mcmullen_class_check: arguments not equivalent");
  CoeffVector cr = coeffs_at(parts, r, max_points);
  CoeffVector cs = coeffs_at(parts, s, max_points);
  return cr.values == cs.values;
}

bool RhsQuasiPoly::in_closure(const RatVec& b) const {
  for (const Rat& x : chamber.closure.mul(b))
    if (x > 0) return false;
  return true;
}

std::map<MPoly::Expo, Rat> RhsQuasiPoly::gamma_at(const RatVec& b, uint64_t max_points) const {
  if (!in_closure(b)) throw DomainError("RhsQuasiPoly: b outside the chamber closure");
  RatVec lambda = h_inv.mul(b);
  std::vector<MPoly::Expo> box = box_indices(m, n);
  std::vector<Rat> values(box.size());
  for (const MPoly::Expo& u : box) {
    RatVec shifted = b;
    for (size_t i = 0; i < m; ++i)
      if (u[i] > 0) shifted = vec_add(shifted, vec_scale(Rat(u[i]) * periods[i], generators[i]));
    values[linear_index(u, n)] = Rat(long(count(HRep(a, shifted), max_points, false)));
  }
  std::vector<std::vector<Rat>> nodes(m, std::vector<Rat>(n + 1));
  for (size_t i = 0; i < m; ++i)
    for (size_t u = 0; u <= n; ++u) nodes[i][u] = lambda[i] + Rat(long(u)) * periods[i];
  std::vector<Rat> solved = tensor_vandermonde_solve(m, n, nodes, std::move(values));
  std::map<MPoly::Expo, Rat> out;
  for (const MPoly::Expo& i : box) {
    const Rat& g = solved[linear_index(i, n)];
    if (simplex_norm(i) > n) {
      if (g != 0) throw InternalError("RhsQuasiPoly: nonzero coefficient beyond total degree");
    } else {
      out[i] = g;
    }
  }
  return out;
}

Rat rhs_basis_weight(const Mat& h_inv, const MPoly::Expo& i_index, const MPoly::Expo& j_index) {
  size_t m = i_index.size();
  // Sum over matrices K with row sums I and column sums J of
  // binom(I, K) * prod_{ij} (H^-1)_{ij}^{K_ij}.
  Rat total = 0;
  std::vector<std::vector<int>> k_mat(m, std::vector<int>(m, 0));
  std::vector<int> col_used(m, 0);
  std::function<void(size_t, Rat)> fill_row = [&](size_t row, Rat acc) {
    if (row == m) {
      for (size_t j = 0; j < m; ++j)
        if (col_used[j] != j_index[j]) return;
      total += acc;
      return;
    }
    // Compositions of I_row across the m columns, bounded by column budget.
    std::function<void(size_t, int, Rat)> fill_col = [&](size_t col, int remaining, Rat racc) {
      if (col == m) {
        if (remaining == 0) fill_row(row + 1, racc);
        return;
      }
      int cap = std::min(remaining, j_index[col] - col_used[col]);
      for (int v = 0; v <= cap; ++v) {
        k_mat[row][col] = v;
        col_used[col] += v;
        Rat f = racc / Rat(factorial(size_t(v)));
        for (int p = 0; p < v; ++p) f *= h_inv(row, col);
        fill_col(col + 1, remaining - v, f);
        col_used[col] -= v;
        k_mat[row][col] = 0;
      }
    };
    fill_col(0, i_index[row], acc * Rat(factorial(size_t(i_index[row]))));
  };
  fill_row(0, Rat(1));
  return total;
}

std::map<MPoly::Expo, Rat> RhsQuasiPoly::phi_at(const RatVec& b, uint64_t max_points) const {
  auto gammas = gamma_at(b, max_points);
  std::map<MPoly::Expo, Rat> out;
  for (const MPoly::Expo& j : exponents_up_to(m, int(n))) {
    Rat total = 0;
    for (const auto& [i, g] : gammas) {
      if (simplex_norm(i) != simplex_norm(j)) continue;
      total += g * rhs_basis_weight(h_inv, i, j);
    }
    out[j] = total;
  }
  return out;
}

Rat RhsQuasiPoly::evaluate(const RatVec& b, uint64_t max_points) const {
  Rat total = 0;
  for (const auto& [j, phi] : phi_at(b, max_points)) {
    Rat term = phi;
    for (size_t t = 0; t < m; ++t)
      for (int p = 0; p < j[t]; ++p) term *= b[t];
    total += term;
  }
  return total;
}

Rat RhsQuasiPoly::leading_term(const RatVec& b, uint64_t max_points) const {
  Rat total = 0;
  for (const auto& [j, phi] : phi_at(b, max_points)) {
    if (simplex_norm(j) != n) continue;
    Rat term = phi;
    for (size_t t = 0; t < m; ++t)
      for (int p = 0; p < j[t]; ++p) term *= b[t];
    total += term;
  }
  return total;
}

RhsQuasiPoly reconstruct_rhs(const Mat& a, const Chamber& ch) {
  RhsQuasiPoly rqp;
  rqp.a = a;
  rqp.chamber = ch;
  rqp.n = a.cols();
  rqp.m = a.rows();
  if (cone_dim(ch.closure, ch.generators) != rqp.m)
    throw DomainError("reconstruct_rhs: chamber closure not full-dimensional");
  // Reorder generators so the first m are linearly independent.
  std::vector<RatVec> indep, rest;
  for (const RatVec& g : ch.generators) {
    std::vector<RatVec> trial = indep;
    trial.push_back(g);
    if (indep.size() < rqp.m && rank(Mat::from_rows(trial)) == trial.size())
      indep.push_back(g);
    else
      rest.push_back(g);
  }
  if (indep.size() != rqp.m) throw DomainError("reconstruct_rhs: generator degeneracy");
  rqp.generators = indep;
  rqp.generators.insert(rqp.generators.end(), rest.begin(), rest.end());
  Mat h(rqp.m, rqp.m);
  for (size_t j = 0; j < rqp.m; ++j)
    for (size_t i = 0; i < rqp.m; ++i) h(i, j) = indep[j][i];
  rqp.h = h;
  auto hinv = inverse(h);
  if (!hinv) throw InternalError("reconstruct_rhs: singular generator matrix");
  rqp.h_inv = *hinv;
  rqp.periods.resize(rqp.m);
  for (size_t i = 0; i < rqp.m; ++i) {
    VRep pv = vertices(HRep(a, indep[i]));
    if (pv.empty()) throw DomainError("reconstruct_rhs: generator polytope empty");
    rqp.periods[i] = denominators(pv).denrat;
  }
  return rqp;
}

std::optional<RhsLocalForm> rhs_local_form(const RhsQuasiPoly& rqp, const RatVec& b0,
                                           uint64_t max_points) {
  size_t n = rqp.n, m = rqp.m;
  // Integer simplex directions: a principal interpolation lattice around b0.
  std::vector<MPoly::Expo> deltas = exponents_up_to(m, int(n));
  std::stable_sort(deltas.begin(), deltas.end(),
                   [](const MPoly::Expo& x, const MPoly::Expo& y) {
                     return simplex_norm(x) < simplex_norm(y);
                   });
  // Held-out offsets off the lattice.
  std::vector<RatVec> extras;
  for (size_t t = 0; t < 3 && t < m; ++t) {
    RatVec e(m, Rat(0));
    e[t] = Rat(1, 2 + long(t));
    extras.push_back(e);
  }
  Rat eps(1, 16);
  for (int attempt = 0; attempt < 5; ++attempt, eps /= 8) {
    std::vector<RatVec> points;
    for (const MPoly::Expo& d : deltas) {
      RatVec p = b0;
      for (size_t i = 0; i < m; ++i) p[i] += eps * Rat(d[i]);
      points.push_back(std::move(p));
    }
    for (const RatVec& e : extras) points.push_back(vec_add(b0, vec_scale(eps, e)));
    bool inside = true;
    for (const RatVec& p : points)
      if (!rqp.in_closure(p)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    std::vector<std::map<MPoly::Expo, Rat>> gammas;
    gammas.reserve(points.size());
    for (const RatVec& p : points) gammas.push_back(rqp.gamma_at(p, max_points));

    std::map<MPoly::Expo, MPoly> gamma_polys;
    bool ok = true;
    for (const MPoly::Expo& i : exponents_up_to(m, int(n))) {
      int deg = int(n) - int(simplex_norm(i));
      // Samples ordered so the first block is the principal lattice of the
      // right degree (unisolvent), the rest verify.
      std::vector<std::pair<RatVec, Rat>> samples;
      for (size_t t = 0; t < deltas.size(); ++t)
        if (int(simplex_norm(deltas[t])) <= deg)
          samples.emplace_back(points[t], gammas[t].at(i));
      for (size_t t = 0; t < deltas.size(); ++t)
        if (int(simplex_norm(deltas[t])) > deg)
          samples.emplace_back(points[t], gammas[t].at(i));
      for (size_t t = 0; t < extras.size(); ++t)
        samples.emplace_back(points[deltas.size() + t], gammas[deltas.size() + t].at(i));
      auto poly = fit_polynomial(m, exponents_up_to(m, deg), samples);
      if (!poly) {
        ok = false;
        break;
      }
      gamma_polys[i] = std::move(*poly);
    }
    if (!ok) continue;
    RhsLocalForm form;
    form.base = b0;
    for (const MPoly::Expo& j : exponents_up_to(m, int(n))) {
      MPoly phi(m);
      for (const auto& [i, gpoly] : gamma_polys) {
        if (simplex_norm(i) != simplex_norm(j)) continue;
        phi = phi + gpoly.scaled(rhs_basis_weight(rqp.h_inv, i, j));
      }
      form.phi[j] = std::move(phi);
    }
    return form;
  }
  return std::nullopt;
}

bool rhs_derivative_check(const RhsLocalForm& form, size_t n, size_t m) {
  for (const auto& [j, phi] : form.phi) {
    if (simplex_norm(j) >= n) continue;
    for (size_t l = 0; l < m; ++l) {
      MPoly::Expo up = j;
      ++up[l];
      if (!(phi.derivative(l) == form.phi.at(up).scaled(Rat(-(j[l] + 1))))) return false;
    }
  }
  return true;
}

}  // namespace vecdil
