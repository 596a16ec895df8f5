#include "vecdil/chambers.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace vecdil {

namespace {

void for_each_subset(size_t m, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
  if (k > m) return;
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Rows of K_sigma in b-space: A A_sigma^{-1} b_sigma <= b.
std::vector<RatVec> basis_cone_rows(const Mat& a, const std::vector<size_t>& sigma, const Mat& inv_sub) {
  size_t m = a.rows(), n = a.cols();
  Mat w = a.mul(inv_sub);  // m x n
  std::vector<RatVec> rows;
  for (size_t i = 0; i < m; ++i) {
    RatVec g(m, Rat(0));
    for (size_t t = 0; t < n; ++t) g[sigma[t]] += w(i, t);
    g[i] -= 1;
    if (!is_zero_vec(g)) rows.push_back(primitive(g));
  }
  return rows;
}

// Rows expressing A_sigma^{-1} b_sigma as a linear map of b.
Mat candidate_map(const Mat& inv_sub, const std::vector<size_t>& sigma, size_t m) {
  size_t n = inv_sub.rows();
  Mat map(n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < n; ++t) map(i, sigma[t]) = inv_sub(i, t);
  return map;
}

void push_unique_row(std::vector<RatVec>& rows, RatVec r) {
  if (is_zero_vec(r)) return;
  r = primitive(r);
  if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(std::move(r));
}

}  // namespace

std::vector<BasisCone> basis_cones(const Mat& a) {
  size_t n = a.cols();
  std::vector<BasisCone> cones;
  for_each_subset(a.rows(), n, [&](const std::vector<size_t>& sigma) {
    Mat sub = a.select_rows(sigma);
    auto inv = inverse(sub);
    if (!inv) return;
    std::vector<RatVec> rows = basis_cone_rows(a, sigma, *inv);
    if (rows.empty()) rows.push_back(RatVec(a.rows(), Rat(0)));
    cones.push_back(BasisCone{sigma, Mat::from_rows(rows)});
  });
  if (cones.empty()) throw DomainError("basis_cones: no nonsingular row subset");
  return cones;
}

Chamber chamber_of(const Mat& a, const RatVec& b) {
  NormalFan fan = normal_fan(HRep(a, b));  // throws on empty
  size_t m = a.rows(), n = a.cols();
  Chamber ch;
  ch.fan_signature = fan.signature();
  std::vector<RatVec> rows;
  for (const auto& cone : fan.cones) {
    std::vector<size_t> active(cone.active_rows.begin(), cone.active_rows.end());
    // All nonsingular n-subsets of the active rows contribute their basis
    // cone; a degenerate vertex additionally pins its candidate points to
    // coincide, which cuts the closure down to the right dimension.
    bool have_ref = false;
    Mat ref_map(1, 1);
    for_each_subset(active.size(), n, [&](const std::vector<size_t>& rel) {
      std::vector<size_t> sigma(n);
      for (size_t i = 0; i < n; ++i) sigma[i] = active[rel[i]];
      Mat sub = a.select_rows(sigma);
      auto inv = inverse(sub);
      if (!inv) return;
      for (RatVec& r : basis_cone_rows(a, sigma, *inv)) push_unique_row(rows, std::move(r));
      Mat cand = candidate_map(*inv, sigma, m);
      if (!have_ref) {
        ref_map = cand;
        have_ref = true;
      } else {
        for (size_t i = 0; i < n; ++i) {
          RatVec diff(m);
          for (size_t j = 0; j < m; ++j) diff[j] = ref_map(i, j) - cand(i, j);
          push_unique_row(rows, diff);
          push_unique_row(rows, vec_scale(Rat(-1), diff));
        }
      }
    });
  }
  if (rows.empty()) rows.push_back(RatVec(m, Rat(0)));
  ch.closure = Mat::from_rows(rows);
  ch.generators = cone_generators(ch.closure);
  return ch;
}

bool same_chamber(const Mat& a, const RatVec& b1, const RatVec& b2) {
  return normal_fan(HRep(a, b1)).signature() == normal_fan(HRep(a, b2)).signature();
}

bool equivalent(const RatVec& r, const RatVec& s, const std::vector<RatVec>& generators) {
  if (r.size() != generators.size() || s.size() != generators.size())
    throw std::invalid_argument("equivalent: weight length mismatch");
  size_t m = generators.empty() ? 0 : generators[0].size();
  RatVec sr(m, Rat(0)), ss(m, Rat(0));
  for (size_t i = 0; i < generators.size(); ++i) {
    sr = vec_add(sr, vec_scale(r[i], generators[i]));
    ss = vec_add(ss, vec_scale(s[i], generators[i]));
  }
  return sr == ss;
}

std::vector<RatVec> cone_generators(const Mat& g) {
  size_t m = g.cols();
  // Double description, seeded with generators of R^m.
  std::vector<RatVec> rays;
  for (size_t i = 0; i < m; ++i) {
    RatVec e(m, Rat(0));
    e[i] = 1;
    rays.push_back(e);
    e[i] = -1;
    rays.push_back(e);
  }
  auto prune = [&](std::vector<RatVec>& r) {
    std::vector<RatVec> uniq;
    for (RatVec& v : r) {
      if (is_zero_vec(v)) continue;
      RatVec p = primitive(v);
      if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(std::move(p));
    }
    // Drop rays generated by the others.
    for (size_t i = 0; i < uniq.size();) {
      std::vector<RatVec> others;
      for (size_t j = 0; j < uniq.size(); ++j)
        if (j != i) others.push_back(uniq[j]);
      if (in_cone(others, uniq[i]))
        uniq.erase(uniq.begin() + i);
      else
        ++i;
    }
    r = std::move(uniq);
  };
  for (size_t c = 0; c < g.rows(); ++c) {
    RatVec gc = g.row(c);
    if (is_zero_vec(gc)) continue;
    std::vector<RatVec> keep, pos, neg;
    for (RatVec& r : rays) {
      Rat s = dot(gc, r);
      if (s < 0)
        neg.push_back(std::move(r));
      else if (s > 0)
        pos.push_back(std::move(r));
      else
        keep.push_back(std::move(r));
    }
    for (const RatVec& p : pos)
      for (const RatVec& q : neg) {
        RatVec w = vec_sub(vec_scale(dot(gc, p), q), vec_scale(dot(gc, q), p));
        keep.push_back(std::move(w));
      }
    for (RatVec& q : neg) keep.push_back(std::move(q));
    rays = std::move(keep);
    prune(rays);
  }
  return rays;
}

size_t cone_dim(const Mat& g, const std::vector<RatVec>& generators) {
  (void)g;
  if (generators.empty()) return 0;
  return rank(Mat::from_rows(generators));
}

ContainmentReport chamber_containment_report(const Mat& a, size_t max_samples) {
  if (!is_bounded_system(a)) throw DomainError("chamber_containment_report: unbounded system");
  size_t m = a.rows();
  ContainmentReport rep;
  rep.complete = true;

  std::map<std::set<std::set<size_t>>, size_t> by_signature;
  size_t used = 0;
  auto visit = [&](const RatVec& b) {
    if (used >= max_samples) {
      rep.complete = false;
      return;
    }
    ++used;
    VRep v = vertices(HRep(a, b), false);
    if (v.empty()) return;
    auto sig = normal_fan(HRep(a, b)).signature();
    if (by_signature.count(sig)) return;
    by_signature[sig] = rep.chambers.size();
    rep.chambers.push_back(chamber_of(a, b));
  };

  // Structured grid over small rational right-hand sides.
  std::vector<Rat> values;
  if (m <= 6)
    values = {rat(-2), rat(-1), rat(0), rat(1), rat(2)};
  else
    values = {rat(-1), rat(0), rat(1)};
  std::vector<size_t> pick(m, 0);
  for (;;) {
    RatVec b(m);
    for (size_t i = 0; i < m; ++i) b[i] = values[pick[i]];
    visit(b);
    size_t i = 0;
    while (i < m && pick[i] == values.size() - 1) pick[i++] = 0;
    if (i == m) break;
    ++pick[i];
    if (!rep.complete) break;
  }

  // Boundary pass: sums of generator subsets land on chamber faces, where
  // the lower-dimensional combinatorial types live.
  size_t first_round = rep.chambers.size();
  for (size_t ci = 0; ci < first_round; ++ci) {
    const auto gens = rep.chambers[ci].generators;
    if (gens.size() > 12) continue;
    for (size_t mask = 1; mask < (size_t{1} << gens.size()); ++mask) {
      RatVec b(m, Rat(0));
      for (size_t i = 0; i < gens.size(); ++i)
        if (mask & (size_t{1} << i)) b = vec_add(b, gens[i]);
      visit(b);
      if (!rep.complete) break;
    }
  }

  // Containment relations between lower- and higher-dimensional chambers.
  std::vector<size_t> dims;
  for (const auto& ch : rep.chambers) dims.push_back(cone_dim(ch.closure, ch.generators));
  for (size_t i = 0; i < rep.chambers.size(); ++i)
    for (size_t j = 0; j < rep.chambers.size(); ++j) {
      if (i == j || dims[i] >= dims[j]) continue;
      bool inside = true;
      for (const RatVec& h : rep.chambers[i].generators) {
        RatVec img = rep.chambers[j].closure.mul(h);
        for (const Rat& x : img)
          if (x > 0) {
            inside = false;
            break;
          }
        if (!inside) break;
      }
      if (inside) rep.containments.emplace_back(i, j);
    }
  return rep;
}

}  // namespace vecdil
