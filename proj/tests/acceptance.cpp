// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failures. Every comparison is exact; any mismatch fails the criterion.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "random_instances.hpp"
#include "vecdil/ehrhart.hpp"

using namespace vecdil;

namespace {

int g_failures = 0;

void report(int num, const char* title, bool pass, double seconds) {
  std::printf("%s criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", num, title, seconds);
  if (!pass) ++g_failures;
}

template <typename F>
void criterion(int num, const char* title, F body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    pass = body();
  } catch (const std::exception& e) {
    std::printf("  criterion %d raised: %s\n", num, e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(num, title, pass, secs);
}

const RatVec kQuadB = {Rat(2), rat(7, 2), Rat(1), rat(1, 2)};
const RatVec kTriB = {Rat(1), Rat(1), Rat(2), Rat(1)};
const RatVec kLineB = {Rat(2), Rat(2), Rat(1), Rat(-1)};
const RatVec kPointB = {Rat(1), Rat(1), Rat(1), Rat(-1)};

// Every closure row is a positive scaling of an allowed inequality normal.
bool closure_matches(const Mat& closure, const std::vector<RatVec>& allowed) {
  for (size_t i = 0; i < closure.rows(); ++i) {
    RatVec p = primitive(closure.row(i));
    bool found = false;
    for (const auto& e : allowed)
      if (p == primitive(e)) found = true;
    if (!found) return false;
  }
  return true;
}

// Random b inside the requested full-dimensional chamber of the worked
// system (sign of a+b-2c selects quadrangle vs triangle).
RatVec random_chamber_point(std::mt19937& rng, bool quadrangle) {
  std::uniform_int_distribution<long> num(1, 12), den(1, 4);
  for (;;) {
    RatVec b = {rat(num(rng), den(rng)), rat(num(rng), den(rng)), rat(num(rng), den(rng)),
                rat(num(rng), den(rng))};
    Rat key = b[0] + b[1] - 2 * b[2];
    if (b[2] + b[3] <= 0 || b[0] + b[1] + 2 * b[3] <= 0) continue;
    if (quadrangle ? key > 0 : key < 0) return b;
  }
}

bool run_criterion_1() {
  MultiQuasiPoly qp = reconstruct_minkowski({oracles::square2(), oracles::triangle2()});
  std::vector<Rat> rs = {Rat(0), rat(1, 8), rat(1, 4), rat(3, 8), rat(1, 2)};
  std::vector<Rat> ss = {Rat(0), rat(1, 5), rat(1, 3), rat(5, 8), rat(6, 7)};
  for (const Rat& r : rs)
    for (const Rat& s : ss)
      if (qp.coefficients({r, s}).values != oracles::square_triangle_coeffs(r, s)) return false;
  return true;
}

bool run_criterion_2() {
  Mat a = oracles::rhs_matrix();
  const RatVec cd = {Rat(0), Rat(0), Rat(-1), Rat(-1)};    // c + d >= 0
  const RatVec abd = {Rat(-1), Rat(-1), Rat(0), Rat(-2)};  // a + b + 2d >= 0
  const RatVec abc = {Rat(-1), Rat(-1), Rat(2), Rat(0)};   // a + b - 2c >= 0
  const RatVec neg_cd = {Rat(0), Rat(0), Rat(1), Rat(1)};
  const RatVec neg_abd = {Rat(1), Rat(1), Rat(0), Rat(2)};
  const RatVec neg_abc = {Rat(1), Rat(1), Rat(-2), Rat(0)};

  Chamber quad = chamber_of(a, kQuadB);
  Chamber tri = chamber_of(a, kTriB);
  Chamber line = chamber_of(a, kLineB);
  Chamber point = chamber_of(a, kPointB);
  if (!closure_matches(quad.closure, {cd, abd, abc})) return false;
  if (!closure_matches(tri.closure, {cd, abd, neg_abc})) return false;
  if (!closure_matches(line.closure, {cd, neg_cd, abd, abc})) return false;
  if (!closure_matches(point.closure, {cd, neg_cd, abd, neg_abd, abc, neg_abc})) return false;
  // The closures enforce strict containment of the representatives only.
  if (!in_cone(quad.generators, kQuadB) || in_cone(quad.generators, kTriB)) return false;
  if (!in_cone(tri.generators, kTriB) || in_cone(tri.generators, kQuadB)) return false;

  auto rep = chamber_containment_report(a);
  auto index_of = [&](const Chamber& ch) -> int {
    for (size_t i = 0; i < rep.chambers.size(); ++i)
      if (rep.chambers[i].fan_signature == ch.fan_signature) return int(i);
    return -1;
  };
  int iq = index_of(quad), it = index_of(tri), il = index_of(line), ip = index_of(point);
  if (iq < 0 || it < 0 || il < 0 || ip < 0) return false;
  auto has = [&](int lo, int hi) {
    for (auto& [i, j] : rep.containments)
      if (int(i) == lo && int(j) == hi) return true;
    return false;
  };
  if (!has(il, iq) || !has(ip, it)) return false;

  RhsQuasiPoly rq = reconstruct_rhs(a, quad);
  RhsQuasiPoly rt = reconstruct_rhs(a, tri);
  std::mt19937 rng(2024);
  for (int side = 0; side < 2; ++side) {
    bool quadrangle = side == 0;
    for (int t = 0; t < 20; ++t) {
      RatVec b = random_chamber_point(rng, quadrangle);
      Rat brute = Rat(long(count(HRep(a, b))));
      Rat formula = quadrangle ? oracles::phi_quadrangle(b[0], b[1], b[2], b[3])
                               : oracles::phi_triangle(b[0], b[1], b[2], b[3]);
      Rat rec = (quadrangle ? rq : rt).evaluate(b);
      if (formula != brute || rec != brute) return false;
    }
  }
  return rq.evaluate(kQuadB) == 5;
}

bool run_criterion_3() {
  std::mt19937 rng(7001);
  std::uniform_int_distribution<long> num(0, 39), den(1, 10);
  for (int inst = 0; inst < 10; ++inst) {
    auto i = testgen::random_instance(rng);
    MultiQuasiPoly qp = reconstruct_univariate(i.poly);
    for (int t = 0; t < 100; ++t) {
      Rat r = rat(num(rng), 10 * den(rng));  // held-out arguments in [0, 4)
      if (qp.evaluate({r}) != Rat(long(count_vrep(scale(i.poly, r))))) return false;
    }
  }
  return true;
}

bool run_criterion_4() {
  if (!derivative_check_all(reconstruct_minkowski({oracles::square2(), oracles::triangle2()})))
    return false;
  std::mt19937 rng(7002);
  for (int inst = 0; inst < 5; ++inst) {
    auto i = testgen::random_instance(rng, 2, 5);
    if (!derivative_check_all(reconstruct_univariate(i.poly))) return false;
  }
  // The right-hand-side ladder on both full-dimensional chambers.
  Mat a = oracles::rhs_matrix();
  for (const RatVec& base : {kQuadB, kTriB}) {
    RhsQuasiPoly rqp = reconstruct_rhs(a, chamber_of(a, base));
    auto form = rhs_local_form(rqp, base);
    if (!form || !rhs_derivative_check(*form, rqp.n, rqp.m)) return false;
  }
  return true;
}

bool run_criterion_5() {
  std::mt19937 rng(7003);
  for (int inst = 0; inst < 100; ++inst) {
    auto i = testgen::random_instance(rng);
    auto rep = reciprocity_check(HRep(i.A, i.b));
    if (!rep.equal) return false;
    Rat sign = (i.A.cols() % 2) ? Rat(-1) : Rat(1);
    if (sign * rep.phi_reflected != Rat(long(rep.interior_count))) return false;
  }
  return true;
}

bool run_criterion_6() {
  auto mv = mixed_volumes({oracles::square2(), oracles::triangle2()});
  if (mv[{2, 0}] != 4 || mv[{0, 2}] != 2 || mv[{1, 1}] != 4) return false;
  // Leading coefficients 4, 8, 2 are constant in (r, s).
  std::mt19937 rng(7004);
  std::uniform_int_distribution<long> num(0, 20), den(1, 9);
  for (int t = 0; t < 20; ++t) {
    RatVec r = {rat(num(rng), 8 * den(rng)), rat(num(rng), 8 * den(rng))};
    CoeffVector cv = coeffs_at({oracles::square2(), oracles::triangle2()}, r);
    if (cv.values.at({2, 0}) != 4 || cv.values.at({1, 1}) != 8 || cv.values.at({0, 2}) != 2)
      return false;
  }
  return true;
}

bool run_criterion_7() {
  MultiQuasiPoly qp = reconstruct_minkowski({oracles::square2(), oracles::triangle2()});
  std::mt19937 rng(7005);
  std::uniform_int_distribution<long> num(0, 30), den(1, 7), axis(0, 1);
  for (int t = 0; t < 50; ++t) {
    RatVec r = {rat(num(rng), den(rng)), rat(num(rng), den(rng))};
    RatVec shifted = r;
    size_t j = size_t(axis(rng));
    shifted[j] += qp.periods[j];
    if (qp.coefficients(r).values != qp.coefficients(shifted).values) return false;
  }
  CoeffVector at0 = qp.coefficients({Rat(0), Rat(0)});
  return at0.values.at({0, 0}) == 1 && qp.evaluate({Rat(0), Rat(0)}) == 1;
}

}  // namespace

int main() {
  criterion(1, "pointwise coefficients of the square-triangle sum", run_criterion_1);
  criterion(2, "chamber decomposition and counting formulas of the 2x4 system", run_criterion_2);
  criterion(3, "reconstruction equals brute force on random instances", run_criterion_3);
  criterion(4, "derivative ladder on all reconstructed forms", run_criterion_4);
  criterion(5, "reciprocity on random full-dimensional instances", run_criterion_5);
  criterion(6, "mixed volumes and constant leading coefficients", run_criterion_6);
  criterion(7, "coefficient periodicity and trivial constant term", run_criterion_7);
  return g_failures;
}
