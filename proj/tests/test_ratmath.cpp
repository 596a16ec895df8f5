#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vecdil/linalg.hpp"
#include "vecdil/polynomial.hpp"
#include "vecdil/rational.hpp"

using namespace vecdil;

TEST_CASE("fractional parts") {
  CHECK(frac_part(rat(7, 2)) == rat(1, 2));
  CHECK(frac_part(rat(-1, 4)) == rat(3, 4));
  CHECK(frac_part(Rat(3)) == 0);
  CHECK(frac_part(Rat(0)) == 0);
  CHECK(frac_part(rat(-7, 3)) == rat(2, 3));
}

TEST_CASE("floor and ceiling") {
  CHECK(rat_floor(rat(7, 2)) == 3);
  CHECK(rat_floor(rat(-7, 2)) == -4);
  CHECK(rat_ceil(rat(7, 2)) == 4);
  CHECK(rat_ceil(rat(-7, 2)) == -3);
  CHECK(rat_floor(Rat(5)) == 5);
  CHECK(rat_ceil(Rat(5)) == 5);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3/4") == rat(3, 4));
  CHECK(parse_rat("-3/4") == rat(-3, 4));
  CHECK(parse_rat("17") == Rat(17));
  CHECK(parse_rat("6/4") == rat(3, 2));  // canonicalized
  CHECK_FALSE(parse_rat("1/0").has_value());
  CHECK_FALSE(parse_rat("1/-2").has_value());
  CHECK_FALSE(parse_rat(" 1/2").has_value());
  CHECK_FALSE(parse_rat("1.5").has_value());
  CHECK_FALSE(parse_rat("").has_value());
  CHECK(rat_str(rat(3, 4)) == "3/4");
  CHECK(rat_str(Rat(-2)) == "-2");
  CHECK(rat_str(Rat(0)) == "0");
}

TEST_CASE("parse/print round-trip") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int i = 0; i < 200; ++i) {
    Rat q = rat(num(rng), den(rng));
    auto back = parse_rat(rat_str(q));
    REQUIRE(back.has_value());
    CHECK(*back == q);
  }
}

TEST_CASE("primitive integral form") {
  CHECK(primitive({rat(1, 2), rat(3, 4)}) == RatVec{Rat(2), Rat(3)});
  CHECK(primitive({Rat(-4), Rat(6)}) == RatVec{Rat(-2), Rat(3)});
  CHECK(primitive({Rat(0), rat(-1, 3)}) == RatVec{Rat(0), Rat(-1)});
}

TEST_CASE("determinants") {
  CHECK(det(Mat::identity(3)) == 1);
  CHECK(det(Mat{{2, 1}, {-2, 1}}) == 4);
  CHECK(det(Mat{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("linear solve") {
  Mat m{{2, 1}, {-2, 1}};
  auto x = solve(m, {Rat(2), rat(7, 2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == rat(-3, 8));
  CHECK((*x)[1] == rat(11, 4));
  CHECK_FALSE(solve(Mat{{1, 2}, {2, 4}}, {Rat(1), Rat(3)}).has_value());
}

TEST_CASE("inverse") {
  CHECK_FALSE(inverse(Mat{{1, 2}, {2, 4}}).has_value());
  Mat m{{2, 1, 0}, {-1, 3, 1}, {0, 0, 2}};
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m.mul(*inv) == Mat::identity(3));
  CHECK(det(m) * det(*inv) == 1);
}

TEST_CASE("solve round-trip on random systems") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> entry(-5, 5);
  int solved = 0;
  for (int t = 0; t < 60; ++t) {
    Mat m(3, 3);
    RatVec x(3);
    for (size_t i = 0; i < 3; ++i) {
      x[i] = rat(entry(rng), 1 + std::abs(entry(rng)));
      for (size_t j = 0; j < 3; ++j) m(i, j) = Rat(entry(rng));
    }
    auto y = solve(m, m.mul(x));
    if (det(m) != 0) {
      REQUIRE(y.has_value());
      CHECK(*y == x);
      ++solved;
    }
  }
  CHECK(solved > 30);
}

TEST_CASE("rank and nullspace") {
  CHECK(rank(Mat{{1, 2}, {2, 4}, {3, 6}}) == 1);
  CHECK(rank(Mat::identity(4)) == 4);
  auto ns = nullspace(Mat{{1, 1, 1}});
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + v[1] + v[2] == 0);
}

TEST_CASE("nonnegative feasibility") {
  // x + y = 1, x - y = 0 has the solution (1/2, 1/2) >= 0.
  CHECK(feasible_nonneg(Mat{{1, 1}, {1, -1}}, {Rat(1), Rat(0)}));
  // x + y = -1 has no nonnegative solution.
  CHECK_FALSE(feasible_nonneg(Mat{{1, 1}}, {Rat(-1)}));
}

TEST_CASE("hull and cone membership") {
  std::vector<RatVec> sq = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}, {Rat(-1), Rat(1)}, {Rat(-1), Rat(-1)}};
  CHECK(in_convex_hull(sq, {rat(1, 3), rat(-2, 3)}));
  CHECK_FALSE(in_convex_hull(sq, {rat(3, 2), Rat(0)}));
  std::vector<RatVec> gens = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
  CHECK(in_cone(gens, {Rat(5), Rat(2)}));
  CHECK(in_cone(gens, {Rat(0), Rat(0)}));
  CHECK_FALSE(in_cone(gens, {Rat(-1), Rat(0)}));
  CHECK_FALSE(in_cone(gens, {Rat(1), Rat(2)}));
}

TEST_CASE("polynomial arithmetic and derivatives") {
  // p = 2 x^2 y - 3 y + 1/2
  MPoly p(2);
  p.add_term({2, 1}, Rat(2));
  p.add_term({0, 1}, Rat(-3));
  p.add_term({0, 0}, rat(1, 2));
  CHECK(p.eval({Rat(2), rat(1, 2)}) == Rat(2) * 4 * rat(1, 2) - 3 * rat(1, 2) + rat(1, 2));
  MPoly dx = p.derivative(0);
  CHECK(dx.eval({Rat(3), Rat(1)}) == 12);
  CHECK(p.derivative(1).eval({Rat(1), Rat(9)}) == -1);
  CHECK(p.total_degree() == 3);
  CHECK(p.degree_in(1) == 1);
  CHECK((p - p).is_zero());
  CHECK((p + p) == p.scaled(Rat(2)));
}

TEST_CASE("linear composition") {
  // p(x) = x^2, substitute x = y1 + 2 y2.
  MPoly p = MPoly::monomial(1, {2}, Rat(1));
  Mat m{{1, 2}};
  MPoly q = p.compose_linear(m);
  CHECK(q.eval({Rat(3), Rat(1)}) == 25);
  CHECK(q.nvars() == 2);
}

TEST_CASE("exponent bases") {
  auto full = exponents_up_to(2, 2);
  CHECK(full.size() == 6);  // 1, x, y, x^2, xy, y^2
  auto capped = exponents_up_to(2, 2, {1, 2});
  CHECK(capped.size() == 5);  // drops x^2
}

TEST_CASE("polynomial interpolation") {
  // Fit x^2 - xy + 3 through exact samples.
  MPoly target(2);
  target.add_term({2, 0}, Rat(1));
  target.add_term({1, 1}, Rat(-1));
  target.add_term({0, 0}, Rat(3));
  auto basis = exponents_up_to(2, 2);
  std::vector<std::pair<RatVec, Rat>> samples;
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> pick(-6, 6);
  for (int i = 0; i < 10; ++i) {
    RatVec x = {rat(pick(rng), 3), rat(pick(rng), 2)};
    samples.push_back({x, target.eval(x)});
  }
  auto fit = fit_polynomial(2, basis, samples);
  REQUIRE(fit.has_value());
  CHECK(*fit == target);
}
