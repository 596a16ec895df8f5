#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "random_instances.hpp"
#include "vecdil/lattice.hpp"

using namespace vecdil;

namespace {

HRep square_hrep() {
  return HRep(Mat{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {Rat(1), Rat(1), Rat(1), Rat(1)});
}

HRep band_hrep() {
  return HRep(oracles::rhs_matrix(), {Rat(2), rat(7, 2), Rat(1), rat(1, 2)});
}

}  // namespace

TEST_CASE("basic counts") {
  CHECK(count(square_hrep()) == 9);
  CHECK(count(band_hrep()) == 5);
  CHECK(count(HRep(square_hrep().A, {Rat(-1), Rat(-1), Rat(1), Rat(1)})) == 0);
}

TEST_CASE("interior counts") {
  CHECK(count_interior(square_hrep()) == 1);
  CHECK(count_interior(HRep(square_hrep().A, {Rat(2), Rat(2), Rat(2), Rat(2)})) == 9);
  // A segment has empty interior as a 2-D set.
  HRep seg(square_hrep().A, {Rat(0), Rat(0), Rat(1), Rat(1)});
  CHECK(count_interior(seg) == 0);
  CHECK(count(seg) == 3);
}

TEST_CASE("minkowski counting") {
  std::vector<VRep> parts = {oracles::square2(), oracles::triangle2()};
  CHECK(count_minkowski(parts, {Rat(1), Rat(1)}) == 21);
  CHECK(count_minkowski(parts, {rat(1, 2), rat(1, 2)}) == 7);
  CHECK(count_minkowski(parts, {Rat(1), Rat(0)}) == 9);
  CHECK(count_minkowski(parts, {Rat(0), Rat(0)}) == 1);
}

TEST_CASE("vrep counting matches hrep counting") {
  CHECK(count_vrep(vertices(band_hrep())) == count(band_hrep()));
  CHECK(count_vrep(oracles::triangle2()) == 5);
  auto pts = lattice_points(oracles::triangle2());
  CHECK(pts.size() == 5);
  for (const auto& p : pts) {
    CHECK(p[0].get_den() == 1);
    CHECK(in_convex_hull(oracles::triangle2().vertices, p));
  }
}

TEST_CASE("counts match the closed-form oracle on the dilation grid") {
  std::vector<VRep> parts = {oracles::square2(), oracles::triangle2()};
  for (long p = 0; p <= 6; ++p)
    for (long q = 0; q <= 6; ++q) {
      Rat r = rat(p, 3), s = rat(q, 4);
      CHECK(Rat(long(count_minkowski(parts, {r, s}))) == oracles::square_triangle_count(r, s));
    }
}

TEST_CASE("budget enforcement") {
  CHECK_THROWS_AS(count(HRep(square_hrep().A, {Rat(40), Rat(40), Rat(40), Rat(40)}), 100),
                  BudgetError);
  CHECK_THROWS_AS(count(HRep(Mat{{1, 0}, {0, 1}}, {Rat(1), Rat(1)})), DomainError);
}

TEST_CASE("monotonicity and scaling invariance on random instances") {
  std::mt19937 rng(2026);
  for (int t = 0; t < 8; ++t) {
    auto inst = testgen::random_instance(rng, 2, 5);
    uint64_t c = count(HRep(inst.A, inst.b));
    RatVec bigger = inst.b;
    for (auto& x : bigger) x += 1;
    CHECK(count(HRep(inst.A, bigger)) >= c);
    CHECK(count_interior(HRep(inst.A, inst.b)) <= c);
    // Doubling the dilation through the V-rep agrees with doubling b.
    CHECK(count_vrep(scale(inst.poly, Rat(2))) == count(HRep(inst.A, vec_scale(Rat(2), inst.b))));
  }
}

TEST_CASE("reciprocity on the worked fixtures") {
  auto r1 = reciprocity_check(square_hrep());
  CHECK(r1.phi_reflected == 1);
  CHECK(r1.interior_count == 1);
  CHECK(r1.equal);
  auto r2 = reciprocity_check(band_hrep());
  CHECK(r2.phi_reflected == Rat(long(r2.interior_count)));
  CHECK(r2.equal);
  auto r3 = reciprocity_check(HRep(square_hrep().A, {Rat(2), Rat(2), Rat(2), Rat(2)}));
  CHECK(r3.phi_reflected == 9);
  CHECK(r3.equal);
  // Odd dimension carries the (-1)^dim sign: Phi(A,-b) = -#interior.
  auto r4 = reciprocity_check(HRep(Mat{{1}, {-1}}, {Rat(2), Rat(1)}));
  CHECK(r4.phi_reflected == -2);
  CHECK(r4.interior_count == 2);
  CHECK(r4.equal);
}
