#include "doctest.h"

#include "colombeau/distribution.hpp"
#include "colombeau/errors.hpp"
#include "colombeau/quadrature.hpp"
#include "colombeau/test_function.hpp"

#include <cmath>
#include <random>

using namespace colombeau;

// frozen oracle values (high-precision quadrature of the unit bump kernel)
namespace oracle {
constexpr double I1 = 0.4439938161680794378;        // int_{-1}^{1} exp(-1/(1-y^2)) dy
constexpr double psi0 = 0.8285688398691051517;      // e^{-1} / I1
constexpr double m2 = 0.1581136362637982302;        // int y^2 psi, psi normalized
constexpr double I2 = 0.4665123931783300689;        // 2D radial kernel integral
constexpr double psi2_0 = 0.7885737797126772260;    // e^{-1} / I2
constexpr double max_dpsi = 1.7982902526087073462;  // max |psi'| on [-1,1]
}  // namespace oracle

namespace {

double quad_moment(const TestFunction& phi, const MultiIndex& a, int nodes = 256) {
  Box support = Box::ball_bounds(phi.center(), phi.support_radius());
  return integrate([&](const Vec& y) { return pow_vec(y, a) * phi(y); }, support, nodes);
}

}  // namespace

TEST_CASE("bump support and normalization") {
  TestFunction psi = make_bump(1, 1.0);
  CHECK(psi(vec1(1.0)) == 0.0);
  CHECK(psi(vec1(-1.0)) == 0.0);
  CHECK(psi(vec1(1.3)) == 0.0);
  CHECK(psi(vec1(-2.0)) == 0.0);
  CHECK(quad_moment(psi, {0}) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(psi(vec1(0.0)) == doctest::Approx(oracle::psi0).epsilon(1e-12));

  TestFunction psi2 = make_bump(2, 1.0);
  CHECK(psi2(vec2(0, 0)) == doctest::Approx(oracle::psi2_0).epsilon(1e-9));
  CHECK(psi2(vec2(0.8, 0.7)) == 0.0);
}

TEST_CASE("bump derivative matches finite differences") {
  TestFunction psi = make_bump(1, 1.0);
  const double h = 1e-6;
  for (double y : {-0.9, -0.5, -0.1, 0.0, 0.3, 0.76, 0.999}) {
    double fd = (psi(vec1(y + h)) - psi(vec1(y - h))) / (2 * h);
    CHECK(psi.deriv(vec1(y), {1}) == doctest::Approx(fd).epsilon(1e-5));
  }
  // grid-search oracle for max |psi'|
  double best = 0.0;
  for (int i = 0; i <= 20000; ++i) {
    double y = -1.0 + 2.0 * i / 20000.0;
    best = std::max(best, std::abs(psi.deriv(vec1(y), {1})));
  }
  CHECK(best == doctest::Approx(oracle::max_dpsi).epsilon(1e-7));
}

TEST_CASE("moment factory 1d") {
  SUBCASE("q = 0 adds an odd term") {
    TestFunction phi = make_moment_testfn(1, 0, 1, 1.0);
    CHECK(quad_moment(phi, {0}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(quad_moment(phi, {1}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(phi.generator().certified_order() == 0);
  }
  SUBCASE("q = 2 imposed constraints") {
    TestFunction phi = make_moment_testfn(1, 2, 1, 1.0);
    CHECK(quad_moment(phi, {0}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(quad_moment(phi, {1})) < 1e-9);
    CHECK(std::abs(quad_moment(phi, {2})) < 1e-9);
    CHECK(quad_moment(phi, {3}) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("mass 0 variant") {
    TestFunction phi = make_moment_testfn(1, 1, 0, 1.0);
    CHECK(std::abs(quad_moment(phi, {0})) < 1e-9);
    CHECK(std::abs(quad_moment(phi, {1})) < 1e-9);
    CHECK(quad_moment(phi, {2}) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("non-unit support radius") {
    TestFunction phi = make_moment_testfn(1, 1, 1, 0.5);
    CHECK(phi(vec1(0.6)) == 0.0);
    CHECK(quad_moment(phi, {0}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(quad_moment(phi, {1})) < 1e-9);
    CHECK(quad_moment(phi, {2}) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("moment factory 2d: q=1 has a 6x6 system") {
  // 6 monomial coefficients up to degree 2, 6 prescribed moments
  TestFunction phi = make_moment_testfn(2, 1, 1, 1.0);
  CHECK(quad_moment(phi, {0, 0}, 200) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(quad_moment(phi, {1, 0}, 200)) < 1e-8);
  CHECK(std::abs(quad_moment(phi, {0, 1}, 200)) < 1e-8);
  CHECK(quad_moment(phi, {2, 0}, 200) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(quad_moment(phi, {1, 1}, 200)) < 1e-8);
  CHECK(std::abs(quad_moment(phi, {0, 2}, 200)) < 1e-8);
  CHECK(phi.generator().certified_order() == 1);
}

TEST_CASE("moment_order") {
  SUBCASE("symmetric bump stops at the second moment") {
    TestFunction psi = make_bump(1, 1.0);
    auto [a, next] = moment_order(psi, 8, 1e-9);
    CHECK(a == 1);
    CHECK(next == doctest::Approx(oracle::m2).epsilon(1e-10));
  }
  SUBCASE("factory order is exact") {
    TestFunction phi = make_moment_testfn(1, 3, 1, 1.0);
    auto [a, next] = moment_order(phi, 8, 1e-9);
    CHECK(a == 3);
    CHECK(next == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(next >= 0.5);
  }
  SUBCASE("translated representative rejected") {
    TestFunction phi = translate(make_bump(1, 1.0), vec1(0.25));
    CHECK_THROWS_AS(moment_order(phi, 4, 1e-9), PreconditionError);
  }
}

TEST_CASE("scaling and translation tags") {
  TestFunction phi = make_moment_testfn(1, 2, 1, 1.0);

  TestFunction half = scale(phi, 0.5);
  CHECK(half(vec1(0.0)) == doctest::Approx(2.0 * phi(vec1(0.0))).epsilon(1e-14));
  CHECK(half.scale() == 0.5);
  CHECK(half.support_radius() == doctest::Approx(0.5));

  TestFunction twice = scale(scale(phi, 0.5), 0.25);
  TestFunction direct = scale(phi, 0.125);
  CHECK(twice.scale() == 0.125);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> yd(-0.2, 0.2);
  for (int i = 0; i < 10; ++i) {
    Vec y = vec1(yd(rng));
    CHECK(twice(y) == doctest::Approx(direct(y)).epsilon(1e-12));
  }

  TestFunction moved = translate(phi, vec1(1.0));
  CHECK(moved(vec1(1.0)) == phi(vec1(0.0)));
  CHECK_THROWS_AS(scale(phi, 0.0), PreconditionError);
}

TEST_CASE("match_scaled is exact tag lookup") {
  GeneratorRegistry reg;
  TestFunction phi3 = make_moment_testfn(1, 3, 1, 1.0);
  reg.add(phi3);

  TestFunction psi = scale(phi3, std::pow(2.0, -7));
  auto m = reg.match_scaled(psi);
  REQUIRE(m.has_value());
  CHECK(m->generator_id == phi3.generator_id());
  CHECK(m->eps == std::pow(2.0, -7));
  CHECK(m->x.isZero());

  TestFunction other = make_bump(1, 1.0);
  CHECK_FALSE(reg.match_scaled(other).has_value());

  TestFunction moved = translate(scale(phi3, 0.25), vec1(0.7));
  auto m2 = reg.match_scaled(moved);
  REQUIRE(m2.has_value());
  CHECK(m2->eps == 0.25);
  CHECK(m2->x[0] == 0.7);

  // composed scalings multiply tags exactly
  TestFunction comp = scale(scale(phi3, 0.5), 0.25);
  auto m3 = reg.match_scaled(comp);
  REQUIRE(m3.has_value());
  CHECK(m3->eps == 0.125);
}

TEST_CASE("pairing with classical distributions") {
  TestFunction psi = make_bump(1, 1.0);
  auto d = DistributionSpec::delta(1);
  CHECK(pair(d, psi).real() == psi(vec1(0.0)));

  auto dprime = DistributionSpec::delta(1, {1});
  TestFunction phi = make_moment_testfn(1, 1, 1, 1.0);
  CHECK(pair(dprime, phi).real() == doctest::Approx(-phi.deriv(vec1(0.0), {1})).epsilon(1e-14));

  auto h = DistributionSpec::heaviside();
  // symmetry forces exactly 1/2
  CHECK(pair(h, psi).real() == doctest::Approx(0.5).epsilon(1e-10));

  auto f = DistributionSpec::smooth(1, [](const Vec& y, const MultiIndex& a) {
    int k = a.empty() ? 0 : a[0];
    switch (k % 4) {
      case 0: return Cplx(std::sin(y[0]), 0);
      case 1: return Cplx(std::cos(y[0]), 0);
      case 2: return Cplx(-std::sin(y[0]), 0);
      default: return Cplx(-std::cos(y[0]), 0);
    }
  }, "sin");
  // independent oracle: composite Simpson on the support
  double simpson = 0.0;
  const int N = 20000;
  for (int i = 0; i < N; ++i) {
    double a = -1.0 + 2.0 * i / N, b = -1.0 + 2.0 * (i + 1) / N, m = 0.5 * (a + b);
    auto g = [&](double y) { return std::sin(y) * psi(vec1(y)); };
    simpson += (b - a) / 6.0 * (g(a) + 4.0 * g(m) + g(b));
  }
  CHECK(pair(f, psi).real() == doctest::Approx(simpson).epsilon(1e-10));

  // domain guard
  Domain omega = Domain::interval(-0.5, 0.5);
  CHECK_THROWS_AS(pair(d, psi, {}, &omega), DomainError);
}

TEST_CASE("pair is linear in the test function") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> cd(-2.0, 2.0);
  TestFunction psi = make_bump(1, 1.0);
  TestFunction phi = make_moment_testfn(1, 2, 1, 1.0);
  auto fpsi = as_field(psi);
  auto fphi = as_field(phi);
  std::vector<DistributionSpec> us = {
      DistributionSpec::delta(1), DistributionSpec::delta(1, {2}), DistributionSpec::heaviside(),
      DistributionSpec::locally_integrable(1, [](const Vec& y) { return Cplx(std::abs(y[0]), 0); }, "abs")};
  for (int trial = 0; trial < 10; ++trial) {
    double a = cd(rng), b = cd(rng);
    auto combo = lin_comb(a, fpsi, b, fphi);
    for (const auto& u : us) {
      Cplx lhs = pair(u, combo);
      Cplx rhs = a * pair(u, fpsi) + b * pair(u, fphi);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("moment scaling and mass preservation across the grid") {
  TestFunction phi = make_moment_testfn(1, 2, 1, 1.0);
  EpsGrid grid = EpsGrid::standard();
  // moments of S_eps phi scale like eps^|alpha| (so A_q membership is scale
  // invariant); checked on a subsample of the grid
  for (size_t gi : {size_t{0}, size_t{4}, size_t{8}}) {
    double eps = grid[gi];
    TestFunction seps = scale(phi, eps);
    for (int a = 0; a <= 4; ++a) {
      double lhs = quad_moment(seps, {a});
      double rhs = std::pow(eps, a) * quad_moment(phi, {a});
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
    CHECK(quad_moment(seps, {0}) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("factory certificate reproducibility") {
  for (int q = 0; q <= 4; ++q) {
    TestFunction phi = make_moment_testfn(1, q, 1, 1.0);
    auto [a, next] = moment_order(phi, q + 1, 1e-9);
    CHECK(a == q);
    CHECK(next >= 0.5);
    CHECK(a == phi.generator().certified_order());
    CHECK(next == doctest::Approx(phi.generator().next_moment()).epsilon(1e-12));
  }
}
