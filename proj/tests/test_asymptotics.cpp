#include "doctest.h"

#include "colombeau/eps_grid.hpp"
#include "colombeau/errors.hpp"
#include "colombeau/order_fit.hpp"

#include <cmath>
#include <functional>
#include <random>

using namespace colombeau;

namespace {

std::vector<Sample> sample_net(const EpsGrid& grid, const std::function<double(double)>& f) {
  std::vector<Sample> s;
  for (double eps : grid.values()) s.push_back({eps, std::abs(f(eps))});
  return s;
}

}  // namespace

TEST_CASE("eps grid invariants") {
  EpsGrid g = EpsGrid::standard();
  CHECK(g.size() == 33);
  CHECK(g[0] == doctest::Approx(std::pow(0.5, 4)));
  for (size_t i = 0; i < g.size(); ++i) {
    CHECK(g[i] > 0.0);
    CHECK(g[i] <= 1.0);
    if (i > 0) CHECK(g[i] < g[i - 1]);
  }
  CHECK_THROWS_AS(EpsGrid(1.5, 4, 36), PreconditionError);
  CHECK_THROWS_AS(EpsGrid(0.5, 4, 5), PreconditionError);  // fewer than 8 points
  CHECK_THROWS_AS(EpsGrid(0.5, 10, 4), PreconditionError);
}

TEST_CASE("fit_order recovers exact powers") {
  EpsGrid g(0.5, 5, 20);
  auto s = sample_net(g, [](double e) { return std::pow(e, -3.0); });
  auto est = fit_order(s, FitWindow{0, s.size() - 1});
  CHECK(est.slope == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(est.residual < 1e-12);

  auto c = sample_net(g, [](double) { return 5.0; });
  auto estc = fit_order(c, FitWindow{0, c.size() - 1});
  CHECK(estc.slope == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(estc.residual < 1e-12);
}

TEST_CASE("fit_order on eps^2 + eps^5 tail window") {
  // frozen oracle: exact log-samples over i = 10..36, least squares slope
  // 2.000000000012053 (secant slopes all lie in (2, 2 + 1.2e-9])
  EpsGrid g = EpsGrid::standard();
  auto s = sample_net(g, [](double e) { return e * e + std::pow(e, 5); });
  size_t first = 0;
  while (g[first] > std::pow(2.0, -10)) ++first;
  auto est = fit_order(s, FitWindow{first, s.size() - 1});
  CHECK(est.slope == doctest::Approx(2.000000000012053).epsilon(1e-12));
  CHECK(est.slope >= 1.99);
  CHECK(est.slope <= 2.0 + 1e-6);
}

TEST_CASE("fit_order exact power property |p| <= 12") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> pd(-12.0, 12.0);
  EpsGrid g = EpsGrid::standard();
  for (int trial = 0; trial < 50; ++trial) {
    double p = pd(rng);
    auto s = sample_net(g, [p](double e) { return std::pow(e, p); });
    auto est = fit_order(s);
    CHECK(std::abs(est.slope - p) < 1e-12);
    CHECK(est.residual < 1e-12);
  }
}

TEST_CASE("fit_order scale equivariance") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> cd(1e-6, 1e6);
  EpsGrid g = EpsGrid::standard();
  auto s = sample_net(g, [](double e) { return e * e + 0.3 * std::pow(e, 3); });
  auto base = fit_order(s);
  for (int trial = 0; trial < 20; ++trial) {
    double c = cd(rng);
    auto scaled = s;
    for (auto& x : scaled) x.magnitude *= c;
    auto est = fit_order(scaled);
    CHECK(std::abs(est.slope - base.slope) < 1e-12);
    CHECK(est.intercept == doctest::Approx(base.intercept + std::log(c)).epsilon(1e-10));
  }
}

TEST_CASE("fit_order error cases") {
  EpsGrid g = EpsGrid::standard();
  auto zero = sample_net(g, [](double) { return 0.0; });
  CHECK_THROWS_AS(fit_order(zero), IdenticallyZeroError);

  // three usable points, the rest zero
  auto sparse = sample_net(g, [](double e) { return e > 0.05 ? 1.0 : 0.0; });
  CHECK_THROWS_AS(fit_order(sparse, FitWindow{0, sparse.size() - 1}), InsufficientDataError);

  CHECK_THROWS_AS(fit_order(sparse, FitWindow{5, 4}), PreconditionError);
}

TEST_CASE("landau_check normalized bound") {
  EpsGrid g = EpsGrid::standard();
  auto cube = sample_net(g, [](double e) { return e * e * e; });
  CHECK(landau_check(cube, 2.0, 1.0));

  auto cube2 = sample_net(g, [](double e) { return 2.0 * e * e * e; });
  CHECK(landau_check(cube2, 2.0, 0.5));

  // boundary: non-strict comparison passes an exact power at its own order
  auto sq = sample_net(g, [](double e) { return e * e; });
  CHECK(landau_check(sq, 2.0, 1.0));
  CHECK_FALSE(landau_check(sq, 2.5, 1.0));

  // zero magnitudes satisfy every order
  auto zero = sample_net(g, [](double) { return 0.0; });
  CHECK(landau_check(zero, 50.0, 1.0));

  // cutoff below the smallest grid eps leaves nothing to check
  CHECK_THROWS_AS(landau_check(cube, 2.0, 1e-20), PreconditionError);
}

TEST_CASE("landau_check monotone in the exponent") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ad(-6.0, 6.0);
  std::uniform_real_distribution<double> cd(0.1, 10.0);
  EpsGrid g = EpsGrid::standard();
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    double a = ad(rng), c = cd(rng);
    auto s = sample_net(g, [a, c](double e) { return c * std::pow(e, a); });
    double p = ad(rng);
    double q = p - std::abs(ad(rng));
    if (!landau_check(s, p, 1.0)) continue;
    ++checked;
    CHECK(landau_check(s, q, 1.0));
  }
  CHECK(checked > 20);
}
