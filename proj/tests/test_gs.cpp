#include "doctest.h"

#include "colombeau/errors.hpp"
#include "colombeau/gs.hpp"
#include "colombeau/test_function.hpp"

#include <cmath>

using namespace colombeau;

namespace {

// nets used across the cases
FunctionNet power_net(Domain omega, double p) {
  return FunctionNet(std::move(omega), 4, [p](double eps, const Vec& y, const MultiIndex& a) {
    int k = order_of(a);
    // eps^p * y -> derivatives: order 0: eps^p*y, 1: eps^p, else 0
    if (k == 0) return Cplx(std::pow(eps, p) * y[0], 0.0);
    if (k == 1) return Cplx(std::pow(eps, p), 0.0);
    return Cplx(0.0, 0.0);
  });
}

/// u_eps(x) = psi((x - shift*eps) / eps), not mass-scaled
FunctionNet concentrating_net(Domain omega, const TestFunction& psi, double shift) {
  return FunctionNet(std::move(omega), 4, [psi, shift](double eps, const Vec& y, const MultiIndex& a) {
    Vec t = (y.array() - shift * eps) / eps;
    return Cplx(psi.deriv(t, a) * std::pow(eps, -order_of(a)), 0.0);
  });
}

}  // namespace

TEST_CASE("gs moderate verdicts") {
  Domain omega = Domain::interval(-2.0, 2.0);
  EpsGrid grid = EpsGrid::standard();
  CompactBox K(Box::of({-1.0}, {1.0}), 65);

  SUBCASE("eps^-1 sin x is moderate with N=1") {
    FunctionNet u(omega, 4, [](double eps, const Vec& y, const MultiIndex& a) {
      double v = 0.0;
      switch (order_of(a) % 4) {
        case 0: v = std::sin(y[0]); break;
        case 1: v = std::cos(y[0]); break;
        case 2: v = -std::sin(y[0]); break;
        case 3: v = -std::cos(y[0]); break;
      }
      return Cplx(v / eps, 0.0);
    });
    Verdict v = gs_moderate_verdict(u, K, 0, grid);
    CHECK(v.supported());
    CHECK(v.max_order == 1);
    REQUIRE(!v.estimates.empty());
    CHECK(v.estimates[0].slope == doctest::Approx(-1.0).epsilon(1e-10));
  }

  SUBCASE("exp(1/eps) has no polynomial bound") {
    FunctionNet u(omega, 4, [](double eps, const Vec&, const MultiIndex& a) {
      return order_of(a) == 0 ? Cplx(std::exp(1.0 / eps), 0.0) : Cplx(0.0, 0.0);
    });
    Verdict v = gs_moderate_verdict(u, K, 0, grid);
    CHECK(v.refuted());
    REQUIRE(!v.witnesses.empty());
    CHECK(v.witnesses[0].exponent == -12);
  }

  SUBCASE("concentrating bump derivative has slope -1 on a dyadic grid") {
    TestFunction psi = make_bump(1, 1.0);
    FunctionNet u = concentrating_net(omega, psi, 0.0);
    CompactBox Kd(Box::of({0.0}, {1.0}), 65);
    Kd.add_dyadic(grid, vec1(0.0), vec1(1.0), {0.625, 0.75, 0.875, 1.0});
    Verdict v = gs_moderate_verdict(u, Kd, 1, grid);
    CHECK(v.supported());
    REQUIRE(v.estimates.size() == 2);
    // alpha=1 sweep: sup is eps^-1 max|psi'| over the reachable arguments;
    // oracle: |psi'(0.75)| = 1.79497 <= sup*eps <= max|psi'| = 1.79829
    CHECK(v.estimates[1].slope == doctest::Approx(-1.0).epsilon(1e-3));
    // cross-check one magnitude against a central-difference oracle
    double eps = grid[20];
    double x = 0.75 * eps;
    double h = 1e-5 * eps;
    double fd = (psi(vec1((x + h) / eps)) - psi(vec1((x - h) / eps))) / (2 * h);
    CHECK(u.deriv(eps, vec1(x), {1}).real() == doctest::Approx(fd).epsilon(1e-4));
  }

  SUBCASE("domain guard") {
    FunctionNet u(omega, 4, [](double, const Vec&, const MultiIndex&) { return Cplx(0, 0); });
    CompactBox huge(Box::of({-3.0}, {3.0}), 9);
    CHECK_THROWS_AS(gs_moderate_verdict(u, huge, 0, grid), DomainError);
  }
}

TEST_CASE("gs negligible verdicts") {
  Domain omega = Domain::interval(-2.0, 2.0);
  EpsGrid grid = EpsGrid::standard();
  CompactBox K(Box::of({0.0}, {1.0}), 65);

  SUBCASE("eps^5 x supported through 5, refuted at 6") {
    FunctionNet u = power_net(omega, 5.0);
    Verdict mod = gs_moderate_verdict(u, K, 0, grid);
    REQUIRE(mod.supported());

    Verdict v5 = gs_negligible_verdict(u, K, 5, grid, mod);
    CHECK(v5.supported());
    CHECK(v5.max_order == 5);

    Verdict v8 = gs_negligible_verdict(u, K, 8, grid, mod);
    CHECK(v8.refuted());
    CHECK(v8.max_order == 5);
    REQUIRE(!v8.witnesses.empty());
    CHECK(v8.witnesses[0].exponent == 6);
  }

  SUBCASE("moderateness is a precondition") {
    FunctionNet u = power_net(omega, 5.0);
    Verdict not_mod = Verdict::inconclusive("skipped");
    CHECK_THROWS_AS(gs_negligible_verdict(u, K, 5, grid, not_mod), PreconditionError);
  }

  SUBCASE("support arithmetic: identically zero away from the concentration") {
    // supp u_eps = [eps/2, 3 eps/2], disjoint from [1/4, 1] for eps < 1/6
    TestFunction psi = make_bump(1, 0.5);
    FunctionNet u = concentrating_net(omega, psi, 1.0);
    CompactBox Kaway(Box::of({0.25}, {1.0}), 65);
    Verdict mod = gs_moderate_verdict(u, Kaway, 0, grid);
    REQUIRE(mod.supported());
    Verdict v = gs_negligible_verdict(u, Kaway, 8, grid, mod);
    CHECK(v.supported());
    CHECK(v.max_order == 8);
  }

  SUBCASE("same net refuted on a grid that sees the concentration") {
    TestFunction psi = make_bump(1, 0.5);
    FunctionNet u = concentrating_net(omega, psi, 1.0);
    CompactBox K0(Box::of({0.0}, {1.0}), 65);
    K0.add_dyadic(grid, vec1(0.0), vec1(1.0), {1.0});
    Verdict mod = gs_moderate_verdict(u, K0, 0, grid);
    REQUIRE(mod.supported());
    Verdict v = gs_negligible_verdict(u, K0, 8, grid, mod);
    CHECK(v.refuted());
    // witness x = eps carries the fixed positive value psi(0)
    REQUIRE(!v.witnesses.empty());
    CHECK(v.witnesses[0].magnitude == doctest::Approx(psi(vec1(0.0))).epsilon(1e-12));
  }
}

TEST_CASE("gs point evaluation") {
  EpsGrid grid = EpsGrid::standard();

  SUBCASE("classical point in a square net") {
    Domain omega = Domain::interval(2.0, 4.0);
    FunctionNet u(omega, 2, [](double, const Vec& y, const MultiIndex& a) {
      switch (order_of(a)) {
        case 0: return Cplx(y[0] * y[0], 0.0);
        case 1: return Cplx(2.0 * y[0], 0.0);
        default: return Cplx(2.0, 0.0);
      }
    });
    GenPointGs x;
    x.rule = [](double) { return vec1(3.0); };
    x.support_box = Box::of({2.9}, {3.1});
    GenNumberGs val = gs_point_eval(u, x);
    for (double eps : {0.5, 0.01, 1e-8}) CHECK(val(eps) == Cplx(9.0, 0.0));
  }

  SUBCASE("support certificate is required") {
    Domain omega = Domain::interval(2.0, 4.0);
    FunctionNet u(omega, 0, [](double, const Vec&, const MultiIndex&) { return Cplx(0, 0); });
    GenPointGs x;
    x.rule = [](double) { return vec1(3.0); };
    CHECK_THROWS_AS(gs_point_eval(u, x), PreconditionError);
  }

  SUBCASE("classical point misses the concentration for small eps") {
    Domain omega = Domain::interval(-2.0, 2.0);
    TestFunction psi = make_bump(1, 0.5);
    FunctionNet u = concentrating_net(omega, psi, 1.0);
    GenPointGs x;
    x.rule = [](double) { return vec1(0.3); };
    x.support_box = Box::of({0.25}, {0.35});
    GenNumberGs val = gs_point_eval(u, x);
    // support arithmetic oracle: value vanishes once 3 eps / 2 < 0.3
    for (double eps : grid.values())
      if (eps < 0.1) CHECK(val(eps) == Cplx(0.0, 0.0));
  }
}

TEST_CASE("gs witness search") {
  Domain omega = Domain::interval(-2.0, 2.0);
  EpsGrid grid = EpsGrid::standard();

  SUBCASE("finds the concentration") {
    TestFunction psi = make_bump(1, 0.5);
    FunctionNet u = concentrating_net(omega, psi, 1.0);
    CompactBox K(Box::of({0.0}, {1.0}), 65);
    K.add_dyadic(grid, vec1(0.0), vec1(1.0), {1.0});
    auto x = gs_witness_search(u, K, 1, grid);
    REQUIRE(x.has_value());
    // grid-max oracle for max psi
    double maxpsi = 0.0;
    for (int i = 0; i <= 10000; ++i)
      maxpsi = std::max(maxpsi, psi(vec1(-0.5 + i / 10000.0)));
    for (size_t gi = grid.asymptotic_start(); gi < grid.size(); gi += 5) {
      double eps = grid[gi];
      Vec at = (*x)(eps);
      CHECK(at[0] == doctest::Approx(eps).epsilon(1e-12));
      CHECK(std::abs(u(eps, at)) >= 0.9 * maxpsi);
    }
  }

  SUBCASE("zero net yields nothing") {
    FunctionNet u(omega, 0, [](double, const Vec&, const MultiIndex&) { return Cplx(0, 0); });
    CompactBox K(Box::of({0.0}, {1.0}), 33);
    CHECK_FALSE(gs_witness_search(u, K, 1, grid).has_value());
  }

  SUBCASE("eps x against m0=2 returns the endpoint witness") {
    FunctionNet u = power_net(omega, 1.0);
    CompactBox K(Box::of({0.0}, {1.0}), 33);
    auto x = gs_witness_search(u, K, 2, grid);
    REQUIRE(x.has_value());
    CHECK((*x)(grid[20])[0] == doctest::Approx(1.0));
  }

  SUBCASE("found witnesses never pass the landau bound they refute") {
    TestFunction psi = make_bump(1, 0.5);
    FunctionNet u = concentrating_net(omega, psi, 1.0);
    CompactBox K(Box::of({0.0}, {1.0}), 65);
    K.add_dyadic(grid, vec1(0.0), vec1(1.0), {1.0});
    const int m0 = 1;
    auto x = gs_witness_search(u, K, m0, grid);
    REQUIRE(x.has_value());
    GenNumberGs val = gs_point_eval(u, *x);
    std::vector<Sample> s;
    for (double eps : grid.values()) s.push_back({eps, std::abs(val(eps))});
    CHECK_FALSE(landau_check(s, m0, grid[grid.asymptotic_start() - 1]));
  }
}

TEST_CASE("gs constant check") {
  EpsGrid grid = EpsGrid::standard();
  Domain omega = Domain::interval(-2.0, 2.0);
  CompactBox K(Box::of({-1.0}, {1.0}), 33);

  SUBCASE("x-constant net with eps^-2 growth") {
    FunctionNet u(omega, 2, [](double eps, const Vec&, const MultiIndex& a) {
      return order_of(a) == 0 ? Cplx(std::pow(eps, -2.0), 0.0) : Cplx(0.0, 0.0);
    });
    auto r = gs_constant_check(u, grid, K);
    CHECK(r.derivatives.supported());
    CHECK(r.spread.supported());
  }

  SUBCASE("identity net refuted both ways") {
    FunctionNet u(omega, 2, [](double, const Vec& y, const MultiIndex& a) {
      switch (order_of(a)) {
        case 0: return Cplx(y[0], 0.0);
        case 1: return Cplx(1.0, 0.0);
        default: return Cplx(0.0, 0.0);
      }
    });
    auto r = gs_constant_check(u, grid, K);
    CHECK(r.derivatives.refuted());
    CHECK(r.spread.refuted());
  }

  SUBCASE("eps^5 sin x net is negligible both ways up to the swept order") {
    FunctionNet u(omega, 2, [](double eps, const Vec& y, const MultiIndex& a) {
      double v = 0.0;
      switch (order_of(a) % 4) {
        case 0: v = std::sin(y[0]); break;
        case 1: v = std::cos(y[0]); break;
        case 2: v = -std::sin(y[0]); break;
        case 3: v = -std::cos(y[0]); break;
      }
      return Cplx(std::pow(eps, 5.0) * v, 0.0);
    });
    GsConfig cfg;
    cfg.m_max = 4;
    auto r = gs_constant_check(u, grid, K, cfg);
    CHECK(r.derivatives.supported());
    CHECK(r.derivatives.max_order == 4);
    CHECK(r.spread.supported());
    CHECK(r.spread.max_order == 4);
  }

  SUBCASE("disconnected domain refused") {
    Domain split(1, {Box::of({-2.0}, {-1.0}), Box::of({1.0}, {2.0})});
    FunctionNet u(split, 2, [](double, const Vec&, const MultiIndex&) { return Cplx(0, 0); });
    CompactBox Ks(Box::of({-1.5}, {-1.2}), 9);
    CHECK_THROWS_AS(gs_constant_check(u, grid, Ks), PreconditionError);
  }
}

TEST_CASE("net ring laws and point evaluation homomorphism") {
  Domain omega = Domain::interval(-2.0, 2.0);
  FunctionNet u(omega, 2, [](double eps, const Vec& y, const MultiIndex& a) {
    switch (order_of(a)) {
      case 0: return Cplx(y[0] / eps, 0.0);
      case 1: return Cplx(1.0 / eps, 0.0);
      default: return Cplx(0.0, 0.0);
    }
  });
  FunctionNet v(omega, 2, [](double, const Vec& y, const MultiIndex& a) {
    switch (order_of(a)) {
      case 0: return Cplx(y[0] * y[0], 0.0);
      case 1: return Cplx(2.0 * y[0], 0.0);
      default: return Cplx(2.0, 0.0);
    }
  });

  FunctionNet sum = u + v;
  FunctionNet prod = u * v;
  for (double eps : {0.5, 0.03125, 1e-6})
    for (double y : {-1.0, 0.25, 0.7}) {
      CHECK(sum(eps, vec1(y)) == u(eps, vec1(y)) + v(eps, vec1(y)));
      CHECK(prod(eps, vec1(y)) == u(eps, vec1(y)) * v(eps, vec1(y)));
    }

  // Leibniz on the product net against the closed form
  // (uv)' = u'v + uv' = v/eps + 2 y^2 / eps... checked numerically
  double eps = 0.25, y0 = 0.5, h = 1e-6;
  Cplx fd = (prod(eps, vec1(y0 + h)) - prod(eps, vec1(y0 - h))) / Cplx(2 * h, 0);
  CHECK(prod.deriv(eps, vec1(y0), {1}).real() == doctest::Approx(fd.real()).epsilon(1e-7));

  GenPointGs x;
  x.rule = [](double eps) { return vec1(0.5 + eps); };
  x.support_box = Box::of({0.4}, {1.6});
  GenNumberGs pu = gs_point_eval(u, x);
  GenNumberGs pv = gs_point_eval(v, x);
  GenNumberGs pprod = gs_point_eval(prod, x);
  GenNumberGs psum = gs_point_eval(sum, x);
  for (double e : {0.5, 0.03125, 0.001}) {
    CHECK(pprod(e) == pu(e) * pv(e));
    CHECK(psum(e) == pu(e) + pv(e));
  }
}
