#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pnr/ellipse.hpp"
#include "pnr/errors.hpp"
#include "pnr/numrange.hpp"
#include "pnr/operators.hpp"
#include "support.hpp"

using namespace pnr;

namespace {

const double pi = std::numbers::pi;

// Largest Re(z e^{-i psi}) over gamma_phi by brute force on a fine t grid,
// refined by golden-section search around the best sample.
double brute_support(double phi, double psi) {
  const Complex rot = std::polar(1.0, -psi);
  auto f = [&](double t) { return (gamma_point(phi, t) * rot).real(); };
  const int n = 20000;
  int best = 0;
  for (int j = 1; j < n; ++j)
    if (f(2 * pi * j / n) > f(2 * pi * best / n)) best = j;
  double lo = 2 * pi * (best - 1) / n, hi = 2 * pi * (best + 1) / n;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 100; ++it) {
    const double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    if (f(x1) < f(x2)) lo = x1;
    else hi = x2;
  }
  return f(0.5 * (lo + hi));
}

}  // namespace

TEST_CASE("gamma parameters") {
  const EllipseParams circle = gamma_params(pi);
  CHECK(circle.w == Complex(0.0));
  CHECK(circle.focus == Complex(0.0));
  CHECK(circle.major_len == 1.0);
  CHECK(circle.rotation == 0.0);

  const EllipseParams wide = gamma_params(0.0);
  CHECK(wide.w == Complex(2.0));
  CHECK(std::abs(wide.focus - std::sqrt(2.0)) <= 1e-15);
  CHECK(wide.major_len == 3.0);
  CHECK(wide.minor_len == 1.0);

  for (int j = 0; j < 100; ++j) {
    const double phi = 2 * pi * j / 100;
    const EllipseParams e = gamma_params(phi);
    CHECK(std::abs(e.w.real() - (1.0 + std::cos(phi))) <= 1e-15);
    CHECK(std::abs(e.w.imag() - std::sin(phi)) <= 1e-15);
    CHECK(std::abs(std::norm(e.w) - 2.0 * e.w.real()) <= 1e-12);
    CHECK(e.major_len >= e.minor_len);
    CHECK(e.minor_len >= 0.0);
    CHECK(std::abs(e.focus * e.focus - e.w) <= 1e-15);
  }
}

TEST_CASE("gamma points") {
  for (double t : {0.0, 1.0, 2.5, 5.0}) CHECK(std::abs(std::abs(gamma_point(pi, t)) - 0.5) <= 1e-15);
  // semi-major axis (sqrt2/2 + 1/2 with w = 2) along the real axis
  CHECK(std::abs(gamma_point(0.0, 0.0) - 1.5) <= 1e-15);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  for (int trial = 0; trial < 200; ++trial) {
    const double phi = angle(rng), t = angle(rng);
    const EllipseParams e = gamma_params(phi);
    const Complex z = gamma_point(phi, t);
    CHECK(std::abs(std::abs(z - e.focus) + std::abs(z + e.focus) - e.major_len) <= 1e-12);
  }
}

TEST_CASE("tangent line support") {
  CHECK(tangent_line_support(0.0) == 1.5);
  CHECK(tangent_line_support(pi / 2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(tangent_line_support(7 * pi / 4) == doctest::Approx(0.5 + std::sqrt(0.5)));
  CHECK_THROWS_AS(tangent_line_support(pi), DomainError);
  CHECK_THROWS_AS(tangent_line_support(2.0), DomainError);

  const RangePolygon stadium = stadium_region(4096);
  for (int j = 0; j <= 40; ++j) {
    const double psi = -pi / 2 + pi * j / 40;
    CHECK(std::abs(support_width(stadium, psi) - tangent_line_support(psi)) <= 1e-6);
  }
}

TEST_CASE("semiplane containment and tangency") {
  const SemiplaneCheck both_zero = check_semiplane_containment(0.0, 0.0);
  CHECK(both_zero.contained);
  REQUIRE(both_zero.tangent_point);
  CHECK(std::abs(*both_zero.tangent_point - 1.5) <= 1e-15);
  CHECK(std::abs(both_zero.touch_point - 1.5) <= 1e-12);

  const SemiplaneCheck up = check_semiplane_containment(pi / 3, pi / 2);
  CHECK(up.contained);
  REQUIRE(up.tangent_point);
  CHECK(std::abs(*up.tangent_point - Complex(std::sin(pi / 3), 0.5)) <= 1e-15);
  CHECK(std::abs(up.touch_point - *up.tangent_point) <= 1e-8);

  const SemiplaneCheck down = check_semiplane_containment(pi / 3, 3 * pi / 2);
  REQUIRE(down.tangent_point);
  CHECK(std::abs(down.touch_point - Complex(-std::sin(pi / 3), -0.5)) <= 1e-8);

  for (double phi : {0.5, 1.0, 2.0, 3.0, 4.0, 5.5}) {
    const SemiplaneCheck off = check_semiplane_containment(phi, 0.0);
    CHECK(off.contained);
    CHECK_FALSE(off.tangent_point);
    CHECK(off.max_support < 1.5 - 1e-6);
  }
  CHECK_THROWS_AS(check_semiplane_containment(0.0, pi), DomainError);
}

TEST_CASE("every gamma sits in every admissible semiplane, touching at the predicted point") {
  for (int i = 0; i < 36; ++i) {
    const double psi = -pi / 2 + pi * i / 36;
    for (int j = 0; j < 72; ++j) {
      const double phi = 2 * pi * j / 72;
      const SemiplaneCheck c = check_semiplane_containment(phi, psi, 1024);
      CHECK(c.contained);
      CHECK(c.max_support <= tangent_line_support(psi) + 1e-12);
      CHECK(std::abs(c.max_support - brute_support(phi, psi)) <= 1e-9);
    }
    const double phi = psi < 0 ? psi + 2 * pi : psi;
    const SemiplaneCheck touch = check_semiplane_containment(phi, psi);
    if (std::abs(std::abs(psi) - pi / 2) > 1e-12) {
      REQUIRE(touch.tangent_point);
      CHECK(std::abs(touch.touch_point - *touch.tangent_point) <= 1e-8);
      CHECK(std::abs(touch.max_support - tangent_line_support(psi)) <= 1e-12);
    }
  }
}

TEST_CASE("stadium") {
  const RangePolygon s = stadium_region(720);
  CHECK(support_width(s, 0.0) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(support_width(s, pi / 2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(support_width(s, pi) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(support_width(s, 3 * pi / 2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(stadium_region(4), DomainError);

  std::vector<Complex> all;
  for (int j = 0; j < 720; ++j) {
    const RangePolygon g = gamma_polygon(2 * pi * j / 720, 720);
    all.insert(all.end(), g.points.begin(), g.points.end());
  }
  const RangePolygon hull = convex_hull(all);
  CHECK(hausdorff(hull, s) <= 2e-3);

  // Each stadium vertex lies on some sampled ellipse.
  std::vector<RangePolygon> ellipses;
  for (int j = 0; j < 360; ++j) ellipses.push_back(gamma_polygon(2 * pi * j / 360, 720));
  for (Complex z : stadium_region(96).points) {
    double best = 1e300;
    for (const auto& e : ellipses)
      for (std::size_t i = 0; i < e.size(); ++i) best = std::min(best, std::abs(z - e.points[i]));
    CHECK(best <= 2e-3);
  }
}

TEST_CASE("stadium equals the hull of W(C) and W(D)") {
  const ConjecturePair cd = conjecture_matrices(1);
  std::vector<Complex> pts = range_boundary(cd.plus).points;
  const RangePolygon d = range_boundary(cd.minus);
  pts.insert(pts.end(), d.points.begin(), d.points.end());
  CHECK(hausdorff(convex_hull(pts), stadium_region(720)) <= 1e-3);
}

TEST_CASE("symbol ranges are the gamma ellipses") {
  const PeriodSpec w = PeriodSpec::from_word("01");
  SweepConfig cfg;
  cfg.refine_tol = 1e-8;
  for (int j = 0; j < 24; ++j) {
    const double phi = 2 * pi * j / 24;
    CHECK(hausdorff(range_boundary(build_symbol(w, phi), cfg), gamma_polygon(phi, 8192)) <= 1e-5);
  }
}

TEST_CASE("special vector") {
  CHECK(std::abs(special_vector_value(0.0) - 1.0) <= 1e-15);
  CHECK(std::abs(special_vector_value(0.5) - 1.25) <= 1e-10);
  CHECK(std::abs(special_vector_value(-0.9) - 0.55) <= 1e-10);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex lambda(u(rng), u(rng));
    if (std::abs(lambda) >= 0.97) continue;
    CHECK(std::abs(special_vector_value(lambda) - (1.0 + lambda / 2.0)) <= 1e-10);
  }
  CHECK_THROWS_AS(special_vector_value(1.0), DomainError);
  CHECK_THROWS_AS(special_vector_value(Complex(0.0, -1.5)), DomainError);
}
