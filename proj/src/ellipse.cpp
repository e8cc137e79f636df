#include "pnr/ellipse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "pnr/errors.hpp"
#include "pnr/operators.hpp"

namespace pnr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;

bool near_angle(double x, double y) {
  const double d = std::remainder(x - y, 2.0 * kPi);
  return std::abs(d) <= kAngleTol;
}

void require_semiplane_domain(double psi) {
  const double r = std::remainder(psi, 2.0 * kPi);  // (-pi, pi]
  if (std::abs(r) > kPi / 2 + kAngleTol) throw DomainError("psi outside [0, pi/2] u [3pi/2, 2pi)");
}

}  // namespace

EllipseParams gamma_params(double phi) {
  EllipseParams e;
  e.phi = phi;
  e.w = Complex(1.0 + std::cos(phi), std::sin(phi));
  if (std::abs(e.w) < kZeroW) e.w = 0.0;
  e.focus = std::sqrt(e.w);
  const double mod = std::abs(e.w);
  e.major_len = 1.0 + mod;
  e.minor_len = std::abs(1.0 - mod);
  e.rotation = e.w == Complex{} ? 0.0 : std::arg(e.focus);
  return e;
}

Complex gamma_point(double phi, double t) {
  const EllipseParams e = gamma_params(phi);
  const double mod = std::abs(e.w);
  return std::polar(1.0, e.rotation) * (0.5 * mod * std::polar(1.0, -t) + 0.5 * std::polar(1.0, t));
}

RangePolygon gamma_polygon(double phi, int resolution) {
  if (resolution < 3) throw DomainError("gamma_polygon: resolution must be at least 3");
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(resolution));
  for (int j = 0; j < resolution; ++j) pts.push_back(gamma_point(phi, 2.0 * kPi * j / resolution));
  return convex_hull(pts);
}

double tangent_line_support(double psi) {
  require_semiplane_domain(psi);
  return 0.5 + std::cos(psi);
}

SemiplaneCheck check_semiplane_containment(double phi, double psi, int t_samples) {
  const double bound = tangent_line_support(psi);
  if (t_samples < 8) throw DomainError("check_semiplane_containment: too few samples");

  SemiplaneCheck out;
  const Complex rot = std::polar(1.0, -psi);
  double grid_max = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < t_samples; ++j) {
    grid_max = std::max(grid_max, (gamma_point(phi, 2.0 * kPi * j / t_samples) * rot).real());
  }
  out.contained = grid_max <= bound + 1e-9;

  // Re(z e^{-i psi}) = P cos t + Q sin t, maximized at t = atan2(Q, P).
  const EllipseParams e = gamma_params(phi);
  const double mod = std::abs(e.w);
  const double delta = e.rotation - psi;
  const double p = 0.5 * (mod + 1.0) * std::cos(delta);
  const double q = 0.5 * (mod - 1.0) * std::sin(delta);
  const double t_best = std::atan2(q, p);
  out.touch_point = gamma_point(phi, t_best);
  out.max_support = std::max(grid_max, (out.touch_point * rot).real());

  if (near_angle(psi, kPi / 2)) {
    out.tangent_point = Complex(std::sin(phi), 0.5);
  } else if (near_angle(psi, 3 * kPi / 2)) {
    out.tangent_point = Complex(-std::sin(phi), -0.5);
  } else if (near_angle(phi, psi)) {
    out.tangent_point = 1.0 + 0.5 * std::polar(1.0, psi);
  }
  return out;
}

RangePolygon stadium_region(int resolution) {
  if (resolution < 8) throw DomainError("stadium_region: resolution must be at least 8");
  const int half = resolution / 2;
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(2 * (half + 1)));
  for (int j = 0; j <= half; ++j) {
    const double psi = -kPi / 2 + kPi * j / half;
    const Complex arc = 0.5 * std::polar(1.0, psi);
    pts.push_back(1.0 + arc);
    pts.push_back(-(1.0 + arc));
  }
  return convex_hull(pts);
}

Complex special_vector_value(Complex lambda) {
  const double mod = std::abs(lambda);
  if (!(mod < 1.0)) throw DomainError("special_vector_value: |lambda| must be below 1");
  // Pairs beyond K carry relative weight |lambda|^{2K}.
  std::size_t pairs = 1;
  if (mod > 0.0) {
    pairs = static_cast<std::size_t>(std::ceil(std::log(1e-18) / (2.0 * std::log(mod)))) + 1;
    pairs = std::max<std::size_t>(pairs, 1);
  }
  const std::size_t len = 2 * pairs;
  CVector x(len);
  Complex power = 1.0;
  for (std::size_t k = 0; k < pairs; ++k) {
    x[2 * k] = power;
    x[2 * k + 1] = power;
    power *= lambda;
  }
  const double len_x = norm(x);
  for (auto& z : x) z /= len_x;
  // T(a, 0, 1) with word 01 has ones on the superdiagonal and a_i = i mod 2 on
  // the subdiagonal; evaluate <T x, x> without forming the matrix.
  const PeriodSpec spec = PeriodSpec::from_word("01");
  Complex acc{};
  for (std::size_t i = 0; i < len; ++i) {
    Complex tx = spec.b[i % 2] * x[i];
    if (i + 1 < len) tx += spec.c[i % 2] * x[i + 1];
    if (i > 0) tx += spec.a[i % 2] * x[i - 1];
    acc += tx * std::conj(x[i]);
  }
  return acc;
}

}  // namespace pnr
