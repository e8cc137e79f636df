#pragma once

#include <optional>

#include "pnr/core_matrix.hpp"
#include "pnr/geometry.hpp"

namespace pnr {

// Ellipse gamma_phi of the 2-periodic word-01 operator: foci +-sqrt(w),
// w = 1 + e^{i phi}, major axis 1 + |w|, minor axis |1 - |w||.
struct EllipseParams {
  double phi = 0.0;
  Complex w;
  Complex focus;  // principal sqrt(w); the other focus is -focus
  double major_len = 0.0;
  double minor_len = 0.0;
  double rotation = 0.0;  // arg sqrt(w), 0 when w = 0
};

// |w| below this is treated as w = 0 (phi = pi up to rounding).
inline constexpr double kZeroW = 1e-14;

EllipseParams gamma_params(double phi);

// e^{i rotation} (|w|/2 e^{-it} + 1/2 e^{it}).
Complex gamma_point(double phi, double t);

// Polygon through gamma_point on a uniform t grid.
RangePolygon gamma_polygon(double phi, int resolution);

// Support value 1/2 + cos(psi) of the tangent line l_psi to |z - 1| = 1/2.
// Domain: psi in [0, pi/2] or [3pi/2, 2pi); throws DomainError otherwise.
double tangent_line_support(double psi);

struct SemiplaneCheck {
  bool contained = false;
  // Closed-form tangency point when gamma_phi touches l_psi.
  std::optional<Complex> tangent_point;
  // Maximum of Re(z e^{-i psi}) over gamma_phi and the point attaining it.
  double max_support = 0.0;
  Complex touch_point;
};

// contained: the t-grid maximum of Re(gamma_point e^{-i psi}) is at most
// 1/2 + cos(psi) + 1e-9. touch_point comes from the exact maximizer of the
// parametrization, independent of the tangent_point formulas.
SemiplaneCheck check_semiplane_containment(double phi, double psi, int t_samples = 4096);

// conv(A u B) for the disks of radius 1/2 centred at -1 and 1.
RangePolygon stadium_region(int resolution);

// <T u, u> for T = T(a, 0, 1) with period word 01 and u the normalized
// truncation of (1, 1, lambda, lambda, lambda^2, lambda^2, ...).
Complex special_vector_value(Complex lambda);

}  // namespace pnr
