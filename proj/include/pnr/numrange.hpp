#pragma once

#include <cstdint>
#include <vector>

#include "pnr/core_matrix.hpp"
#include "pnr/geometry.hpp"
#include "pnr/operators.hpp"

namespace pnr {

// Discretization of the rotation sweep. refine_tol > 0 turns on adaptive
// bisection of the theta grid: an interval is split until the outer triangle
// formed by the two support lines sticks out of the chord by at most
// refine_tol, which bounds the distance from the true range to the polygon.
struct SweepConfig {
  int num_theta = 720;
  int num_phi = 720;
  double refine_tol = 0.0;

  void validate() const;
};

// Support point of W(a) in direction theta: <a v, v> for a top eigenvector v
// of Re(e^{-i theta} a).
Complex boundary_point(const CMatrix& a, double theta);

// Both ends of the support face in direction theta (one point unless the
// boundary has a flat piece there), counterclockwise.
std::vector<Complex> support_face(const CMatrix& a, double theta);

// Convex hull of the support points on the theta grid. Every vertex is a
// Rayleigh quotient of a, so the polygon lies inside W(a).
RangePolygon range_boundary(const CMatrix& a, const SweepConfig& cfg = {});

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

// [min lambda_min(T_phi), max lambda_max(T_phi)] over the phi grid. Throws
// NotSelfAdjoint unless c_j = conj(a_{j+1}) and b is real (tolerance 1e-12).
Interval selfadjoint_interval(const PeriodSpec& spec, const SweepConfig& cfg = {});

// Convex hull of the range boundaries of all symbols on the phi grid.
RangePolygon symbol_union_hull(const PeriodSpec& spec, const SweepConfig& cfg = {});

RangePolygon truncation_range(const PeriodSpec& spec, std::size_t k, const SweepConfig& cfg = {});

// Rayleigh quotients of normalized complex Gaussian vectors; deterministic
// for a given seed on a given standard library.
std::vector<Complex> rayleigh_sample_oracle(const CMatrix& a, std::size_t trials, std::uint64_t seed);

}  // namespace pnr
