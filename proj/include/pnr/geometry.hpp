#pragma once

#include <span>
#include <vector>

#include "pnr/core_matrix.hpp"

namespace pnr {

// Counterclockwise vertices of a convex region, closed implicitly. One point
// is a point region and two points a segment.
struct RangePolygon {
  std::vector<Complex> points;

  std::size_t size() const { return points.size(); }
  bool operator==(const RangePolygon&) const = default;
};

// Andrew's monotone chain. Vertices come back counterclockwise starting from
// the lexicographically smallest (re, im); points within 1e-12 * scale of the
// chord through their neighbours are dropped. Throws DomainError when empty.
RangePolygon convex_hull(std::span<const Complex> points);

// Distance from z to the filled region (0 inside).
double distance_to_region(const RangePolygon& p, Complex z);

bool contains(const RangePolygon& p, Complex z, double tol);

// Largest distance_to_region over a batch; builds the search index once.
double max_distance_to_region(const RangePolygon& p, std::span<const Complex> zs);

// Symmetric Hausdorff distance of the filled regions. For convex regions the
// farthest point of one region from the other is a vertex, so vertex scans
// are exact.
double hausdorff(const RangePolygon& p, const RangePolygon& q);

// max over vertices of Re(z e^{-i theta}).
double support_width(const RangePolygon& p, double theta);

// Largest |re| or |im| over the vertices.
double coordinate_scale(std::span<const Complex> points);

}  // namespace pnr
