#include "pnr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pnr/errors.hpp"

namespace pnr {

namespace {

constexpr double kHullRelTol = 1e-12;
constexpr std::size_t kBruteForceVertices = 32;

double cross(Complex o, Complex a, Complex b) {
  const Complex u = a - o;
  const Complex v = b - o;
  return u.real() * v.imag() - u.imag() * v.real();
}

bool lex_less(Complex x, Complex y) {
  return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
}

double segment_distance(Complex z, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z - a) * std::conj(d)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

// Precomputed view of a convex polygon (>= 3 vertices) answering distance
// queries in O(log n) plus a short walk along the visible chain.
class ConvexRegion {
public:
  explicit ConvexRegion(const RangePolygon& p) : pts_(p.points) {
    const std::size_t n = pts_.size();
    if (n < 3) return;
    for (const auto& z : pts_) centre_ += z;
    centre_ /= static_cast<double>(n);
    angles_.resize(n);
    for (std::size_t i = 0; i < n; ++i) angles_[i] = std::arg(pts_[i] - centre_);
    start_ = static_cast<std::size_t>(std::min_element(angles_.begin(), angles_.end()) - angles_.begin());
    sorted_.resize(n);
    for (std::size_t i = 0; i < n; ++i) sorted_[i] = angles_[(start_ + i) % n];
  }

  double distance(Complex z) const {
    const std::size_t n = pts_.size();
    if (n == 1) return std::abs(z - pts_[0]);
    if (n == 2) return segment_distance(z, pts_[0], pts_[1]);
    if (n <= kBruteForceVertices) return brute(z);
    if (z == centre_) return 0.0;

    const double alpha = std::arg(z - centre_);
    // Edge (e, e+1) whose wedge from the centre contains alpha.
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), alpha);
    std::size_t pos = it == sorted_.begin() ? n - 1 : static_cast<std::size_t>(it - sorted_.begin()) - 1;
    const std::size_t e = (start_ + pos) % n;
    if (cross(pts_[e], pts_[(e + 1) % n], z) >= 0.0) return 0.0;

    double best = edge_distance(z, e);
    for (std::size_t step = 1, j = (e + 1) % n; step < n; ++step, j = (j + 1) % n) {
      const double d = edge_distance(z, j);
      if (d > best) break;
      best = d;
    }
    for (std::size_t step = 1, j = (e + n - 1) % n; step < n; ++step, j = (j + n - 1) % n) {
      const double d = edge_distance(z, j);
      if (d > best) break;
      best = d;
    }
    return best;
  }

private:
  double edge_distance(Complex z, std::size_t i) const {
    return segment_distance(z, pts_[i], pts_[(i + 1) % pts_.size()]);
  }

  double brute(Complex z) const {
    const std::size_t n = pts_.size();
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (cross(pts_[i], pts_[(i + 1) % n], z) < 0.0) inside = false;
      best = std::min(best, edge_distance(z, i));
    }
    return inside ? 0.0 : best;
  }

  const std::vector<Complex>& pts_;
  Complex centre_{};
  std::vector<double> angles_;
  std::vector<double> sorted_;
  std::size_t start_ = 0;
};

}  // namespace

double coordinate_scale(std::span<const Complex> points) {
  double s = 0.0;
  for (const auto& z : points) s = std::max({s, std::abs(z.real()), std::abs(z.imag())});
  return s;
}

RangePolygon convex_hull(std::span<const Complex> input) {
  if (input.empty()) throw DomainError("convex_hull: empty point set");
  for (const auto& z : input)
    if (!is_finite(z)) throw NonFiniteValue("convex_hull: non-finite point");

  std::vector<Complex> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const double tol = kHullRelTol * coordinate_scale(pts);
  if (pts.size() == 1) return RangePolygon{pts};

  // b is kept only if it lies strictly left of a->c by more than tol.
  auto keeps = [&](Complex a, Complex b, Complex c) {
    return cross(a, b, c) > tol * std::abs(c - a);
  };

  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& z : pts) {
    while (k >= 2 && !keeps(hull[k - 2], hull[k - 1], z)) --k;
    hull[k++] = z;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && !keeps(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  // Collapse vertices closer than tol; a cloud that is a point up to rounding
  // becomes a single vertex.
  std::vector<Complex> out;
  for (const auto& z : hull) {
    if (out.empty() || std::abs(z - out.back()) > tol) out.push_back(z);
  }
  while (out.size() > 1 && std::abs(out.back() - out.front()) <= tol) out.pop_back();
  return RangePolygon{std::move(out)};
}

double distance_to_region(const RangePolygon& p, Complex z) {
  if (p.points.empty()) throw DomainError("distance_to_region: empty polygon");
  return ConvexRegion(p).distance(z);
}

bool contains(const RangePolygon& p, Complex z, double tol) { return distance_to_region(p, z) <= tol; }

double max_distance_to_region(const RangePolygon& p, std::span<const Complex> zs) {
  if (p.points.empty()) throw DomainError("max_distance_to_region: empty polygon");
  const ConvexRegion r(p);
  double h = 0.0;
  for (const auto& z : zs) h = std::max(h, r.distance(z));
  return h;
}

double hausdorff(const RangePolygon& p, const RangePolygon& q) {
  if (p.points.empty() || q.points.empty()) throw DomainError("hausdorff: empty polygon");
  const ConvexRegion rp(p);
  const ConvexRegion rq(q);
  double h = 0.0;
  for (const auto& z : p.points) h = std::max(h, rq.distance(z));
  for (const auto& z : q.points) h = std::max(h, rp.distance(z));
  return h;
}

double support_width(const RangePolygon& p, double theta) {
  if (p.points.empty()) throw DomainError("support_width: empty polygon");
  const Complex rot = std::polar(1.0, -theta);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& z : p.points) best = std::max(best, (z * rot).real());
  return best;
}

}  // namespace pnr
