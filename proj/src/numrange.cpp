#include "pnr/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "pnr/errors.hpp"
#include "pnr/herm_eig.hpp"

namespace pnr {

namespace {

constexpr double kMinRefineAngle = 1e-12;
constexpr int kMaxRefineDepth = 64;
constexpr int kMaxPieces = 4096;
constexpr double kFaceGap = 1e-10;

constexpr std::size_t kDenseLimit = 12;

// Support face at theta. `enter` and `leave` are its two ends in
// counterclockwise order; they coincide unless the top eigenvalue of the
// hermitian part is (nearly) repeated. `basis` keeps the full eigenbasis on
// the dense path so neighbouring angles can warm-start from it.
struct Sample {
  double theta;
  Complex enter;
  Complex leave;
  CMatrix basis;
};

Complex rayleigh(const CMatrix& a, const CVector& v) { return quadratic_form(a, v) / std::norm(norm(v)); }

Sample support_sample(const CMatrix& a, double theta, const CMatrix* guess = nullptr) {
  const CMatrix h = hermitian_part(a, theta);
  const double gap = kFaceGap * std::max(1.0, frobenius_norm(h));
  Sample out{theta, {}, {}, {}};
  std::vector<CVector> top;
  if (a.dim() > kDenseLimit && is_tridiagonal(h)) {
    top = top_eigenspace(h, gap).basis;
  } else {
    HermEigen e = guess != nullptr && guess->dim() == a.dim() ? eig_hermitian_warm(h, *guess) : eig_hermitian(h);
    const std::size_t n = a.dim();
    for (std::size_t k = n; k-- > 0 && e.values[k] >= e.values.back() - gap;) top.push_back(e.vectors.column(k));
    out.basis = std::move(e.vectors);
  }
  if (top.size() == 1) {
    out.enter = out.leave = rayleigh(a, top.front());
    return out;
  }
  // Compress the tangential part onto the top eigenspace; its extreme
  // eigenvectors give the ends of the flat piece.
  const CMatrix k = hermitian_part(a, theta + 0.5 * std::numbers::pi);
  const std::size_t m = top.size();
  CMatrix kc(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const Complex v = inner(mat_vec(k, top[j]), top[i]);
      kc(i, j) = v;
      kc(j, i) = std::conj(v);
    }
  for (std::size_t i = 0; i < m; ++i) kc(i, i) = kc(i, i).real();
  const HermEigen e = eig_hermitian(kc);
  auto lift = [&](std::size_t col) {
    CVector x(a.dim(), Complex{});
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t r = 0; r < x.size(); ++r) x[r] += e.vectors(i, col) * top[i][r];
    return rayleigh(a, x);
  };
  out.enter = lift(0);
  out.leave = lift(m - 1);
  return out;
}

// How far the boundary between two support points can stick out of their
// chord: the height of the triangle cut off by the two support lines is at
// most len/2 * tan(delta/2).
double outer_gap(const Sample& a, const Sample& b) {
  const double len = std::abs(b.enter - a.leave);
  if (len == 0.0) return 0.0;
  return 0.5 * len * std::tan(0.5 * (b.theta - a.theta));
}

void refine(const CMatrix& a, const Sample& lo, const Sample& hi, double tol, int depth,
            std::vector<Complex>& out) {
  if (depth >= kMaxRefineDepth || hi.theta - lo.theta < kMinRefineAngle) return;
  const double gap = outer_gap(lo, hi);
  if (gap <= tol) return;
  // On a smooth arc the gap shrinks like the square of the angle step, so
  // aim for the final spacing in one go; recursion mops up where that fails.
  const int pieces = static_cast<int>(std::clamp(std::ceil(std::sqrt(gap / tol)), 2.0, double(kMaxPieces)));
  const double step = (hi.theta - lo.theta) / pieces;
  Sample prev = lo;
  for (int i = 1; i < pieces; ++i) {
    Sample next = support_sample(a, lo.theta + i * step, &prev.basis);
    refine(a, prev, next, tol, depth + 1, out);
    out.push_back(next.enter);
    if (next.leave != next.enter) out.push_back(next.leave);
    prev = std::move(next);
  }
  refine(a, prev, hi, tol, depth + 1, out);
}

}  // namespace

void SweepConfig::validate() const {
  if (num_theta < 3) throw DomainError("SweepConfig: num_theta must be at least 3");
  if (num_phi < 1) throw DomainError("SweepConfig: num_phi must be at least 1");
  if (!(refine_tol >= 0.0)) throw DomainError("SweepConfig: refine_tol must be non-negative");
}

Complex boundary_point(const CMatrix& a, double theta) { return support_sample(a, theta).enter; }

std::vector<Complex> support_face(const CMatrix& a, double theta) {
  const Sample s = support_sample(a, theta);
  if (s.enter == s.leave) return {s.enter};
  return {s.enter, s.leave};
}

RangePolygon range_boundary(const CMatrix& a, const SweepConfig& cfg) {
  cfg.validate();
  if (a.dim() == 0) throw DimensionMismatch("range_boundary: empty matrix");
  if (a.dim() == 1) return RangePolygon{{a(0, 0)}};

  const auto n = static_cast<std::size_t>(cfg.num_theta);
  std::vector<Sample> grid(n);
  for (std::size_t j = 0; j < n; ++j)
    grid[j] = support_sample(a, grid_angle(j, n), j > 0 ? &grid[j - 1].basis : nullptr);

  std::vector<Complex> points;
  points.reserve(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    points.push_back(grid[j].enter);
    if (grid[j].leave != grid[j].enter) points.push_back(grid[j].leave);
    if (cfg.refine_tol > 0.0) {
      if (j + 1 < n) {
        refine(a, grid[j], grid[j + 1], cfg.refine_tol, 0, points);
      } else {
        Sample wrap = grid[0];
        wrap.theta = 2.0 * std::numbers::pi;
        refine(a, grid[j], wrap, cfg.refine_tol, 0, points);
      }
    }
  }
  return convex_hull(points);
}

Interval selfadjoint_interval(const PeriodSpec& spec, const SweepConfig& cfg) {
  cfg.validate();
  if (!spec.is_self_adjoint(1e-12)) throw NotSelfAdjoint("selfadjoint_interval: operator is not self-adjoint");
  Interval out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  const auto n = static_cast<std::size_t>(cfg.num_phi);
  for (std::size_t i = 0; i < n; ++i) {
    const ExtremePair e = extreme_pair(hermitian_part(build_symbol(spec, grid_angle(i, n)), 0.0));
    out.lower = std::min(out.lower, e.lower);
    out.upper = std::max(out.upper, e.upper);
  }
  return out;
}

RangePolygon symbol_union_hull(const PeriodSpec& spec, const SweepConfig& cfg) {
  cfg.validate();
  const auto n = static_cast<std::size_t>(cfg.num_phi);
  std::vector<Complex> points;
  for (std::size_t i = 0; i < n; ++i) {
    const RangePolygon part = range_boundary(build_symbol(spec, grid_angle(i, n)), cfg);
    points.insert(points.end(), part.points.begin(), part.points.end());
  }
  return convex_hull(points);
}

RangePolygon truncation_range(const PeriodSpec& spec, std::size_t k, const SweepConfig& cfg) {
  return range_boundary(build_truncation(spec, k), cfg);
}

std::vector<Complex> rayleigh_sample_oracle(const CMatrix& a, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw DomainError("rayleigh_sample_oracle: trials must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const std::size_t n = a.dim();
  std::vector<Complex> out;
  out.reserve(trials);
  CVector x(n);
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& z : x) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z = {re, im};
    }
    const double len = norm(x);
    for (auto& z : x) z /= len;
    out.push_back(quadratic_form(a, x));
  }
  return out;
}

}  // namespace pnr
