#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "pnr/core_matrix.hpp"
#include "pnr/geometry.hpp"

namespace pnr::testing {

inline Complex gauss_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

inline CMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  CMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = gauss_complex(rng);
  return a;
}

inline CMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  CMatrix a = random_matrix(n, rng);
  CMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  for (std::size_t i = 0; i < n; ++i) h(i, i) = h(i, i).real();
  return h;
}

inline CVector random_vector(std::size_t n, std::mt19937_64& rng) {
  CVector v(n);
  for (auto& z : v) z = gauss_complex(rng);
  return v;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

// Regular polygon of the circle |z - centre| = r, counterclockwise.
inline RangePolygon circle_polygon(Complex centre, double r, int n) {
  RangePolygon p;
  for (int i = 0; i < n; ++i) p.points.push_back(centre + std::polar(r, 2.0 * std::numbers::pi * i / n));
  return p;
}

}  // namespace pnr::testing
