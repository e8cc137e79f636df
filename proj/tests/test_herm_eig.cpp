#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "pnr/errors.hpp"
#include "pnr/herm_eig.hpp"
#include "support.hpp"

using namespace pnr;
using pnr::testing::random_hermitian;

namespace {

// Plain bisection on the Sturm count of a real symmetric tridiagonal matrix.
// Written independently of the library path (no pivot guard tricks, no phase
// reduction).
struct Tri {
  std::vector<double> d, e;
};

int count_below(const Tri& t, double x) {
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.d.size(); ++i) {
    q = t.d[i] - x - (i > 0 ? t.e[i - 1] * t.e[i - 1] / q : 0.0);
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> sturm_oracle(const Tri& t) {
  double r = 0.0;
  for (std::size_t i = 0; i < t.d.size(); ++i) {
    double row = std::abs(t.d[i]);
    if (i > 0) row += std::abs(t.e[i - 1]);
    if (i < t.e.size()) row += std::abs(t.e[i]);
    r = std::max(r, row);
  }
  std::vector<double> out;
  for (int k = 0; k < static_cast<int>(t.d.size()); ++k) {
    double lo = -r - 1.0, hi = r + 1.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(t, mid) > k) hi = mid;
      else lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

CMatrix tri_matrix(const Tri& t) {
  const std::size_t n = t.d.size();
  CMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) h(i, i) = t.d[i];
  for (std::size_t i = 0; i + 1 < n; ++i) h(i, i + 1) = h(i + 1, i) = t.e[i];
  return h;
}

void check_decomposition(const CMatrix& h, const HermEigen& e) {
  const std::size_t n = h.dim();
  REQUIRE(e.values.size() == n);
  CHECK(std::is_sorted(e.values.begin(), e.values.end()));
  for (std::size_t j = 0; j < n; ++j) {
    const CVector v = e.vectors.column(j);
    CHECK(std::abs(norm(v) - 1.0) <= 1e-12);
    CVector r = mat_vec(h, v);
    for (std::size_t i = 0; i < n; ++i) r[i] -= e.values[j] * v[i];
    CHECK(norm(r) <= 1e-10 * (1.0 + std::abs(e.values[j])));
    for (std::size_t k = j + 1; k < n; ++k) CHECK(std::abs(inner(v, e.vectors.column(k))) <= 1e-10);
  }
}

}  // namespace

TEST_CASE("diagonal and 2x2 examples") {
  const Complex d[] = {3.0, 1.0, 2.0};
  const HermEigen e = eig_hermitian(CMatrix::diagonal(d));
  CHECK(e.values == std::vector<double>{1.0, 2.0, 3.0});

  const HermEigen s = eig_hermitian(CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  CHECK(s.values[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(s.values[1] == doctest::Approx(1.0).epsilon(1e-15));
  // (1, -1)/sqrt2 and (1, 1)/sqrt2 up to phase
  CHECK(std::abs(s.vectors(0, 0) + s.vectors(1, 0)) <= 1e-14);
  CHECK(std::abs(s.vectors(0, 1) - s.vectors(1, 1)) <= 1e-14);

  const HermEigen two = eig_hermitian(CMatrix::from_rows({{0.0, 2.0}, {2.0, 0.0}}));
  CHECK(two.values[0] == doctest::Approx(-2.0));
  CHECK(two.values[1] == doctest::Approx(2.0));
}

TEST_CASE("complex entries need the phase in the rotation") {
  const CMatrix h = CMatrix::from_rows({{1.0, Complex(0, 1)}, {Complex(0, -1), 1.0}});
  const HermEigen e = eig_hermitian(h);
  CHECK(e.values[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(e.values[1] == doctest::Approx(2.0));
  check_decomposition(h, e);
}

TEST_CASE("rejects non-Hermitian input") {
  CHECK_THROWS_AS(eig_hermitian(CMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})), NotHermitian);
  CHECK_THROWS_AS(extreme_pair(CMatrix::from_rows({{Complex(0, 1)}})), NotHermitian);
}

TEST_CASE("random Hermitian matrices: invariants, reconstruction, trace") {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {1, 2, 3, 5, 8, 13, 21, 34, 64}) {
    const CMatrix h = random_hermitian(n, rng);
    const HermEigen e = eig_hermitian(h);
    check_decomposition(h, e);

    const CMatrix lambda = CMatrix::diagonal(CVector(e.values.begin(), e.values.end()));
    const CMatrix back = mat_mul(e.vectors, mat_mul(lambda, adjoint(e.vectors)));
    CHECK(frobenius_distance(h, back) <= 1e-9 * (1.0 + frobenius_norm(h)));

    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += h(i, i).real();
    const double sum = std::accumulate(e.values.begin(), e.values.end(), 0.0);
    CHECK(std::abs(sum - trace) <= 1e-10 * (1.0 + std::abs(trace)));
  }
}

TEST_CASE("deterministic output") {
  std::mt19937_64 rng(4);
  const CMatrix h = random_hermitian(7, rng);
  const HermEigen a = eig_hermitian(h);
  const HermEigen b = eig_hermitian(h);
  CHECK(a.values == b.values);
  CHECK(a.vectors == b.vectors);
}

TEST_CASE("warm start reaches the same spectrum") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix h = random_hermitian(6, rng);
    const CMatrix near = h + Complex(1e-3) * random_hermitian(6, rng);
    const HermEigen guess = eig_hermitian(near);
    const HermEigen cold = eig_hermitian(h);
    const HermEigen warm = eig_hermitian_warm(h, guess.vectors);
    check_decomposition(h, warm);
    for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(cold.values[k] - warm.values[k]) <= 1e-12);
  }
}

TEST_CASE("extreme_pair examples") {
  const Complex d[] = {-5.0, 7.0};
  const ExtremePair e = extreme_pair(CMatrix::diagonal(d));
  CHECK(e.lower == -5.0);
  CHECK(e.upper == 7.0);
  CHECK(std::abs(std::abs(e.lower_vector[0]) - 1.0) <= 1e-15);
  CHECK(std::abs(std::abs(e.upper_vector[1]) - 1.0) <= 1e-15);

  const ExtremePair z = extreme_pair(CMatrix::zeros(3));
  CHECK(z.lower == 0.0);
  CHECK(z.upper == 0.0);
  CHECK(norm(z.lower_vector) == doctest::Approx(1.0));
}

TEST_CASE("extreme_pair agrees with the full decomposition") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix h = random_hermitian(4, rng);
    const HermEigen full = eig_hermitian(h);
    const ExtremePair e = extreme_pair(h);
    CHECK(e.lower == doctest::Approx(full.values.front()).epsilon(1e-13));
    CHECK(e.upper == doctest::Approx(full.values.back()).epsilon(1e-13));
  }
}

TEST_CASE("tridiagonal inputs match the Sturm bisection oracle") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (std::size_t n : {2, 5, 12, 13, 40, 150}) {
    Tri t;
    for (std::size_t i = 0; i < n; ++i) t.d.push_back(u(rng));
    for (std::size_t i = 0; i + 1 < n; ++i) t.e.push_back(u(rng));
    const std::vector<double> oracle = sturm_oracle(t);
    const CMatrix h = tri_matrix(t);
    const HermEigen e = eig_hermitian(h);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(e.values[k] - oracle[k]) <= 1e-9);

    const ExtremePair fast = extreme_pair_tridiagonal(h);
    CHECK(std::abs(fast.lower - oracle.front()) <= 1e-9);
    CHECK(std::abs(fast.upper - oracle.back()) <= 1e-9);
    for (const auto* v : {&fast.lower_vector, &fast.upper_vector}) {
      const double lambda = v == &fast.lower_vector ? fast.lower : fast.upper;
      CVector r = mat_vec(h, *v);
      for (std::size_t i = 0; i < n; ++i) r[i] -= lambda * (*v)[i];
      CHECK(norm(r) <= 1e-9 * (1.0 + std::abs(lambda)));
    }
  }
}

TEST_CASE("complex tridiagonal fast path") {
  std::mt19937_64 rng(78);
  std::normal_distribution<double> g;
  const std::size_t n = 60;
  CMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) h(i, i) = g(rng);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h(i, i + 1) = Complex(g(rng), g(rng));
    h(i + 1, i) = std::conj(h(i, i + 1));
  }
  // a zero coupling splits the matrix
  h(20, 21) = h(21, 20) = 0.0;
  REQUIRE(is_tridiagonal(h));
  const HermEigen full = eig_hermitian(h);
  const ExtremePair e = extreme_pair(h);
  CHECK(std::abs(e.upper - full.values.back()) <= 1e-10);
  CHECK(std::abs(e.lower - full.values.front()) <= 1e-10);
  const Eigenpair top = upper_eigenpair(h);
  CHECK(std::abs(top.value - full.values.back()) <= 1e-10);
}

TEST_CASE("top_eigenspace finds repeated top eigenvalues") {
  const Complex d[] = {1.0, 3.0, 3.0, -2.0};
  const TopEigenspace t = top_eigenspace(CMatrix::diagonal(d), 1e-12);
  CHECK(t.value == 3.0);
  CHECK(t.basis.size() == 2);

  // Two decoupled copies of a path: every eigenvalue is doubled.
  const std::size_t n = 30;
  CMatrix h(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (i != 14) h(i, i + 1) = h(i + 1, i) = 1.0;
  const TopEigenspace big = top_eigenspace(h, 1e-10);
  CHECK(big.value == doctest::Approx(2.0 * std::cos(std::numbers::pi / 16.0)));
  CHECK(big.basis.size() == 2);

  std::mt19937_64 rng(5);
  const TopEigenspace single = top_eigenspace(random_hermitian(5, rng), 1e-10);
  CHECK(single.basis.size() == 1);
}
