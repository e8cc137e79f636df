#include "pnr/herm_eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pnr/errors.hpp"

namespace pnr {

namespace {

constexpr double kHermitianTol = 1e-13;
constexpr double kOffDiagRelTol = 1e-14;
constexpr int kMaxSweeps = 60;
constexpr std::size_t kTridiagonalCutover = 12;

double max_abs_entry(const CMatrix& h) {
  double m = 0.0;
  for (const auto& z : h.data()) m = std::max(m, std::abs(z));
  return m;
}

void require_hermitian(const CMatrix& h) {
  const double scale = std::max(1.0, max_abs_entry(h));
  if (hermitian_defect(h) > kHermitianTol * scale) throw NotHermitian("matrix is not Hermitian");
}

double off_diagonal_mass(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) s += 2.0 * std::norm(a(i, j));
  return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary J = diag(1, e^{-i alpha}) * R(c, s) acting on
// rows/columns p and q: a <- J* a J, v <- v J.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Complex g = a(p, q);
  const double mag = std::abs(g);
  if (mag == 0.0) return;
  const Complex phase = g / mag;  // e^{i alpha}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

// Real symmetric tridiagonal form of a Hermitian tridiagonal matrix, obtained
// with a diagonal unitary D: D* h D has diagonal d and off-diagonal e >= 0.
struct RealTridiagonal {
  std::vector<double> d;
  std::vector<double> e;     // e[i] couples i and i+1
  CVector phases;            // diagonal of D
};

RealTridiagonal to_real_tridiagonal(const CMatrix& h) {
  const std::size_t n = h.dim();
  RealTridiagonal t;
  t.d.resize(n);
  t.e.resize(n > 0 ? n - 1 : 0);
  t.phases.assign(n, Complex(1.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) t.d[i] = h(i, i).real();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Complex sub = h(i + 1, i);
    const double mag = std::abs(sub);
    t.e[i] = mag;
    t.phases[i + 1] = mag > 0.0 ? t.phases[i] * (sub / mag) : t.phases[i];
  }
  return t;
}

// Number of eigenvalues strictly less than x.
std::size_t sturm_count(const RealTridiagonal& t, double x) {
  const double tiny = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.d.size(); ++i) {
    const double e2 = i == 0 ? 0.0 : t.e[i - 1] * t.e[i - 1];
    q = t.d[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

// Eigenvalue with (zero-based) ascending index `index`.
double bisect_eigenvalue(const RealTridiagonal& t, std::size_t index) {
  const std::size_t n = t.d.size();
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? t.e[i - 1] : 0.0) + (i + 1 < n ? t.e[i] : 0.0);
    lo = std::min(lo, t.d[i] - r);
    hi = std::max(hi, t.d[i] + r);
  }
  const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  lo -= pad;
  hi += pad;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(t, mid) > index) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Solves (T - shift I) x = rhs by Gaussian elimination with partial pivoting.
std::vector<double> solve_shifted(const RealTridiagonal& t, double shift, std::vector<double> rhs) {
  const std::size_t n = t.d.size();
  const double scale = std::max(1.0, std::abs(shift));
  const double guard = std::numeric_limits<double>::epsilon() * scale;
  // Row i after elimination has entries u0 (diag), u1, u2 (two superdiagonals).
  std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0);
  double cur_diag = t.d[0] - shift;
  double cur_sup = n > 1 ? t.e[0] : 0.0;
  double cur_sup2 = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double below_sub = t.e[i];
    const double below_diag = t.d[i + 1] - shift;
    const double below_sup = i + 2 < n ? t.e[i + 1] : 0.0;
    if (std::abs(below_sub) > std::abs(cur_diag)) {
      // swap rows i and i+1
      u0[i] = below_sub;
      u1[i] = below_diag;
      u2[i] = below_sup;
      const double m = cur_diag / below_sub;
      std::swap(rhs[i], rhs[i + 1]);
      rhs[i + 1] -= m * rhs[i];
      cur_diag = cur_sup - m * below_diag;
      cur_sup = cur_sup2 - m * below_sup;
      cur_sup2 = 0.0;
    } else {
      if (cur_diag == 0.0) cur_diag = guard;
      u0[i] = cur_diag;
      u1[i] = cur_sup;
      u2[i] = cur_sup2;
      const double m = below_sub / cur_diag;
      rhs[i + 1] -= m * rhs[i];
      cur_diag = below_diag - m * cur_sup;
      cur_sup = below_sup - m * cur_sup2;
      cur_sup2 = 0.0;
    }
  }
  if (std::abs(cur_diag) < guard) cur_diag = cur_diag < 0.0 ? -guard : guard;
  u0[n - 1] = cur_diag;
  std::vector<double> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = rhs[ii];
    if (ii + 1 < n) s -= u1[ii] * x[ii + 1];
    if (ii + 2 < n) s -= u2[ii] * x[ii + 2];
    x[ii] = s / u0[ii];
  }
  return x;
}

void normalize(std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  s = std::sqrt(s);
  for (double& v : x) v /= s;
}

std::vector<double> inverse_iteration(const RealTridiagonal& t, double lambda) {
  const std::size_t n = t.d.size();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.25 * std::sin(1.0 + 0.7 * static_cast<double>(i));
  normalize(x);
  for (int it = 0; it < 4; ++it) {
    x = solve_shifted(t, lambda, std::move(x));
    normalize(x);
  }
  return x;
}

CVector lift_phases(const RealTridiagonal& t, const std::vector<double>& x) {
  CVector v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = t.phases[i] * x[i];
  return v;
}

}  // namespace

bool is_tridiagonal(const CMatrix& h) {
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i > j + 1 || j > i + 1) && h(i, j) != Complex{}) return false;
  return true;
}

HermEigen eig_hermitian(const CMatrix& h) { return eig_hermitian_warm(h, CMatrix::identity(h.dim())); }

HermEigen eig_hermitian_warm(const CMatrix& h, const CMatrix& guess) {
  require_hermitian(h);
  const std::size_t n = h.dim();
  if (guess.dim() != n) throw DimensionMismatch("eig_hermitian_warm: guess has the wrong size");
  const bool cold = guess == CMatrix::identity(n);
  CMatrix a = cold ? h : mat_mul(adjoint(guess), mat_mul(h, guess));
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  CMatrix v = CMatrix::identity(n);
  const double target = kOffDiagRelTol * frobenius_norm(a);

  int sweep = 0;
  while (off_diagonal_mass(a) > target) {
    if (++sweep > kMaxSweeps) throw NoConvergence("eig_hermitian: sweep limit exceeded");
    // Entries already below target/n can stay; the loop still terminates.
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) * static_cast<double>(n) > target) rotate(a, v, p, q);
  }
  if (!cold) v = mat_mul(guess, v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermEigen out;
  out.values.resize(n);
  out.vectors = CMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

ExtremePair extreme_pair_tridiagonal(const CMatrix& h) {
  require_hermitian(h);
  if (!is_tridiagonal(h)) throw Error("extreme_pair_tridiagonal: matrix is not tridiagonal");
  const std::size_t n = h.dim();
  if (n == 0) throw DimensionMismatch("extreme_pair_tridiagonal: empty matrix");
  const RealTridiagonal t = to_real_tridiagonal(h);
  ExtremePair out;
  out.lower = bisect_eigenvalue(t, 0);
  out.upper = bisect_eigenvalue(t, n - 1);
  out.lower_vector = lift_phases(t, inverse_iteration(t, out.lower));
  out.upper_vector = lift_phases(t, inverse_iteration(t, out.upper));
  return out;
}

ExtremePair extreme_pair(const CMatrix& h) {
  if (h.dim() == 0) throw DimensionMismatch("extreme_pair: empty matrix");
  if (h.dim() > kTridiagonalCutover && is_tridiagonal(h)) return extreme_pair_tridiagonal(h);
  const HermEigen e = eig_hermitian(h);
  const std::size_t n = h.dim();
  return ExtremePair{e.values.front(), e.vectors.column(0), e.values.back(), e.vectors.column(n - 1)};
}

}  // namespace pnr

namespace pnr {

Eigenpair upper_eigenpair(const CMatrix& h) {
  if (h.dim() == 0) throw DimensionMismatch("upper_eigenpair: empty matrix");
  if (h.dim() > kTridiagonalCutover && is_tridiagonal(h)) {
    require_hermitian(h);
    const RealTridiagonal t = to_real_tridiagonal(h);
    const double top = bisect_eigenvalue(t, h.dim() - 1);
    return {top, lift_phases(t, inverse_iteration(t, top))};
  }
  HermEigen e = eig_hermitian(h);
  return {e.values.back(), e.vectors.column(h.dim() - 1)};
}

}  // namespace pnr

namespace pnr {

TopEigenspace top_eigenspace(const CMatrix& h, double gap) {
  const std::size_t n = h.dim();
  if (n == 0) throw DimensionMismatch("top_eigenspace: empty matrix");
  if (!(gap >= 0.0)) throw Error("top_eigenspace: gap must be non-negative");
  if (n > kTridiagonalCutover && is_tridiagonal(h)) {
    require_hermitian(h);
    const RealTridiagonal t = to_real_tridiagonal(h);
    const double top = bisect_eigenvalue(t, n - 1);
    if (bisect_eigenvalue(t, n - 2) < top - gap) return {top, {lift_phases(t, inverse_iteration(t, top))}};
  }
  const HermEigen e = eig_hermitian(h);
  TopEigenspace out{e.values.back(), {}};
  for (std::size_t k = n; k-- > 0 && e.values[k] >= out.value - gap;) out.basis.push_back(e.vectors.column(k));
  return out;
}

}  // namespace pnr
