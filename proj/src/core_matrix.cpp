#include "pnr/core_matrix.hpp"

#include <cmath>
#include <string>

#include "pnr/errors.hpp"

namespace pnr {

namespace {

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

}  // namespace

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim * dim) {
    throw DimensionMismatch("CMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                            std::to_string(data_.size()));
  }
  for (const auto& z : data_) {
    if (!is_finite(z)) throw NonFiniteValue("CMatrix: non-finite entry");
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
  CMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (!is_finite(diag[i])) throw NonFiniteValue("CMatrix::diagonal: non-finite entry");
    m(i, i) = diag[i];
  }
  return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DimensionMismatch("CMatrix::from_rows: matrix must be square");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return CMatrix(n, std::move(entries));
}

CVector CMatrix::column(std::size_t j) const {
  CVector col(dim_);
  for (std::size_t i = 0; i < dim_; ++i) col[i] = (*this)(i, j);
  return col;
}

CMatrix CMatrix::leading(std::size_t k) const {
  if (k > dim_) throw DimensionMismatch("CMatrix::leading: size exceeds dimension");
  CMatrix m(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
  return m;
}

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "mat_mul");
  const std::size_t n = a.dim();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CMatrix adjoint(const CMatrix& a) {
  const std::size_t n = a.dim();
  CMatrix t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "operator+");
  CMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "operator-");
  CMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

CMatrix operator*(Complex s, const CMatrix& a) {
  CMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = s * a(i, j);
  return c;
}

CMatrix hermitian_part(const CMatrix& a, double theta) {
  const std::size_t n = a.dim();
  const Complex rot = std::polar(1.0, -theta);
  CMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = Complex((rot * a(i, i)).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (rot * a(i, j) + std::conj(rot * a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "frobenius_distance");
  double s = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) s += std::norm(da[i] - db[i]);
  return std::sqrt(s);
}

double hermitian_defect(const CMatrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

CMatrix direct_sum(std::span<const CMatrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.dim();
  CMatrix m(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(off + i, off + j) = b(i, j);
    off += b.dim();
  }
  return m;
}

CVector mat_vec(const CMatrix& a, std::span<const Complex> x) {
  if (x.size() != a.dim()) throw DimensionMismatch("mat_vec: vector length does not match matrix");
  CVector y(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Complex s{};
    auto r = a.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw DimensionMismatch("inner: length mismatch");
  Complex s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

double norm(std::span<const Complex> x) {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return std::sqrt(s);
}

Complex quadratic_form(const CMatrix& a, std::span<const Complex> v) {
  const CVector av = mat_vec(a, v);
  return inner(av, v);
}

}  // namespace pnr
