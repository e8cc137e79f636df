#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pnr {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

// Dense square complex matrix, row-major. Every entry is finite.
class CMatrix {
public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim);
  CMatrix(std::size_t dim, std::vector<Complex> entries);

  static CMatrix zeros(std::size_t dim) { return CMatrix(dim); }
  static CMatrix identity(std::size_t dim);
  static CMatrix diagonal(std::span<const Complex> diag);
  static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  std::span<const Complex> data() const { return data_; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

  CVector column(std::size_t j) const;

  // Leading principal submatrix of size k.
  CMatrix leading(std::size_t k) const;

  bool operator==(const CMatrix&) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

CMatrix mat_mul(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);

// ½(e^{-iθ}A + (e^{-iθ}A)*), symmetrized so the result is exactly Hermitian.
CMatrix hermitian_part(const CMatrix& a, double theta);

double frobenius_norm(const CMatrix& a);
double frobenius_distance(const CMatrix& a, const CMatrix& b);

// Largest |a_ij - conj(a_ji)|.
double hermitian_defect(const CMatrix& a);

// Direct sum of square blocks, in order.
CMatrix direct_sum(std::span<const CMatrix> blocks);

CVector mat_vec(const CMatrix& a, std::span<const Complex> x);

// <x, y> = sum x_i conj(y_i), linear in the first argument.
Complex inner(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const Complex> x);

// <A v, v> for the given vector (not normalized).
Complex quadratic_form(const CMatrix& a, std::span<const Complex> v);

bool is_finite(Complex z);

}  // namespace pnr
