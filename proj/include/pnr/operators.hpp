#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pnr/core_matrix.hpp"

namespace pnr {

// One period of a periodic tridiagonal operator T(a, b, c): row i holds
// a[i mod p] on the subdiagonal, b[i mod p] on the diagonal and c[i mod p] on
// the superdiagonal. Row 0 therefore starts with b0, c0 and the first
// subdiagonal entry (row 1) is a1.
struct PeriodSpec {
  std::vector<Complex> a;
  std::vector<Complex> b;
  std::vector<Complex> c;

  // Validates p >= 2, equal lengths and finite entries.
  static PeriodSpec make(std::vector<Complex> a, std::vector<Complex> b, std::vector<Complex> c);

  // T(a, 0, 1) with the a-sequence read from the word. Letters are single
  // digits ("001") or comma separated scalars ("-1,1,1").
  static PeriodSpec from_word(std::string_view word);

  std::size_t period() const { return a.size(); }

  // c_j == conj(a_{j+1}) and Im(b_j) == 0 within tol.
  bool is_self_adjoint(double tol = 1e-12) const;

  bool operator==(const PeriodSpec&) const = default;
};

// Accepts "p=2;a=0,1;b=0,0;c=1,1" and "word=01". Throws ParseError.
PeriodSpec parse_spec(std::string_view text);
std::string format_spec(const PeriodSpec& spec);

// Parses "1", "-0.5", "2i", "-i", "1+2i", "1.5e-3-2i".
Complex parse_complex(std::string_view text);

// 2*pi*k/s.
double grid_angle(std::size_t k, std::size_t s);

// k x k leading section of T.
CMatrix build_truncation(const PeriodSpec& spec, std::size_t k);

// m x m cyclic matrix, m = s*p, with corners (0, m-1) = a0 and (m-1, 0) = c_{p-1}.
CMatrix build_circulant(const PeriodSpec& spec, std::size_t s);

// p x p symbol: one period with corner entries a0 e^{-i phi} (top right) and
// c_{p-1} e^{i phi} (bottom left). For p = 2 the corners land on the
// off-diagonal and add to c0 and a1.
CMatrix build_symbol(const PeriodSpec& spec, double phi);

struct SymbolSample {
  double phi = 0.0;
  CMatrix matrix;
};

// Symbols on the grid phi_k = 2*pi*k/count.
std::vector<SymbolSample> symbol_samples(const PeriodSpec& spec, std::size_t count);

// u_{j,k} in C^{s p}: 1/sqrt(s) * rho_k^l at positions j + l p, rho_k = e^{2 pi i k / s}.
CVector fourier_vector(std::size_t p, std::size_t s, std::size_t j, std::size_t k);

// Columns u_{0,0} .. u_{p-1,0}, u_{0,1} .. u_{p-1,s-1} (k-major).
CMatrix build_block_unitary(std::size_t p, std::size_t s);

// T_{phi_0} (+) ... (+) T_{phi_{s-1}}.
CMatrix build_symbol_direct_sum(const PeriodSpec& spec, std::size_t s);

struct ConjecturePair {
  CMatrix plus;   // B_n + J_n
  CMatrix minus;  // B_n - J_n
};

// B_n is the (n+1) x (n+1) matrix with ones on the first superdiagonal, J_n
// has ones at (0,0) and (n,n).
ConjecturePair conjecture_matrices(std::size_t n);

// (v, v e^{i phi}, ..., v e^{i (s-1) phi}).
CVector lift_eigenvector(std::span<const Complex> v, double phi, std::size_t s);

}  // namespace pnr
