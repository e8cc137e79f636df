#pragma once

#include <vector>

#include "pnr/core_matrix.hpp"

namespace pnr {

// Eigen-decomposition of a Hermitian matrix: ascending values, matching unit
// eigenvector columns. For repeated eigenvalues any orthonormal basis of the
// eigenspace may come back.
struct HermEigen {
  std::vector<double> values;
  CMatrix vectors;
};

// Cyclic complex Jacobi. Throws NotHermitian if the input deviates from its
// adjoint by more than 1e-13 (scaled by max(1, max|h_ij|)), NoConvergence
// after 60 sweeps.
HermEigen eig_hermitian(const CMatrix& h);

// Same result, but Jacobi starts from guess* h guess for a unitary guess
// (e.g. the eigenvectors of a nearby matrix), which usually saves most sweeps.
HermEigen eig_hermitian_warm(const CMatrix& h, const CMatrix& guess);

struct ExtremePair {
  double lower = 0.0;
  CVector lower_vector;
  double upper = 0.0;
  CVector upper_vector;
};

// Smallest and largest eigenvalue with unit eigenvectors. Tridiagonal inputs
// above a small size go through extreme_pair_tridiagonal.
ExtremePair extreme_pair(const CMatrix& h);

// Sturm bisection for the extreme eigenvalues of a Hermitian tridiagonal
// matrix, inverse iteration for the vectors. O(dim) per call modulo the
// bisection depth.
ExtremePair extreme_pair_tridiagonal(const CMatrix& h);

bool is_tridiagonal(const CMatrix& h);

}  // namespace pnr

namespace pnr {

struct Eigenpair {
  double value = 0.0;
  CVector vector;
};

// Largest eigenvalue and a unit eigenvector; same dispatch as extreme_pair.
Eigenpair upper_eigenpair(const CMatrix& h);

}  // namespace pnr

namespace pnr {

// Orthonormal eigenvectors for all eigenvalues within gap of the largest.
// Tridiagonal inputs stay on the fast path unless the top is clustered.
struct TopEigenspace {
  double value = 0.0;
  std::vector<CVector> basis;
};

TopEigenspace top_eigenspace(const CMatrix& h, double gap);

}  // namespace pnr
