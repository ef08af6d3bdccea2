#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "gaussreduce/errors.hpp"
#include "gaussreduce/tolerance.hpp"

// dense decomposition kernels with a fixed gauge so repeated runs on the same
// input give identical factors:
//   - singular/eigen/Takagi values are returned in descending order
//   - each factor column is scaled so its first significant entry is real
//     positive (complex case with free phase) or has positive leading part
//     (sign-only freedom)
//   - near-equal values are grouped; consumers that must treat degenerate
//     blocks as units receive the grouping explicitly

namespace gaussreduce {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

// index ranges {start, size} of near-equal runs in a descending value list;
// two adjacent values join a group when their gap is at most
// rel_tol * max(1, |value|)
std::vector<std::pair<int, int>> degenerate_groups(const RealVector& values,
                                                   double rel_tol);

struct SvdResult {
  ComplexMatrix U;
  RealVector sigma;  // descending, nonnegative
  ComplexMatrix V;   // M = U * sigma.asDiagonal() * V.adjoint()
  std::vector<std::pair<int, int>> groups;
};

SvdResult svd(const ComplexMatrix& M, const ToleranceConfig& tol = {});

struct EighResult {
  RealVector values;   // descending
  RealMatrix vectors;  // orthonormal columns; M = Q diag(values) Q^T
  std::vector<std::pair<int, int>> groups;
};

// real symmetric eigendecomposition; symmetry is checked against
// structural_tol and the symmetrized matrix is decomposed
EighResult eigh_symmetric(const RealMatrix& M, const ToleranceConfig& tol = {});

struct PolarResult {
  RealMatrix orthogonal;  // O
  RealMatrix positive;    // P symmetric positive definite, S = O * P
};

// polar factors of a square invertible real matrix; singular values at or
// below structural_tol raise SingularInputError
PolarResult polar_decompose(const RealMatrix& S, const ToleranceConfig& tol = {});

struct TakagiResult {
  ComplexMatrix W;  // unitary
  RealVector d;     // descending, nonnegative; M = W diag(d) W^T
  std::vector<std::pair<int, int>> groups;
};

// Takagi factorization of a complex symmetric matrix
TakagiResult takagi(const ComplexMatrix& M, const ToleranceConfig& tol = {});

}  // namespace gaussreduce
