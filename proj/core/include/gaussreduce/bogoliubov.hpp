#pragma once

#include <cstdint>
#include <string>

#include "gaussreduce/errors.hpp"
#include "gaussreduce/matrix_kernels.hpp"
#include "gaussreduce/tolerance.hpp"

namespace gaussreduce {

// linear mode transformation b_j = sum_k (A_jk a_k + B_jk a_k^dag) + beta_j
struct GaussianTransform {
  ComplexMatrix A;
  ComplexMatrix B;
  ComplexVector beta;

  int n_modes() const { return static_cast<int>(A.rows()); }
};

// residuals of the four constraints a canonical transformation must satisfy:
//   rel1: A B^T symmetric
//   rel2: A A^dag - B B^dag = I
//   rel3: A^dag B symmetric
//   rel4: A^dag A - (B^dag B)^T = I
// each is the largest absolute entry of the defect matrix
struct ValidationReport {
  double rel1 = 0.0;
  double rel2 = 0.0;
  double rel3 = 0.0;
  double rel4 = 0.0;
  double max_residual = 0.0;

  bool valid(double tol) const { return max_residual <= tol; }
};

GaussianTransform identity_transform(int n_modes);

// throws InvalidInputError on shape mismatch or non-finite entries,
// otherwise reports residuals without judging them
ValidationReport validate(const GaussianTransform& t);

// throws InvalidInputError when validate(t) exceeds tol.structural_tol
void require_valid(const GaussianTransform& t, const ToleranceConfig& tol,
                   const std::string& context);

// applies first, then second
GaussianTransform compose(const GaussianTransform& second,
                          const GaussianTransform& first);

GaussianTransform inverse(const GaussianTransform& t,
                          const ToleranceConfig& tol = {});

// block form [[0, I], [-I, 0]] on (x, p) ordered coordinates
RealMatrix symplectic_form(int n_modes);

// real symplectic image on quadratures x = (a + a^dag)/sqrt(2),
// p = -i (a - a^dag)/sqrt(2), coordinates ordered (x_1..x_n, p_1..p_n);
// the displacement is dropped
RealMatrix to_real_symplectic(const GaussianTransform& t,
                              const ToleranceConfig& tol = {});

// inverse of the map above with beta = 0; rejects S unless S Omega S^T = Omega
GaussianTransform from_real_symplectic(const RealMatrix& S,
                                       const ToleranceConfig& tol = {});

// largest absolute entrywise difference across A, B and beta
double transform_distance(const GaussianTransform& a, const GaussianTransform& b);

// reproducible canonical transformation: Haar passives around uniform
// squeezing values in [0, max_r], zero displacement
GaussianTransform random_transform(int n_modes, double max_r, std::uint64_t seed);

}  // namespace gaussreduce
