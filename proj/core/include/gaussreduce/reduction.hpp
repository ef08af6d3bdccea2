#pragma once

#include "gaussreduce/bogoliubov.hpp"

namespace gaussreduce {

// canonical factorization T = displacement(beta) . multiport(U)
//                           . single_mode_squeezers(r) . multiport(V^dag);
// r is non-negative and descending, U and V are unitary witnesses in a
// deterministic gauge:
//   - degenerate r blocks share a real-orthogonal basis fixed by
//     diagonalizing V_blk^T V_blk (real part first, imaginary refinement)
//   - each r > 0 column carries a +-1 sign fixed by U's leading entry
//   - each r = 0 column carries a common phase fixed the same way
struct BlochMessiahForm {
  ComplexMatrix U;
  ComplexMatrix V;
  RealVector r;
  ComplexVector beta;

  int n_modes() const { return static_cast<int>(r.size()); }
};

BlochMessiahForm reduce(const GaussianTransform& t, const ToleranceConfig& tol = {});

GaussianTransform recompose(const BlochMessiahForm& form,
                            const ToleranceConfig& tol = {});

// the r vector alone, descending, with values inside the structural band
// clamped to exactly zero; invariant under passive composition on either side
RealVector squeeze_spectrum(const GaussianTransform& t,
                            const ToleranceConfig& tol = {});

// number of spectrum entries strictly above threshold
int squeezer_count(const GaussianTransform& t, double threshold,
                   const ToleranceConfig& tol = {});

}  // namespace gaussreduce
