#pragma once

namespace gaussreduce {

// shared numeric policy; all residual comparisons in this library use the
// absolute elementwise max-norm
struct ToleranceConfig {
  // absolute tolerance on structural residuals (constraint checks,
  // factorization round-trips)
  double structural_tol = 1e-10;
  // relative spacing below which adjacent singular values / eigenvalues are
  // treated as one degenerate group
  double degeneracy_tol = 1e-8;
};

}  // namespace gaussreduce
