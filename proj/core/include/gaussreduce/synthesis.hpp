#pragma once

#include "gaussreduce/elements.hpp"
#include "gaussreduce/reduction.hpp"

namespace gaussreduce {

// one two-mode mixing stage of a triangular mesh, acting on (mode_i, mode_j)
// with the beam splitter convention of elements.hpp
struct NetworkStage {
  int mode_i = 0;
  int mode_j = 0;
  double theta = 0.0;
  double phi = 0.0;
};

struct PassiveNetwork {
  int n_modes = 0;
  std::vector<NetworkStage> stages;  // applied in list order
  RealVector output_phases;          // per-mode phase applied after the mesh
};

// triangular mesh realization of a unitary; at most n(n-1)/2 stages
PassiveNetwork synthesize(const ComplexMatrix& unitary,
                          const ToleranceConfig& tol = {});

ComplexMatrix evaluate(const PassiveNetwork& network);

// minimal element realization of a factorized transform: input mesh,
// one squeezer per nonzero value, output mesh, then the displacement
Circuit full_circuit(const BlochMessiahForm& form, const ToleranceConfig& tol = {});

}  // namespace gaussreduce
