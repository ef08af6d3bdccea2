#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaussreduce/bogoliubov.hpp"

namespace gaussreduce {

// pure zero-mean state written as exp(1/2 sum_jk Bmat_jk b_j^dag b_k^dag)|0>,
// unnormalized so the vacuum amplitude is exactly 1; Bmat is symmetric
struct PureGaussianState {
  int n_modes = 0;
  ComplexMatrix Bmat;
};

// occupation tuple -> amplitude, ordered lexicographically by the tuple
using FockVector = std::map<std::vector<int>, Complex>;

// state reached from the vacuum; displacements are not representable here
PureGaussianState evolve_vacuum(const GaussianTransform& t,
                                const ToleranceConfig& tol = {});

// every amplitude with total occupation <= cutoff; each returned value is
// exact for the state, independent of the cutoff
FockVector fock_amplitudes(const PureGaussianState& state, int cutoff);

// amplitudes of sum_m coefficients_m b_m^dag applied to a Gaussian state
FockVector fock_amplitudes(const PureGaussianState& state,
                           const ComplexVector& coefficients, int cutoff);

// conditioning on zero counts in the detected modes keeps a Gaussian state on
// the rest: the Bmat principal submatrix
PureGaussianState project_vacuum(const PureGaussianState& state,
                                 const std::vector<int>& detected_modes);

// result of a single click on click_mode with vacuum on detected_modes:
// (sum_m coefficients_m b_m^dag) applied to base, exactly, including scale;
// null marks a click that cannot happen (all coefficients zero)
struct ConditionedState {
  PureGaussianState base;
  ComplexVector coefficients;
  std::vector<int> modes;  // original labels of the surviving modes
  bool null = false;
};

ConditionedState condition_single_photon(const PureGaussianState& state,
                                         int click_mode,
                                         const std::vector<int>& detected_modes,
                                         const ToleranceConfig& tol = {});

// cross-checks the conditioned state against direct projection of the full
// amplitude table
struct ExcitationCheckReport {
  double max_discrepancy = 0.0;
  double direct_norm = 0.0;
  double analytic_norm = 0.0;
  bool null_state = false;
};

ExcitationCheckReport verify_single_excitation_structure(
    const PureGaussianState& state, int click_mode,
    const std::vector<int>& detected_modes, int cutoff,
    const ToleranceConfig& tol = {});

Complex fock_overlap(const FockVector& a, const FockVector& b);
double fock_norm(const FockVector& a);

// one line per tuple: occupations, then real and imaginary parts
std::string dump_fock_vector(const FockVector& amps);

}  // namespace gaussreduce
