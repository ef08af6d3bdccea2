#pragma once

#include <vector>

#include "gaussreduce/bogoliubov.hpp"

namespace gaussreduce {

// primitive operations a circuit is written in; the beam splitter acts on a
// mode pair (i, j) as [[cos th, -e^{i phi} sin th], [e^{-i phi} sin th, cos th]]
enum class ElementKind {
  Squeezer,       // modes = {m}, params r, phi
  TwoModeSqueezer,  // modes = {i, j}, param r
  BeamSplitter,   // modes = {i, j}, params theta, phi
  PhaseShifter,   // modes = {m}, param theta
  Multiport,      // modes = all targets in order, unitary acts on them
  Permutation,    // modes = destination of each input: b_{modes[k]} = a_k
  Displacement,   // modes = {all}, beta added mode by mode
};

struct CircuitElement {
  ElementKind kind = ElementKind::PhaseShifter;
  std::vector<int> modes;
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  ComplexMatrix unitary;
  ComplexVector beta;
};

struct Circuit {
  int n_modes = 0;
  std::vector<CircuitElement> elements;
};

GaussianTransform squeezer(int n_modes, int mode, double r, double phi = 0.0);
GaussianTransform two_mode_squeezer(int n_modes, int mode_i, int mode_j, double r);
GaussianTransform beam_splitter(int n_modes, int mode_i, int mode_j, double theta,
                                double phi = 0.0);
GaussianTransform phase_shifter(int n_modes, int mode, double theta);
GaussianTransform multiport(const ComplexMatrix& unitary,
                            const ToleranceConfig& tol = {});
GaussianTransform permutation(const std::vector<int>& destination);
GaussianTransform displacement(int n_modes, const ComplexVector& beta);

// position meter with back action: both quadrature couplings at unit gain
GaussianTransform qnd_coupler();

GaussianTransform element_transform(int n_modes, const CircuitElement& element,
                                    const ToleranceConfig& tol = {});

// elements act in list order: elements.front() hits the input first
GaussianTransform compile(const Circuit& circuit, const ToleranceConfig& tol = {});

}  // namespace gaussreduce
