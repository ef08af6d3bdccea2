#include "gaussreduce/elements.hpp"

#include <cmath>
#include <set>

namespace gaussreduce {

namespace {

void require_mode(int n_modes, int mode) {
  if (mode < 0 || mode >= n_modes)
    throw InvalidInputError("mode index " + std::to_string(mode) +
                            " is outside [0, " + std::to_string(n_modes) + ")");
}

void require_distinct(int a, int b) {
  if (a == b) throw InvalidInputError("element needs two distinct modes");
}

}  // namespace

GaussianTransform squeezer(int n_modes, int mode, double r, double phi) {
  require_mode(n_modes, mode);
  GaussianTransform t = identity_transform(n_modes);
  t.A(mode, mode) = std::cosh(r);
  t.B(mode, mode) = std::polar(std::sinh(r), phi);
  return t;
}

GaussianTransform two_mode_squeezer(int n_modes, int mode_i, int mode_j, double r) {
  require_mode(n_modes, mode_i);
  require_mode(n_modes, mode_j);
  require_distinct(mode_i, mode_j);
  GaussianTransform t = identity_transform(n_modes);
  t.A(mode_i, mode_i) = std::cosh(r);
  t.A(mode_j, mode_j) = std::cosh(r);
  t.B(mode_i, mode_j) = std::sinh(r);
  t.B(mode_j, mode_i) = std::sinh(r);
  return t;
}

GaussianTransform beam_splitter(int n_modes, int mode_i, int mode_j, double theta,
                                double phi) {
  require_mode(n_modes, mode_i);
  require_mode(n_modes, mode_j);
  require_distinct(mode_i, mode_j);
  GaussianTransform t = identity_transform(n_modes);
  t.A(mode_i, mode_i) = std::cos(theta);
  t.A(mode_i, mode_j) = -std::polar(std::sin(theta), phi);
  t.A(mode_j, mode_i) = std::polar(std::sin(theta), -phi);
  t.A(mode_j, mode_j) = std::cos(theta);
  return t;
}

GaussianTransform phase_shifter(int n_modes, int mode, double theta) {
  require_mode(n_modes, mode);
  GaussianTransform t = identity_transform(n_modes);
  t.A(mode, mode) = std::polar(1.0, theta);
  return t;
}

GaussianTransform multiport(const ComplexMatrix& unitary, const ToleranceConfig& tol) {
  if (!unitary.allFinite()) throw InvalidInputError("matrix has non-finite entries");
  if (unitary.rows() != unitary.cols() || unitary.rows() == 0)
    throw InvalidInputError("multiport matrix must be square and non-empty");
  int n = static_cast<int>(unitary.rows());
  double defect =
      (unitary * unitary.adjoint() - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > tol.structural_tol)
    throw InvalidInputError("multiport matrix is not unitary (residual " +
                            std::to_string(defect) + ")");
  GaussianTransform t = identity_transform(n);
  t.A = unitary;
  return t;
}

GaussianTransform permutation(const std::vector<int>& destination) {
  int n = static_cast<int>(destination.size());
  if (n == 0) throw InvalidInputError("permutation must cover at least one mode");
  std::set<int> seen;
  for (int d : destination) {
    require_mode(n, d);
    if (!seen.insert(d).second)
      throw InvalidInputError("permutation repeats destination " + std::to_string(d));
  }
  GaussianTransform t = identity_transform(n);
  t.A.setZero();
  for (int k = 0; k < n; ++k) t.A(destination[k], k) = 1.0;
  return t;
}

GaussianTransform displacement(int n_modes, const ComplexVector& beta) {
  if (beta.size() != n_modes)
    throw InvalidInputError("displacement length must match the mode count");
  if (!beta.allFinite()) throw InvalidInputError("displacement has non-finite entries");
  GaussianTransform t = identity_transform(n_modes);
  t.beta = beta;
  return t;
}

GaussianTransform qnd_coupler() {
  GaussianTransform t = identity_transform(2);
  t.A << Complex(1, 0), Complex(-0.5, 0), Complex(0.5, 0), Complex(1, 0);
  t.B << Complex(0, 0), Complex(0.5, 0), Complex(0.5, 0), Complex(0, 0);
  return t;
}

GaussianTransform element_transform(int n_modes, const CircuitElement& element,
                                    const ToleranceConfig& tol) {
  switch (element.kind) {
    case ElementKind::Squeezer:
      if (element.modes.size() != 1)
        throw InvalidInputError("squeezer takes exactly one mode");
      return squeezer(n_modes, element.modes[0], element.r, element.phi);
    case ElementKind::TwoModeSqueezer:
      if (element.modes.size() != 2)
        throw InvalidInputError("two-mode squeezer takes exactly two modes");
      return two_mode_squeezer(n_modes, element.modes[0], element.modes[1], element.r);
    case ElementKind::BeamSplitter:
      if (element.modes.size() != 2)
        throw InvalidInputError("beam splitter takes exactly two modes");
      return beam_splitter(n_modes, element.modes[0], element.modes[1], element.theta,
                           element.phi);
    case ElementKind::PhaseShifter:
      if (element.modes.size() != 1)
        throw InvalidInputError("phase shifter takes exactly one mode");
      return phase_shifter(n_modes, element.modes[0], element.theta);
    case ElementKind::Multiport: {
      int k = static_cast<int>(element.modes.size());
      if (k == 0) throw InvalidInputError("multiport element lists no modes");
      if (element.unitary.rows() != k || element.unitary.cols() != k)
        throw InvalidInputError("multiport matrix size must match its mode list");
      std::set<int> seen;
      for (int m : element.modes) {
        require_mode(n_modes, m);
        if (!seen.insert(m).second)
          throw InvalidInputError("multiport repeats mode " + std::to_string(m));
      }
      GaussianTransform local = multiport(element.unitary, tol);
      GaussianTransform t = identity_transform(n_modes);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          t.A(element.modes[a], element.modes[b]) = local.A(a, b);
      return t;
    }
    case ElementKind::Permutation:
      if (static_cast<int>(element.modes.size()) != n_modes)
        throw InvalidInputError("permutation must list a destination for every mode");
      return permutation(element.modes);
    case ElementKind::Displacement:
      return displacement(n_modes, element.beta);
  }
  throw InvalidInputError("unknown element kind");
}

GaussianTransform compile(const Circuit& circuit, const ToleranceConfig& tol) {
  if (circuit.n_modes <= 0) throw InvalidInputError("circuit must declare its mode count");
  GaussianTransform t = identity_transform(circuit.n_modes);
  for (const CircuitElement& e : circuit.elements)
    t = compose(element_transform(circuit.n_modes, e, tol), t);
  return t;
}

}  // namespace gaussreduce
