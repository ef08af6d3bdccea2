#include "gaussreduce/synthesis.hpp"

#include <cmath>

namespace gaussreduce {

namespace {

double wrap_angle(double x) { return std::atan2(std::sin(x), std::cos(x)); }

}  // namespace

PassiveNetwork synthesize(const ComplexMatrix& unitary, const ToleranceConfig& tol) {
  if (!unitary.allFinite()) throw InvalidInputError("matrix has non-finite entries");
  if (unitary.rows() != unitary.cols() || unitary.rows() == 0)
    throw InvalidInputError("mesh synthesis needs a square matrix");
  int n = static_cast<int>(unitary.rows());
  double defect =
      (unitary * unitary.adjoint() - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > tol.structural_tol)
    throw InvalidInputError("mesh synthesis needs a unitary matrix (residual " +
                            std::to_string(defect) + ")");

  // peel the lower triangle row by row: a right factor mixing columns (c, r)
  // zeroes entry (r, c); the leftovers form a diagonal of output phases
  ComplexMatrix m = unitary;
  PassiveNetwork net;
  net.n_modes = n;
  for (int r = n - 1; r >= 1; --r) {
    for (int c = 0; c < r; ++c) {
      Complex u_rc = m(r, c);
      Complex u_rr = m(r, r);
      if (std::abs(u_rc) <= 1e-15) continue;
      double theta, phi;
      if (std::abs(u_rr) <= 1e-15) {
        theta = M_PI / 2;
        phi = 0.0;
      } else {
        theta = std::atan2(std::abs(u_rc), std::abs(u_rr));
        phi = wrap_angle(std::arg(u_rr) - std::arg(u_rc) + M_PI);
      }
      ComplexVector col_c = m.col(c), col_r = m.col(r);
      m.col(c) = std::cos(theta) * col_c + std::polar(std::sin(theta), -phi) * col_r;
      m.col(r) = -std::polar(std::sin(theta), phi) * col_c + std::cos(theta) * col_r;
      m(r, c) = 0.0;
      // the applied factor B(theta, phi) satisfies U = ... B^dag, and the
      // adjoint of a mixing stage is the same stage with phi shifted by pi
      net.stages.push_back({c, r, theta, wrap_angle(phi + M_PI)});
    }
  }
  net.output_phases = RealVector(n);
  for (int j = 0; j < n; ++j) net.output_phases(j) = std::arg(m(j, j));
  return net;
}

ComplexMatrix evaluate(const PassiveNetwork& network) {
  int n = network.n_modes;
  if (n <= 0) throw InvalidInputError("network must declare its mode count");
  if (network.output_phases.size() != n)
    throw InvalidInputError("network must carry one output phase per mode");
  ComplexMatrix m = ComplexMatrix::Identity(n, n);
  for (const NetworkStage& st : network.stages) {
    if (st.mode_i < 0 || st.mode_i >= n || st.mode_j < 0 || st.mode_j >= n ||
        st.mode_i == st.mode_j)
      throw InvalidInputError("network stage touches an invalid mode pair");
    ComplexMatrix b = ComplexMatrix::Identity(n, n);
    b(st.mode_i, st.mode_i) = std::cos(st.theta);
    b(st.mode_i, st.mode_j) = -std::polar(std::sin(st.theta), st.phi);
    b(st.mode_j, st.mode_i) = std::polar(std::sin(st.theta), -st.phi);
    b(st.mode_j, st.mode_j) = std::cos(st.theta);
    m = b * m;
  }
  for (int j = 0; j < n; ++j) m.row(j) *= std::polar(1.0, network.output_phases(j));
  return m;
}

namespace {

void append_network(Circuit& circuit, const PassiveNetwork& net, double phase_cut) {
  for (const NetworkStage& st : net.stages) {
    CircuitElement e;
    e.kind = ElementKind::BeamSplitter;
    e.modes = {st.mode_i, st.mode_j};
    e.theta = st.theta;
    e.phi = st.phi;
    circuit.elements.push_back(std::move(e));
  }
  for (int j = 0; j < net.n_modes; ++j) {
    if (std::abs(net.output_phases(j)) <= phase_cut) continue;
    CircuitElement e;
    e.kind = ElementKind::PhaseShifter;
    e.modes = {j};
    e.theta = net.output_phases(j);
    circuit.elements.push_back(std::move(e));
  }
}

}  // namespace

Circuit full_circuit(const BlochMessiahForm& form, const ToleranceConfig& tol) {
  int n = form.n_modes();
  if (n == 0) throw InvalidInputError("factorization has no modes");
  Circuit circuit;
  circuit.n_modes = n;
  append_network(circuit, synthesize(form.V.adjoint(), tol), tol.structural_tol);
  for (int j = 0; j < n; ++j) {
    if (form.r(j) <= tol.structural_tol) continue;
    CircuitElement e;
    e.kind = ElementKind::Squeezer;
    e.modes = {j};
    e.r = form.r(j);
    circuit.elements.push_back(std::move(e));
  }
  append_network(circuit, synthesize(form.U, tol), tol.structural_tol);
  if (form.beta.size() == n && form.beta.cwiseAbs().maxCoeff() > tol.structural_tol) {
    CircuitElement e;
    e.kind = ElementKind::Displacement;
    e.beta = form.beta;
    circuit.elements.push_back(std::move(e));
  }
  return circuit;
}

}  // namespace gaussreduce
