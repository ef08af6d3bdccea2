#include "gaussreduce/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "gaussreduce/reduction.hpp"

namespace gaussreduce {

namespace {

void require_state(const PureGaussianState& state) {
  int n = state.n_modes;
  if (n < 0) throw InvalidInputError("state has a negative mode count");
  if (state.Bmat.rows() != n || state.Bmat.cols() != n)
    throw InvalidInputError("state matrix must match the mode count");
  if (!state.Bmat.allFinite()) throw InvalidInputError("state has non-finite entries");
  if (n > 0 && (state.Bmat - state.Bmat.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw InvalidInputError("state matrix must be symmetric");
}

std::vector<int> checked_modes(int n, const std::vector<int>& modes,
                               const char* what) {
  std::set<int> seen;
  for (int m : modes) {
    if (m < 0 || m >= n)
      throw InvalidInputError(std::string(what) + " index " + std::to_string(m) +
                              " is outside [0, " + std::to_string(n) + ")");
    if (!seen.insert(m).second)
      throw InvalidInputError(std::string(what) + " repeats index " + std::to_string(m));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

PureGaussianState evolve_vacuum(const GaussianTransform& t, const ToleranceConfig& tol) {
  require_valid(t, tol, "evolve_vacuum");
  if (t.beta.cwiseAbs().maxCoeff() > tol.structural_tol)
    throw UnsupportedInputError(
        "evolve_vacuum covers zero-mean outputs only; remove the displacement first");
  BlochMessiahForm f = reduce(t, tol);
  PureGaussianState state;
  state.n_modes = f.n_modes();
  state.Bmat = f.U * f.r.array().tanh().matrix().asDiagonal() * f.U.transpose();
  state.Bmat = 0.5 * (state.Bmat + state.Bmat.transpose().eval());
  return state;
}

FockVector fock_amplitudes(const PureGaussianState& state, int cutoff) {
  require_state(state);
  if (cutoff < 0) throw InvalidInputError("cutoff must be non-negative");
  int n = state.n_modes;
  FockVector amps;
  std::vector<int> vac(n, 0);
  amps[vac] = Complex(1, 0);
  // repeatedly apply the pair-creation generator divided by the running power,
  // so each sweep holds one exponential-series term; every sweep raises the
  // total count by 2
  FockVector term = amps;
  for (int t = 1; 2 * t <= cutoff && !term.empty(); ++t) {
    FockVector next;
    for (const auto& [tuple, value] : term) {
      int total = 0;
      for (int q : tuple) total += q;
      if (total + 2 > cutoff) continue;
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          Complex b = state.Bmat(j, k);
          if (b == Complex(0, 0)) continue;
          std::vector<int> up = tuple;
          double amp_k = std::sqrt(up[k] + 1.0);
          up[k] += 1;
          double amp_j = std::sqrt(up[j] + 1.0);
          up[j] += 1;
          next[up] += value * (0.5 * b * amp_j * amp_k / static_cast<double>(t));
        }
      }
    }
    for (const auto& [tuple, value] : next) amps[tuple] += value;
    term.swap(next);
  }
  return amps;
}

FockVector fock_amplitudes(const PureGaussianState& state,
                           const ComplexVector& coefficients, int cutoff) {
  require_state(state);
  if (coefficients.size() != state.n_modes)
    throw InvalidInputError("coefficient length must match the mode count");
  if (cutoff < 1) return {};
  FockVector base = fock_amplitudes(state, cutoff - 1);
  FockVector out;
  for (const auto& [tuple, value] : base) {
    for (int m = 0; m < state.n_modes; ++m) {
      if (coefficients(m) == Complex(0, 0)) continue;
      std::vector<int> up = tuple;
      double lift = std::sqrt(up[m] + 1.0);
      up[m] += 1;
      out[up] += value * coefficients(m) * lift;
    }
  }
  return out;
}

PureGaussianState project_vacuum(const PureGaussianState& state,
                                 const std::vector<int>& detected_modes) {
  require_state(state);
  std::vector<int> detected = checked_modes(state.n_modes, detected_modes, "detector");
  std::vector<int> rest;
  for (int m = 0; m < state.n_modes; ++m)
    if (!std::binary_search(detected.begin(), detected.end(), m)) rest.push_back(m);
  PureGaussianState out;
  out.n_modes = static_cast<int>(rest.size());
  out.Bmat = ComplexMatrix(out.n_modes, out.n_modes);
  for (size_t a = 0; a < rest.size(); ++a)
    for (size_t b = 0; b < rest.size(); ++b)
      out.Bmat(static_cast<int>(a), static_cast<int>(b)) = state.Bmat(rest[a], rest[b]);
  return out;
}

ConditionedState condition_single_photon(const PureGaussianState& state,
                                         int click_mode,
                                         const std::vector<int>& detected_modes,
                                         const ToleranceConfig& tol) {
  require_state(state);
  if (click_mode < 0 || click_mode >= state.n_modes)
    throw InvalidInputError("click mode is outside the state");
  std::vector<int> detected = checked_modes(state.n_modes, detected_modes, "detector");
  if (std::binary_search(detected.begin(), detected.end(), click_mode))
    throw InvalidInputError("click mode cannot also report vacuum");

  std::vector<int> gone = detected;
  gone.push_back(click_mode);
  std::sort(gone.begin(), gone.end());
  ConditionedState out;
  out.base = project_vacuum(state, gone);
  for (int m = 0; m < state.n_modes; ++m)
    if (!std::binary_search(gone.begin(), gone.end(), m)) out.modes.push_back(m);
  out.coefficients = ComplexVector(out.base.n_modes);
  for (size_t a = 0; a < out.modes.size(); ++a)
    out.coefficients(static_cast<int>(a)) = state.Bmat(click_mode, out.modes[a]);
  out.null = out.base.n_modes == 0 ||
             out.coefficients.cwiseAbs().maxCoeff() <= tol.structural_tol;
  return out;
}

ExcitationCheckReport verify_single_excitation_structure(
    const PureGaussianState& state, int click_mode,
    const std::vector<int>& detected_modes, int cutoff, const ToleranceConfig& tol) {
  ConditionedState cond = condition_single_photon(state, click_mode, detected_modes, tol);
  // surviving tuples hold one click, silent detectors, and at most cutoff
  // photons elsewhere
  FockVector full = fock_amplitudes(state, cutoff + 1);

  // slice the full table at one click and silent detectors, keeping the
  // surviving modes' occupations
  FockVector direct;
  std::vector<int> detected = checked_modes(state.n_modes, detected_modes, "detector");
  for (const auto& [tuple, value] : full) {
    if (tuple[click_mode] != 1) continue;
    bool silent = true;
    for (int d : detected)
      if (tuple[d] != 0) silent = false;
    if (!silent) continue;
    std::vector<int> rest;
    rest.reserve(cond.modes.size());
    int total = 0;
    for (int m : cond.modes) {
      rest.push_back(tuple[m]);
      total += tuple[m];
    }
    if (total > cutoff) continue;
    direct[rest] = value;
  }

  FockVector analytic = cond.null
                            ? FockVector{}
                            : fock_amplitudes(cond.base, cond.coefficients, cutoff);
  // drop analytic entries beyond the slice's reach before comparing
  ExcitationCheckReport report;
  report.null_state = cond.null;
  report.direct_norm = fock_norm(direct);
  report.analytic_norm = fock_norm(analytic);
  double worst = 0.0;
  for (const auto& [tuple, value] : direct) {
    auto it = analytic.find(tuple);
    Complex other = (it == analytic.end()) ? Complex(0, 0) : it->second;
    worst = std::max(worst, std::abs(value - other));
  }
  for (const auto& [tuple, value] : analytic) {
    if (direct.find(tuple) == direct.end())
      worst = std::max(worst, std::abs(value));
  }
  report.max_discrepancy = worst;
  return report;
}

Complex fock_overlap(const FockVector& a, const FockVector& b) {
  Complex sum(0, 0);
  for (const auto& [tuple, value] : a) {
    auto it = b.find(tuple);
    if (it != b.end()) sum += std::conj(value) * it->second;
  }
  return sum;
}

double fock_norm(const FockVector& a) {
  double sum = 0.0;
  for (const auto& [tuple, value] : a) sum += std::norm(value);
  return std::sqrt(sum);
}

std::string dump_fock_vector(const FockVector& amps) {
  std::string out;
  char buf[64];
  for (const auto& [tuple, value] : amps) {
    for (int q : tuple) {
      std::snprintf(buf, sizeof(buf), "%d ", q);
      out += buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", value.real(), value.imag());
    out += buf;
  }
  return out;
}

}  // namespace gaussreduce
