#include "cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "gaussreduce/elements.hpp"
#include "gaussreduce/gaussian_state.hpp"
#include "gaussreduce/reduction.hpp"
#include "gaussreduce/serialization.hpp"
#include "gaussreduce/synthesis.hpp"

namespace gaussreduce::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;
constexpr int kNumerical = 3;

// a conditioned state is accepted as one excitation on a Gaussian when the
// direct and analytic amplitude tables agree this tightly
constexpr double kStructureThreshold = 1e-6;

struct Options {
  std::vector<std::string> builtins;
  std::vector<std::string> files;
  double tol = 1e-10;
  double degeneracy_tol = 1e-8;
  int cutoff = 6;
  std::uint64_t seed = 0;
  std::string format = "text";
  int click = 0;
  std::vector<int> vacuum;
  std::string mode = "exact";

  ToleranceConfig tolerances() const { return {tol, degeneracy_tol}; }
  bool json() const { return format == "json"; }
};

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string cnum(const Complex& z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

void print_matrix(std::ostream& out, const std::string& name, const ComplexMatrix& m) {
  out << name << ":\n";
  for (int i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << cnum(m(i, j));
    }
    out << "]\n";
  }
}

double to_decibel(double r) { return 20.0 * r / std::log(10.0); }
double to_degrees(double rad) { return rad * 180.0 / M_PI; }

Circuit split_pair_circuit(double r) {
  Circuit c;
  c.n_modes = 2;
  c.elements.push_back({ElementKind::BeamSplitter, {0, 1}, 0.0, M_PI / 4, M_PI, {}, {}});
  c.elements.push_back({ElementKind::Squeezer, {0}, r, 0.0, 0.0, {}, {}});
  c.elements.push_back({ElementKind::Squeezer, {1}, r, 0.0, M_PI, {}, {}});
  c.elements.push_back({ElementKind::BeamSplitter, {0, 1}, 0.0, M_PI / 4, 0.0, {}, {}});
  return c;
}

GaussianTransform builtin_transform(const std::string& name, const Options& opt) {
  ToleranceConfig tol = opt.tolerances();
  if (name == "qnd") return qnd_coupler();
  if (name == "d2") return two_mode_squeezer(2, 0, 1, 0.5);
  if (name == "e4")
    return compose(two_mode_squeezer(4, 0, 1, 0.5), two_mode_squeezer(4, 2, 3, 0.5));
  if (name == "fig2") return compile(split_pair_circuit(0.5), tol);
  if (name == "fig3") return compile(full_circuit(reduce(qnd_coupler(), tol), tol), tol);
  if (name == "random") return random_transform(4, 1.0, opt.seed);
  throw InvalidInputError("unknown builtin \"" + name +
                          "\" (choices: qnd, d2, e4, fig2, fig3, random)");
}

GaussianTransform load_file(const std::string& path, const ToleranceConfig& tol) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  if (detect_input_kind(text) == InputKind::Circuit)
    return compile(circuit_from_json(text), tol);
  return transform_from_json(text);
}

std::vector<GaussianTransform> gather_inputs(const Options& opt, size_t count) {
  std::vector<GaussianTransform> inputs;
  for (const std::string& name : opt.builtins)
    inputs.push_back(builtin_transform(name, opt));
  for (const std::string& path : opt.files)
    inputs.push_back(load_file(path, opt.tolerances()));
  if (inputs.size() != count)
    throw InvalidInputError("expected " + std::to_string(count) + " input" +
                            (count == 1 ? "" : "s") + " (got " +
                            std::to_string(inputs.size()) + ")");
  return inputs;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  GaussianTransform t = gather_inputs(opt, 1).front();
  ValidationReport report = validate(t);
  bool ok = report.valid(opt.tol);
  if (opt.json()) {
    nlohmann::json j;
    j["valid"] = ok;
    j["rel1"] = report.rel1;
    j["rel2"] = report.rel2;
    j["rel3"] = report.rel3;
    j["rel4"] = report.rel4;
    j["max_residual"] = report.max_residual;
    j["tol"] = opt.tol;
    out << j.dump() << "\n";
  } else {
    out << "modes: " << t.n_modes() << "\n";
    out << "pair symmetry residual:        " << num(report.rel1) << "\n";
    out << "commutator residual:           " << num(report.rel2) << "\n";
    out << "cross symmetry residual:       " << num(report.rel3) << "\n";
    out << "dual commutator residual:      " << num(report.rel4) << "\n";
    out << "max residual:                  " << num(report.max_residual) << "\n";
    out << "verdict: " << (ok ? "valid" : "invalid") << " (tol " << num(opt.tol)
        << ")\n";
  }
  return ok ? kOk : kNegative;
}

int cmd_reduce(const Options& opt, std::ostream& out) {
  GaussianTransform t = gather_inputs(opt, 1).front();
  BlochMessiahForm form = reduce(t, opt.tolerances());
  if (opt.json()) {
    out << to_json(form) << "\n";
    return kOk;
  }
  out << "modes: " << form.n_modes() << "\n";
  for (int j = 0; j < form.r.size(); ++j)
    out << "r[" << j << "] = " << num(form.r(j)) << "  (" << num(to_decibel(form.r(j)))
        << " dB)\n";
  print_matrix(out, "U (output side)", form.U);
  print_matrix(out, "V (input side, applied as V^dag)", form.V);
  if (form.beta.cwiseAbs().maxCoeff() > 0) {
    out << "displacement:\n";
    for (int j = 0; j < form.beta.size(); ++j)
      out << "  beta[" << j << "] = " << cnum(form.beta(j)) << "\n";
  }
  return kOk;
}

int cmd_synthesize(const Options& opt, std::ostream& out) {
  GaussianTransform t = gather_inputs(opt, 1).front();
  ToleranceConfig tol = opt.tolerances();
  Circuit circuit = full_circuit(reduce(t, tol), tol);
  if (opt.json()) {
    out << to_json(circuit) << "\n";
    return kOk;
  }
  out << "modes: " << circuit.n_modes << "\n";
  out << "elements: " << circuit.elements.size() << "\n";
  for (const CircuitElement& e : circuit.elements) {
    switch (e.kind) {
      case ElementKind::BeamSplitter:
        out << "  beam_splitter modes=(" << e.modes[0] << "," << e.modes[1]
            << ") theta=" << num(e.theta) << " phi=" << num(e.phi) << "\n";
        break;
      case ElementKind::Squeezer:
        out << "  squeezer mode=" << e.modes[0] << " r=" << num(e.r) << " ("
            << num(to_decibel(e.r)) << " dB)\n";
        break;
      case ElementKind::PhaseShifter:
        out << "  phase_shifter mode=" << e.modes[0] << " theta=" << num(e.theta)
            << "\n";
        break;
      case ElementKind::Displacement: {
        out << "  displacement";
        for (int j = 0; j < e.beta.size(); ++j) out << " " << cnum(e.beta(j));
        out << "\n";
        break;
      }
      default:
        out << "  (other element)\n";
        break;
    }
  }
  double residual = transform_distance(compile(circuit, tol), t);
  out << "recompiled residual: " << num(residual) << "\n";
  return kOk;
}

int cmd_equiv(const Options& opt, std::ostream& out) {
  std::vector<GaussianTransform> inputs = gather_inputs(opt, 2);
  double distance = 0.0;
  bool same_modes = inputs[0].n_modes() == inputs[1].n_modes();
  bool equivalent = false;
  if (same_modes) {
    if (opt.mode == "exact") {
      distance = transform_distance(inputs[0], inputs[1]);
    } else {
      ToleranceConfig tol = opt.tolerances();
      distance = (squeeze_spectrum(inputs[0], tol) - squeeze_spectrum(inputs[1], tol))
                     .cwiseAbs()
                     .maxCoeff();
    }
    equivalent = distance <= opt.tol;
  }
  if (opt.json()) {
    nlohmann::json j;
    j["equivalent"] = equivalent;
    j["mode"] = opt.mode;
    if (same_modes) j["distance"] = distance;
    j["tol"] = opt.tol;
    out << j.dump() << "\n";
  } else if (!same_modes) {
    out << "verdict: not equivalent (mode counts differ: " << inputs[0].n_modes()
        << " vs " << inputs[1].n_modes() << ")\n";
  } else {
    out << "comparison: " << opt.mode << "\n";
    out << "distance: " << num(distance) << "\n";
    out << "verdict: " << (equivalent ? "equivalent" : "not equivalent") << " (tol "
        << num(opt.tol) << ")\n";
  }
  return equivalent ? kOk : kNegative;
}

int cmd_spectrum(const Options& opt, std::ostream& out) {
  GaussianTransform t = gather_inputs(opt, 1).front();
  ToleranceConfig tol = opt.tolerances();
  RealVector r = squeeze_spectrum(t, tol);
  int count = squeezer_count(t, opt.tol, tol);
  if (opt.json()) {
    nlohmann::json j;
    j["r"] = std::vector<double>(r.data(), r.data() + r.size());
    std::vector<double> db;
    for (int i = 0; i < r.size(); ++i) db.push_back(to_decibel(r(i)));
    j["dB"] = db;
    j["count"] = count;
    out << j.dump() << "\n";
    return kOk;
  }
  for (int j = 0; j < r.size(); ++j)
    out << "r[" << j << "] = " << num(r(j)) << "  (" << num(to_decibel(r(j)))
        << " dB)\n";
  out << "squeezers above tol: " << count << "\n";
  return kOk;
}

int cmd_nogo(const Options& opt, std::ostream& out) {
  GaussianTransform t = gather_inputs(opt, 1).front();
  ToleranceConfig tol = opt.tolerances();
  PureGaussianState state = evolve_vacuum(t, tol);
  ConditionedState cond = condition_single_photon(state, opt.click, opt.vacuum, tol);
  ExcitationCheckReport report =
      verify_single_excitation_structure(state, opt.click, opt.vacuum, opt.cutoff, tol);
  bool confirmed = report.max_discrepancy <= kStructureThreshold;
  if (opt.json()) {
    nlohmann::json j;
    j["click"] = opt.click;
    j["vacuum"] = opt.vacuum;
    j["surviving_modes"] = cond.modes;
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i < cond.coefficients.size(); ++i)
      coeffs.push_back({cond.coefficients(i).real(), cond.coefficients(i).imag()});
    j["coefficients"] = std::move(coeffs);
    j["null"] = report.null_state;
    j["cutoff"] = opt.cutoff;
    j["direct_norm"] = report.direct_norm;
    j["analytic_norm"] = report.analytic_norm;
    j["max_discrepancy"] = report.max_discrepancy;
    j["confirmed"] = confirmed;
    out << j.dump() << "\n";
  } else {
    out << "state: " << state.n_modes << " modes, click on " << opt.click
        << ", vacuum on";
    if (opt.vacuum.empty()) out << " none";
    for (int v : opt.vacuum) out << " " << v;
    out << "\n";
    if (report.null_state) {
      out << "click has zero amplitude: conditioned state is null\n";
    } else {
      out << "conditioned state: sum_m c_m b_m^dag acting on a Gaussian over modes";
      for (int m : cond.modes) out << " " << m;
      out << "\n";
      for (int i = 0; i < cond.coefficients.size(); ++i)
        out << "  c[" << cond.modes[i] << "] = " << cnum(cond.coefficients(i)) << "\n";
    }
    out << "direct slice norm:   " << num(report.direct_norm) << "\n";
    out << "analytic norm:       " << num(report.analytic_norm) << "\n";
    out << "max discrepancy:     " << num(report.max_discrepancy) << " (cutoff "
        << opt.cutoff << ")\n";
    out << "single-excitation structure: "
        << (confirmed ? "confirmed" : "violated") << "\n";
    out << "a lone click adds one excitation to a Gaussian state; it cannot "
           "produce a superposition of distinct field amplitudes\n";
  }
  return confirmed ? kOk : kNumerical;
}

int cmd_meter_demo(const Options& opt, std::ostream& out) {
  ToleranceConfig tol = opt.tolerances();
  GaussianTransform t = qnd_coupler();
  BlochMessiahForm form = reduce(t, tol);
  PassiveNetwork out_mesh = synthesize(form.U, tol);
  PassiveNetwork in_mesh = synthesize(form.V.adjoint(), tol);
  std::vector<double> angles, transmissions;
  for (const PassiveNetwork* mesh : {&in_mesh, &out_mesh}) {
    for (const NetworkStage& st : mesh->stages) {
      angles.push_back(to_degrees(st.theta));
      transmissions.push_back(100.0 * std::cos(st.theta) * std::cos(st.theta));
    }
  }
  double mixing = angles.empty() ? 0.0 : *std::min_element(angles.begin(), angles.end());
  Circuit circuit = full_circuit(form, tol);
  double residual = transform_distance(compile(circuit, tol), t);
  int count = squeezer_count(t, opt.tol, tol);

  if (opt.json()) {
    nlohmann::json j;
    j["r"] = std::vector<double>(form.r.data(), form.r.data() + form.r.size());
    std::vector<double> db;
    for (int i = 0; i < form.r.size(); ++i) db.push_back(to_decibel(form.r(i)));
    j["dB"] = db;
    j["stage_angles_degrees"] = angles;
    j["transmissions_percent"] = transmissions;
    j["mixing_angle_degrees"] = mixing;
    j["squeezer_count"] = count;
    j["circuit_residual"] = residual;
    out << j.dump() << "\n";
    return kOk;
  }
  out << "position meter with unit gain:\n";
  print_matrix(out, "A", t.A);
  print_matrix(out, "B", t.B);
  out << "irreducible squeezing:\n";
  for (int j = 0; j < form.r.size(); ++j)
    out << "  r[" << j << "] = " << num(form.r(j)) << "  ("
        << num(to_decibel(form.r(j))) << " dB)\n";
  out << "squeezers required: " << count << "\n";
  out << "mesh stages (theta in degrees, transmission cos^2):\n";
  for (size_t i = 0; i < angles.size(); ++i)
    out << "  stage " << i << ": " << num(angles[i]) << " deg  ("
        << num(transmissions[i]) << "% transmission)\n";
  out << "mixing angle: " << num(mixing) << " deg\n";
  print_matrix(out, "U (output side)", form.U);
  print_matrix(out, "V (input side, applied as V^dag)", form.V);
  out << "recompiled residual: " << num(residual) << "\n";
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "canonical factorization of linear mode transformations: passive mesh, "
      "single-mode squeezers, passive mesh"};
  app.name("gauss-reduce");
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--builtin", opt.builtins,
                    "built-in input: qnd, d2, e4, fig2, fig3, random")
        ->allow_extra_args(false);
    sub->add_option("files", opt.files, "circuit or transform JSON files");
    sub->add_option("--tol", opt.tol, "structural tolerance (default 1e-10)")
        ->envname("GAUSS_REDUCE_TOL");
    sub->add_option("--degeneracy-tol", opt.degeneracy_tol,
                    "relative tolerance grouping equal squeeze values");
    sub->add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", opt.seed, "seed for the random builtin");
  };

  CLI::App* c_validate =
      app.add_subcommand("validate", "check the canonical constraints of an input");
  CLI::App* c_reduce =
      app.add_subcommand("reduce", "factor an input into meshes and squeezers");
  CLI::App* c_synthesize =
      app.add_subcommand("synthesize", "emit a minimal element circuit for an input");
  CLI::App* c_equiv = app.add_subcommand("equiv", "compare two inputs");
  CLI::App* c_spectrum =
      app.add_subcommand("spectrum", "squeeze values of an input, descending");
  CLI::App* c_nogo = app.add_subcommand(
      "nogo", "conditioned-state structure after a single click");
  CLI::App* c_demo = app.add_subcommand(
      "qnd-demo", "walk through the position-meter factorization");
  for (CLI::App* sub :
       {c_validate, c_reduce, c_synthesize, c_equiv, c_spectrum, c_nogo, c_demo})
    add_common(sub);
  c_equiv->add_option("--mode", opt.mode, "comparison: exact or spectrum")
      ->check(CLI::IsMember({"exact", "spectrum"}));
  c_nogo->add_option("--click", opt.click, "mode that registers one photon");
  c_nogo->add_option("--vacuum", opt.vacuum, "modes that register vacuum")
      ->delimiter(',');
  c_nogo->add_option("--cutoff", opt.cutoff,
                     "total occupation cutoff for the cross-check (default 6)");
  app.require_subcommand(0, 1);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (c_validate->parsed()) return cmd_validate(opt, out);
    if (c_reduce->parsed()) return cmd_reduce(opt, out);
    if (c_synthesize->parsed()) return cmd_synthesize(opt, out);
    if (c_equiv->parsed()) return cmd_equiv(opt, out);
    if (c_spectrum->parsed()) return cmd_spectrum(opt, out);
    if (c_nogo->parsed()) return cmd_nogo(opt, out);
    if (c_demo->parsed()) return cmd_meter_demo(opt, out);
    out << app.help();
    return kBadInput;
  } catch (const NumericalFailureError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const UnsupportedInputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const SingularInputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  }
}

}  // namespace gaussreduce::cli
