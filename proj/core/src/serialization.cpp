#include "gaussreduce/serialization.hpp"

#include <nlohmann/json.hpp>

namespace gaussreduce {

namespace {

using nlohmann::json;

json pack_complex(const Complex& z) { return json::array({z.real(), z.imag()}); }

json pack_matrix(const ComplexMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(pack_complex(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json pack_vector(const ComplexVector& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(pack_complex(v(i)));
  return out;
}

Complex unpack_complex(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidInputError(std::string(where) + ": complex entries must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix unpack_matrix(const json& j, const char* where) {
  if (!j.is_array() || j.empty())
    throw InvalidInputError(std::string(where) + ": expected a non-empty matrix");
  int rows = static_cast<int>(j.size());
  int cols = -1;
  ComplexMatrix m;
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array())
      throw InvalidInputError(std::string(where) + ": matrix rows must be arrays");
    if (cols < 0) {
      cols = static_cast<int>(j[i].size());
      if (cols == 0)
        throw InvalidInputError(std::string(where) + ": matrix rows must be non-empty");
      m = ComplexMatrix(rows, cols);
    }
    if (static_cast<int>(j[i].size()) != cols)
      throw InvalidInputError(std::string(where) + ": matrix rows differ in length");
    for (int c = 0; c < cols; ++c) m(i, c) = unpack_complex(j[i][c], where);
  }
  return m;
}

ComplexVector unpack_vector(const json& j, const char* where) {
  if (!j.is_array())
    throw InvalidInputError(std::string(where) + ": expected an array");
  ComplexVector v(static_cast<int>(j.size()));
  for (int i = 0; i < v.size(); ++i) v(i) = unpack_complex(j[i], where);
  return v;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInputError("input is not well-formed JSON");
  return j;
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw InvalidInputError(std::string("missing field \"") + name + "\"");
  return *it;
}

const char* kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::Squeezer: return "squeezer";
    case ElementKind::TwoModeSqueezer: return "two_mode_squeezer";
    case ElementKind::BeamSplitter: return "beam_splitter";
    case ElementKind::PhaseShifter: return "phase_shifter";
    case ElementKind::Multiport: return "multiport";
    case ElementKind::Permutation: return "permutation";
    case ElementKind::Displacement: return "displacement";
  }
  throw InvalidInputError("unknown element kind");
}

ElementKind kind_from_name(const std::string& name) {
  if (name == "squeezer") return ElementKind::Squeezer;
  if (name == "two_mode_squeezer") return ElementKind::TwoModeSqueezer;
  if (name == "beam_splitter") return ElementKind::BeamSplitter;
  if (name == "phase_shifter") return ElementKind::PhaseShifter;
  if (name == "multiport") return ElementKind::Multiport;
  if (name == "permutation") return ElementKind::Permutation;
  if (name == "displacement") return ElementKind::Displacement;
  throw InvalidInputError("unknown element kind \"" + name + "\"");
}

}  // namespace

std::string to_json(const GaussianTransform& t) {
  json j;
  j["n_modes"] = t.n_modes();
  j["A"] = pack_matrix(t.A);
  j["B"] = pack_matrix(t.B);
  j["beta"] = pack_vector(t.beta);
  return j.dump();
}

GaussianTransform transform_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw InvalidInputError("transform JSON must be an object");
  int n = field(j, "n_modes").get<int>();
  if (n <= 0) throw InvalidInputError("n_modes must be positive");
  GaussianTransform t;
  t.A = unpack_matrix(field(j, "A"), "A");
  t.B = unpack_matrix(field(j, "B"), "B");
  t.beta = unpack_vector(field(j, "beta"), "beta");
  if (t.A.rows() != n || t.A.cols() != n || t.B.rows() != n || t.B.cols() != n ||
      t.beta.size() != n)
    throw InvalidInputError("transform blocks must be n_modes square");
  return t;
}

std::string to_json(const Circuit& c) {
  json j;
  j["n_modes"] = c.n_modes;
  json elements = json::array();
  for (const CircuitElement& e : c.elements) {
    json el;
    el["kind"] = kind_name(e.kind);
    el["modes"] = e.modes;
    json params = json::object();
    switch (e.kind) {
      case ElementKind::Squeezer:
        params["r"] = e.r;
        params["phi"] = e.phi;
        break;
      case ElementKind::TwoModeSqueezer:
        params["r"] = e.r;
        break;
      case ElementKind::BeamSplitter:
        params["theta"] = e.theta;
        params["phi"] = e.phi;
        break;
      case ElementKind::PhaseShifter:
        params["theta"] = e.theta;
        break;
      case ElementKind::Multiport:
        params["unitary"] = pack_matrix(e.unitary);
        break;
      case ElementKind::Permutation:
        break;
      case ElementKind::Displacement:
        params["beta"] = pack_vector(e.beta);
        break;
    }
    el["params"] = std::move(params);
    elements.push_back(std::move(el));
  }
  j["elements"] = std::move(elements);
  return j.dump();
}

Circuit circuit_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw InvalidInputError("circuit JSON must be an object");
  Circuit c;
  c.n_modes = field(j, "n_modes").get<int>();
  if (c.n_modes <= 0) throw InvalidInputError("n_modes must be positive");
  const json& elements = field(j, "elements");
  if (!elements.is_array()) throw InvalidInputError("\"elements\" must be an array");
  for (const json& el : elements) {
    CircuitElement e;
    e.kind = kind_from_name(field(el, "kind").get<std::string>());
    if (el.contains("modes")) {
      for (const json& m : el["modes"]) e.modes.push_back(m.get<int>());
    }
    json params = el.contains("params") ? el["params"] : json::object();
    if (params.contains("r")) e.r = params["r"].get<double>();
    if (params.contains("theta")) e.theta = params["theta"].get<double>();
    if (params.contains("phi")) e.phi = params["phi"].get<double>();
    if (params.contains("unitary"))
      e.unitary = unpack_matrix(params["unitary"], "unitary");
    if (params.contains("beta")) e.beta = unpack_vector(params["beta"], "beta");
    c.elements.push_back(std::move(e));
  }
  return c;
}

std::string to_json(const BlochMessiahForm& f) {
  json j;
  j["U"] = pack_matrix(f.U);
  j["V"] = pack_matrix(f.V);
  json r = json::array();
  for (int i = 0; i < f.r.size(); ++i) r.push_back(f.r(i));
  j["r"] = std::move(r);
  j["beta"] = pack_vector(f.beta);
  return j.dump();
}

BlochMessiahForm form_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw InvalidInputError("factorization JSON must be an object");
  BlochMessiahForm f;
  f.U = unpack_matrix(field(j, "U"), "U");
  f.V = unpack_matrix(field(j, "V"), "V");
  const json& r = field(j, "r");
  if (!r.is_array()) throw InvalidInputError("\"r\" must be an array");
  f.r = RealVector(static_cast<int>(r.size()));
  for (int i = 0; i < f.r.size(); ++i) f.r(i) = r[i].get<double>();
  f.beta = unpack_vector(field(j, "beta"), "beta");
  int n = static_cast<int>(f.r.size());
  if (f.U.rows() != n || f.U.cols() != n || f.V.rows() != n || f.V.cols() != n ||
      f.beta.size() != n)
    throw InvalidInputError("factorization blocks must share the mode count");
  return f;
}

std::string to_json(const PassiveNetwork& n) {
  json j;
  j["n_modes"] = n.n_modes;
  json stages = json::array();
  for (const NetworkStage& st : n.stages) {
    json s;
    s["i"] = st.mode_i;
    s["j"] = st.mode_j;
    s["theta"] = st.theta;
    s["phi"] = st.phi;
    stages.push_back(std::move(s));
  }
  j["stages"] = std::move(stages);
  json phases = json::array();
  for (int i = 0; i < n.output_phases.size(); ++i) phases.push_back(n.output_phases(i));
  j["output_phases"] = std::move(phases);
  return j.dump();
}

PassiveNetwork network_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw InvalidInputError("network JSON must be an object");
  PassiveNetwork n;
  n.n_modes = field(j, "n_modes").get<int>();
  if (n.n_modes <= 0) throw InvalidInputError("n_modes must be positive");
  const json& stages = field(j, "stages");
  if (!stages.is_array()) throw InvalidInputError("\"stages\" must be an array");
  for (const json& s : stages) {
    NetworkStage st;
    st.mode_i = field(s, "i").get<int>();
    st.mode_j = field(s, "j").get<int>();
    st.theta = field(s, "theta").get<double>();
    st.phi = field(s, "phi").get<double>();
    n.stages.push_back(st);
  }
  const json& phases = field(j, "output_phases");
  if (!phases.is_array()) throw InvalidInputError("\"output_phases\" must be an array");
  n.output_phases = RealVector(static_cast<int>(phases.size()));
  for (int i = 0; i < n.output_phases.size(); ++i)
    n.output_phases(i) = phases[i].get<double>();
  return n;
}

InputKind detect_input_kind(const std::string& text) {
  json j = parse(text);
  if (j.is_object() && j.contains("elements")) return InputKind::Circuit;
  if (j.is_object() && j.contains("A") && j.contains("B")) return InputKind::Transform;
  throw InvalidInputError(
      "input JSON is neither a circuit (\"elements\") nor a transform (\"A\"/\"B\")");
}

}  // namespace gaussreduce
