#pragma once

#include <string>

#include "gaussreduce/elements.hpp"
#include "gaussreduce/reduction.hpp"
#include "gaussreduce/synthesis.hpp"

namespace gaussreduce {

// JSON with complex numbers encoded as [re, im] pairs; parsers check shapes
// only, so a structurally broken transform can still be loaded and examined
std::string to_json(const GaussianTransform& t);
GaussianTransform transform_from_json(const std::string& text);

std::string to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

std::string to_json(const BlochMessiahForm& f);
BlochMessiahForm form_from_json(const std::string& text);

std::string to_json(const PassiveNetwork& n);
PassiveNetwork network_from_json(const std::string& text);

// file inputs may hold either a circuit or a raw transform; circuits carry
// "elements", transforms carry "A" and "B"
enum class InputKind { Transform, Circuit };
InputKind detect_input_kind(const std::string& text);

}  // namespace gaussreduce
