#include "conjrep/io.hpp"

#include <fstream>
#include <sstream>

namespace conjrep {

PartialPerm partial_perm_from_json(const json& entry, std::uint32_t degree) {
  if (!entry.is_array() || entry.size() != degree) {
    throw InputError("each generator must be an array of length " +
                     std::to_string(degree));
  }
  std::vector<std::uint32_t> images(degree, kUndefined);
  for (std::uint32_t x = 0; x < degree; ++x) {
    const auto& cell = entry[x];
    if (cell.is_null()) continue;
    if (!cell.is_number_unsigned()) {
      throw InputError("generator entries must be point indices or null");
    }
    images[x] = cell.get<std::uint32_t>();
  }
  return PartialPerm(std::move(images));
}

ordered_json partial_perm_to_json(const PartialPerm& p) {
  ordered_json a = ordered_json::array();
  for (std::uint32_t x = 0; x < p.degree(); ++x) {
    if (p.defined(x)) {
      a.push_back(p.image(x));
    } else {
      a.push_back(nullptr);
    }
  }
  return a;
}

GeneratorInput parse_generator_input(const json& j) {
  if (!j.is_object()) throw InputError("generator input must be a JSON object");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned()) {
    throw InputError("generator input needs an unsigned 'degree'");
  }
  if (!j.contains("generators") || !j["generators"].is_array() ||
      j["generators"].empty()) {
    throw InputError("generator input needs a non-empty 'generators' array");
  }
  GeneratorInput input;
  input.degree = j["degree"].get<std::uint32_t>();
  for (const auto& entry : j["generators"]) {
    input.generators.push_back(partial_perm_from_json(entry, input.degree));
  }
  if (j.contains("inverse_closure")) {
    if (!j["inverse_closure"].is_boolean()) {
      throw InputError("'inverse_closure' must be a boolean");
    }
    input.inverse_closure = j["inverse_closure"].get<bool>();
  }
  if (j.contains("name") && j["name"].is_string()) {
    input.name = j["name"].get<std::string>();
  }
  return input;
}

ordered_json generator_input_to_json(const GeneratorInput& input) {
  ordered_json j;
  if (!input.name.empty()) j["name"] = input.name;
  j["degree"] = input.degree;
  j["generators"] = ordered_json::array();
  for (const auto& g : input.generators) {
    j["generators"].push_back(partial_perm_to_json(g));
  }
  if (!input.inverse_closure) j["inverse_closure"] = false;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("cannot parse " + what + ": " + e.what());
  }
}

GeneratorInput load_generator_file(const std::string& path, std::string* raw_out) {
  const std::string raw = read_file(path);
  if (raw_out) *raw_out = raw;
  return parse_generator_input(parse_json_text(raw, "generator file " + path));
}

}  // namespace conjrep
