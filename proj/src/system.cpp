#include "cox/system.hpp"

#include <set>

#include <json.hpp>

namespace cox {

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, std::vector<std::string> labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != matrix_.rank())
    throw ParseError("expected " + std::to_string(matrix_.rank()) + " generator labels, got " +
                     std::to_string(labels_.size()));
  std::set<std::string> distinct(labels_.begin(), labels_.end());
  if (static_cast<int>(distinct.size()) != matrix_.rank())
    throw ParseError("generator labels must be distinct");
  classification_ = classify(matrix_);
  generator_classes_ = generator_conjugacy_classes(matrix_);
  class_of_.assign(matrix_.rank(), -1);
  for (int c = 0; c < static_cast<int>(generator_classes_.size()); ++c)
    for (int s : generator_classes_[c].members()) class_of_[s] = c;
}

CoxeterSystem CoxeterSystem::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("system file must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "generators" && key != "matrix")
      throw ParseError("unknown field \"" + key + "\"");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ParseError("missing or invalid \"generators\" array");
  if (!j.contains("matrix") || !j["matrix"].is_array())
    throw ParseError("missing or invalid \"matrix\" array");

  std::vector<std::string> labels;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw ParseError("generator labels must be strings");
    labels.push_back(g.get<std::string>());
  }
  std::vector<std::vector<int>> entries;
  for (const auto& row : j["matrix"]) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<int> r;
    for (const auto& e : row) {
      if (!e.is_number_unsigned()) throw ParseError("matrix entries must be non-negative integers");
      r.push_back(e.get<int>());
    }
    entries.push_back(std::move(r));
  }
  return CoxeterSystem(CoxeterMatrix::from_entries(entries), std::move(labels));
}

int CoxeterSystem::generator_index(const std::string& label) const {
  for (int s = 0; s < rank(); ++s)
    if (labels_[s] == label) return s;
  throw ParseError("unknown generator label \"" + label + "\"");
}

}  // namespace cox
