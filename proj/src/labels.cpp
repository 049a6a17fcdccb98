#include "btsie/labels.hpp"

#include <algorithm>

namespace btsie {

const std::vector<std::string>& concept_labels() {
  static const std::vector<std::string> labels{
      "Door_Assembly", "Bay",  "Window",      "Joinery",
      "Window_Sash",   "Door", "French_Door",
  };
  return labels;
}

const std::vector<std::string>& property_labels() {
  static const std::vector<std::string> labels{
      "Number_of_Leaf",     "Acoustic_Attenuation", "Dimension",
      "Fire_Resistance",    "Flame_Arrester",       "Thermic_Coefficient",
      "Air_Permeability",   "Watertight",           "Wind_Resistance",
  };
  return labels;
}

const std::vector<std::string>& entity_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> all = concept_labels();
    const auto& props = property_labels();
    all.insert(all.end(), props.begin(), props.end());
    return all;
  }();
  return labels;
}

const std::vector<std::string>& relation_types() {
  static const std::vector<std::string> types{
      "hasDimension",       "hasThermicCoefficient", "hasAcousticAttenuation",
      "hasFlameArrester",   "hasFireResistance",     "hasAirPermeability",
      "hasWatertight",      "hasWindResistance",     "hasNumberOfLeaf",
  };
  return types;
}

namespace {
bool contains(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}
}  // namespace

bool is_concept_label(std::string_view label) {
  return contains(concept_labels(), label);
}

bool is_property_label(std::string_view label) {
  return contains(property_labels(), label);
}

bool is_entity_label(std::string_view label) {
  return is_concept_label(label) || is_property_label(label);
}

bool is_relation_type(std::string_view type) {
  return contains(relation_types(), type);
}

std::optional<std::string> expected_property_for_relation(std::string_view type) {
  if (type == "hasDimension") return "Dimension";
  if (type == "hasThermicCoefficient") return "Thermic_Coefficient";
  if (type == "hasAcousticAttenuation") return "Acoustic_Attenuation";
  if (type == "hasFlameArrester") return "Flame_Arrester";
  if (type == "hasFireResistance") return "Fire_Resistance";
  if (type == "hasAirPermeability") return "Air_Permeability";
  if (type == "hasWatertight") return "Watertight";
  if (type == "hasWindResistance") return "Wind_Resistance";
  if (type == "hasNumberOfLeaf") return "Number_of_Leaf";
  return std::nullopt;
}

}  // namespace btsie
