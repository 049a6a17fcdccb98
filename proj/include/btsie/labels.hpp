#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace btsie {

/// The 7 concept labels (building elements).
const std::vector<std::string>& concept_labels();

/// The 9 property labels (element characteristics).
const std::vector<std::string>& property_labels();

/// All 16 entity labels, concepts first.
const std::vector<std::string>& entity_labels();

/// The 9 relation types; "0" (no relation) is not part of this list.
const std::vector<std::string>& relation_types();

bool is_concept_label(std::string_view label);
bool is_property_label(std::string_view label);
bool is_entity_label(std::string_view label);
bool is_relation_type(std::string_view type);

/// Property label a relation type must attach to (hasDimension → Dimension).
std::optional<std::string> expected_property_for_relation(std::string_view type);

}  // namespace btsie
