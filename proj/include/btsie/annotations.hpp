#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace btsie {

/// Annotation identifier that may be a JSON integer or string; the original
/// form is preserved so files round-trip field-for-field.
struct AnnId {
  std::string value;
  bool numeric = true;

  static AnnId from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  static AnnId of(std::int64_t v);
  static AnnId of(std::string v);

  bool operator==(const AnnId& other) const {
    return value == other.value && numeric == other.numeric;
  }
  bool operator<(const AnnId& other) const {
    return value < other.value || (value == other.value && numeric < other.numeric);
  }
};

/// A labeled character span. Offsets are Unicode code-point offsets into the
/// owning sample's text; surface is derived, never stored on disk.
struct EntitySpan {
  AnnId id;
  std::string label;
  std::size_t start_offset = 0;
  std::size_t end_offset = 0;
  std::string surface;
};

struct RelationAnnotation {
  AnnId id;
  AnnId from_id;  // concept entity
  AnnId to_id;    // property entity
  std::string type;
};

struct AnnotatedSample {
  AnnId id;
  std::string text;
  std::vector<EntitySpan> entities;
  std::vector<RelationAnnotation> relations;
  /// Optional section title carried alongside the sample (used by the
  /// relation-extraction title feature); empty when absent.
  std::string title;
};

/// Loads a JSON Lines annotation corpus:
///   {"id":…, "text":…, "entities":[{"id","label","start_offset","end_offset"}],
///    "relations":[{"id","from_id","to_id","type"}]}
/// Offsets, label vocabulary and relation endpoints are validated; errors
/// name the offending line.
std::vector<AnnotatedSample> load_jsonl(const std::filesystem::path& path);

AnnotatedSample sample_from_json(const nlohmann::json& j);
nlohmann::json sample_to_json(const AnnotatedSample& sample);

void save_jsonl(const std::vector<AnnotatedSample>& samples,
                const std::filesystem::path& path);

struct CorpusSplit {
  std::vector<AnnotatedSample> train;
  std::vector<AnnotatedSample> validation;
  std::vector<AnnotatedSample> test;
  std::uint64_t seed = 0;
};

/// Seeded shuffle then 70/20/10 slicing (floor arithmetic; test takes the
/// remainder). Optionally stratified by presence of one entity label.
CorpusSplit split_corpus(const std::vector<AnnotatedSample>& samples,
                         std::uint64_t seed,
                         const std::optional<std::string>& stratify_label = {});

struct LabelHistogram {
  std::map<std::string, int> entity_counts;
  std::map<std::string, int> relation_counts;
};

LabelHistogram label_histogram(const std::vector<AnnotatedSample>& samples);

}  // namespace btsie
