#include "btsie/annotations.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "btsie/errors.hpp"
#include "btsie/labels.hpp"
#include "btsie/text_utils.hpp"

namespace btsie {

using nlohmann::json;

AnnId AnnId::from_json(const json& j) {
  AnnId id;
  if (j.is_number_integer()) {
    id.value = std::to_string(j.get<std::int64_t>());
    id.numeric = true;
  } else if (j.is_string()) {
    id.value = j.get<std::string>();
    id.numeric = false;
  } else {
    throw ValidationError("id must be an integer or a string");
  }
  return id;
}

json AnnId::to_json() const {
  if (numeric) return json(std::stoll(value));
  return json(value);
}

AnnId AnnId::of(std::int64_t v) { return {std::to_string(v), true}; }
AnnId AnnId::of(std::string v) { return {std::move(v), false}; }

AnnotatedSample sample_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("sample must be a JSON object");
  AnnotatedSample sample;
  if (!j.contains("id")) throw ValidationError("sample missing \"id\"");
  sample.id = AnnId::from_json(j["id"]);
  if (!j.contains("text") || !j["text"].is_string()) {
    throw ValidationError("sample missing \"text\"");
  }
  sample.text = j["text"].get<std::string>();
  sample.title = j.value("title", std::string{});

  const std::size_t text_len = text::cp_length(sample.text);
  std::set<AnnId> entity_ids;
  for (const auto& ej : j.value("entities", json::array())) {
    EntitySpan span;
    span.id = AnnId::from_json(ej.at("id"));
    span.label = ej.at("label").get<std::string>();
    if (!is_entity_label(span.label)) {
      throw ValidationError("entity " + span.id.value + ": unknown label \"" +
                            span.label + "\"");
    }
    const auto start = ej.at("start_offset").get<std::int64_t>();
    const auto end = ej.at("end_offset").get<std::int64_t>();
    if (start < 0 || end <= start || static_cast<std::size_t>(end) > text_len) {
      throw ValidationError("entity " + span.id.value + ": offsets [" +
                            std::to_string(start) + ", " + std::to_string(end) +
                            ") out of range for text of length " +
                            std::to_string(text_len));
    }
    span.start_offset = static_cast<std::size_t>(start);
    span.end_offset = static_cast<std::size_t>(end);
    span.surface = text::cp_substr(sample.text, span.start_offset, span.end_offset);
    if (!entity_ids.insert(span.id).second) {
      throw ValidationError("duplicate entity id " + span.id.value);
    }
    sample.entities.push_back(std::move(span));
  }

  auto find_entity = [&](const AnnId& id) -> const EntitySpan* {
    for (const auto& e : sample.entities) {
      if (e.id == id) return &e;
    }
    return nullptr;
  };
  for (const auto& rj : j.value("relations", json::array())) {
    RelationAnnotation rel;
    rel.id = AnnId::from_json(rj.at("id"));
    rel.from_id = AnnId::from_json(rj.at("from_id"));
    rel.to_id = AnnId::from_json(rj.at("to_id"));
    rel.type = rj.at("type").get<std::string>();
    if (!is_relation_type(rel.type)) {
      throw ValidationError("relation " + rel.id.value + ": unknown type \"" +
                            rel.type + "\"");
    }
    const EntitySpan* from = find_entity(rel.from_id);
    const EntitySpan* to = find_entity(rel.to_id);
    if (!from || !to) {
      throw ValidationError("relation " + rel.id.value +
                            ": dangling endpoint (from=" + rel.from_id.value +
                            ", to=" + rel.to_id.value + ")");
    }
    if (!is_concept_label(from->label)) {
      throw ValidationError("relation " + rel.id.value + ": from_id labels \"" +
                            from->label + "\", expected a concept label");
    }
    if (!is_property_label(to->label)) {
      throw ValidationError("relation " + rel.id.value + ": to_id labels \"" +
                            to->label + "\", expected a property label");
    }
    sample.relations.push_back(std::move(rel));
  }
  return sample;
}

json sample_to_json(const AnnotatedSample& sample) {
  json entities = json::array();
  for (const auto& e : sample.entities) {
    entities.push_back({{"id", e.id.to_json()},
                        {"label", e.label},
                        {"start_offset", e.start_offset},
                        {"end_offset", e.end_offset}});
  }
  json relations = json::array();
  for (const auto& r : sample.relations) {
    relations.push_back({{"id", r.id.to_json()},
                         {"from_id", r.from_id.to_json()},
                         {"to_id", r.to_id.to_json()},
                         {"type", r.type}});
  }
  json j{{"id", sample.id.to_json()},
         {"text", sample.text},
         {"entities", entities},
         {"relations", relations}};
  if (!sample.title.empty()) j["title"] = sample.title;
  return j;
}

std::vector<AnnotatedSample> load_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open corpus file: " + path.string());
  std::vector<AnnotatedSample> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::is_blank(line)) continue;
    try {
      samples.push_back(sample_from_json(json::parse(line)));
    } catch (const json::parse_error& e) {
      throw ValidationError(path.string() + " line " + std::to_string(line_no) +
                            ": invalid JSON: " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(path.string() + " line " + std::to_string(line_no) +
                            ": " + e.what());
    }
  }
  return samples;
}

void save_jsonl(const std::vector<AnnotatedSample>& samples,
                const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write corpus file: " + path.string());
  for (const auto& sample : samples) {
    out << sample_to_json(sample).dump() << '\n';
  }
}

namespace {

// Explicit Fisher-Yates over mt19937_64 so splits are reproducible across
// platforms (std::shuffle's draw sequence is implementation-defined).
void seeded_shuffle(std::vector<std::size_t>& indices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = indices.size(); i > 1; --i) {
    const std::size_t j = rng() % i;
    std::swap(indices[i - 1], indices[j]);
  }
}

void split_indices(std::size_t n, std::uint64_t seed,
                   std::vector<std::size_t>& train,
                   std::vector<std::size_t>& validation,
                   std::vector<std::size_t>& test) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  seeded_shuffle(order, seed);
  const std::size_t n_train = 7 * n / 10;
  const std::size_t n_val = 2 * n / 10;
  train.assign(order.begin(), order.begin() + n_train);
  validation.assign(order.begin() + n_train, order.begin() + n_train + n_val);
  test.assign(order.begin() + n_train + n_val, order.end());
}

}  // namespace

CorpusSplit split_corpus(const std::vector<AnnotatedSample>& samples,
                         std::uint64_t seed,
                         const std::optional<std::string>& stratify_label) {
  if (samples.size() < 10) {
    throw ValidationError("need at least 10 samples to split, got " +
                          std::to_string(samples.size()));
  }
  CorpusSplit split;
  split.seed = seed;

  std::vector<std::vector<const AnnotatedSample*>> groups;
  if (stratify_label) {
    groups.resize(2);
    for (const auto& s : samples) {
      const bool has = std::any_of(
          s.entities.begin(), s.entities.end(),
          [&](const EntitySpan& e) { return e.label == *stratify_label; });
      groups[has ? 0 : 1].push_back(&s);
    }
  } else {
    groups.resize(1);
    for (const auto& s : samples) groups[0].push_back(&s);
  }

  for (const auto& group : groups) {
    if (group.empty()) continue;
    std::vector<std::size_t> train, validation, test;
    split_indices(group.size(), seed, train, validation, test);
    for (auto i : train) split.train.push_back(*group[i]);
    for (auto i : validation) split.validation.push_back(*group[i]);
    for (auto i : test) split.test.push_back(*group[i]);
  }
  return split;
}

LabelHistogram label_histogram(const std::vector<AnnotatedSample>& samples) {
  LabelHistogram hist;
  for (const auto& sample : samples) {
    for (const auto& e : sample.entities) ++hist.entity_counts[e.label];
    for (const auto& r : sample.relations) ++hist.relation_counts[r.type];
  }
  return hist;
}

}  // namespace btsie
