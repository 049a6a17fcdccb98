#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace btsie {

/// One page of pre-extracted text. has_figure is an ingestion-time fact
/// supplied by the producer, never inferred here.
struct Page {
  int index = 0;
  std::vector<std::string> lines;
  bool has_figure = false;
};

/// An ordered, immutable-after-load sequence of pages. Lines are stored
/// exactly as extracted; no trimming or re-encoding happens at ingestion.
struct Document {
  std::string doc_id;
  std::vector<Page> pages;
  std::string source_path;
};

/// Reads the page-lines JSON format:
///   { "doc_id": str, "pages": [ { "index": int, "lines": [str...],
///     "has_figure": bool } ... ] }
/// Page indices must be 0-based and contiguous.
Document load_document(const std::filesystem::path& path);

Document document_from_json(const nlohmann::json& j, std::string source_path = {});

nlohmann::json document_to_json(const Document& doc);

void save_document(const Document& doc, const std::filesystem::path& path);

/// Indices of pages whose lines are all empty after whitespace stripping.
std::vector<int> blank_page_indices(const Document& doc);

}  // namespace btsie
