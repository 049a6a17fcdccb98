#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "btsie/document.hpp"
#include "btsie/preprocess.hpp"

namespace btsie {

/// A recognized section heading. level equals the number of numbering
/// components in number_token ("1.1" and "II.3" are both level 2).
struct Headline {
  std::string raw_text;
  std::string number_token;
  std::string title;
  int level = 1;
  int page_index = 0;
  int line_index = 0;
};

/// Parses a line as a headline: Arabic dotted numbering (1, 1.1, 1.1.1),
/// Roman numerals (I, II, IV), mixed forms (I.1), optionally prefixed by a
/// heading label (Chapitre / Article / Section / Paragraphe). Headlines are
/// line-anchored: at most 3 leading spaces. Returns nothing for ordinary
/// text; page/line indices are left for the caller to fill.
std::optional<Headline> classify_headline(std::string_view line);

struct SectionParagraph {
  std::string text;
  int page_index = 0;
  int line_index = 0;
};

struct SectionNode {
  std::optional<Headline> headline;  // root has none
  std::vector<SectionParagraph> paragraphs;
  std::vector<std::unique_ptr<SectionNode>> children;

  bool is_leaf() const { return children.empty(); }
};

struct HierarchyResult {
  std::unique_ptr<SectionNode> root;
  std::vector<std::string> warnings;
};

/// Two-phase section extraction: scan lines, open a node per headline and
/// attach it to the most recent node one level up; ordinary lines accumulate
/// on the current node. Total over any input: level jumps and numbering
/// regressions produce warnings, never failures.
HierarchyResult build_hierarchy(const Document& doc);
HierarchyResult build_hierarchy(const CleanDocument& clean);

/// Provenance of one paragraph inside a RawRequirement's text, in
/// code-point offsets.
struct CharMapEntry {
  std::size_t start = 0;
  std::size_t end = 0;
  int page_index = 0;
  int line_index = 0;
};

/// A merged text block: every ancestor paragraph (root→leaf order) followed
/// by the leaf's own paragraphs, newline-separated. The unit of annotation
/// and extraction.
struct RawRequirement {
  std::string req_id;
  std::string title;
  std::vector<std::string> hierarchy_path;
  std::string text;
  std::vector<CharMapEntry> char_map;
};

std::vector<RawRequirement> extract_raw_requirements(const SectionNode& root);

struct TocEntry {
  std::string number_token;
  std::string title;
};

/// Depth-first listing of all headlines, numbering preserved verbatim.
std::vector<TocEntry> regenerate_toc(const SectionNode& root);

struct TocOptions {
  int scan_pages = 5;
  double min_match_ratio = 0.6;
  std::size_t levenshtein_threshold = 5;
  int min_matched_lines = 2;
};

/// Scans the first scan_pages pages for a contiguous region whose lines
/// mostly match regenerated TOC entries (dot leaders and trailing page
/// numbers stripped before comparison). Returns the page range or nothing.
std::optional<PageRange> locate_toc(const Document& doc,
                                    const std::vector<TocEntry>& entries,
                                    const TocOptions& options = {});

nlohmann::json raw_requirement_to_json(const RawRequirement& req);

}  // namespace btsie
