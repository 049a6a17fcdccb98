#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "btsie/document.hpp"
#include "btsie/text_utils.hpp"

namespace btsie {

/// Edit distance over code points; re-exported here because the preprocessing
/// threshold semantics are defined in terms of it.
using text::levenshtein;

/// A header/footer position that repeats across pages. position_key indexes
/// the forward-then-reversed concatenation of a page's lines, so footers are
/// found at stable keys even when page lengths vary.
struct DetectedLine {
  std::size_t position_key = 0;
  std::string canonical_text;
};

struct HeaderFooterReport {
  std::vector<DetectedLine> detected;
  /// (page_index, line_index) of every line deleted as a header/footer,
  /// in the coordinates of the document the detection ran on.
  std::vector<std::pair<int, int>> removals;
  /// Pages whose mismatch was forgiven because they carry a figure.
  std::vector<int> skipped_pages;
  /// Set when the document had fewer than 2 pages (no comparison basis).
  bool insufficient_pages = false;
};

/// Repeated-line detection: page 0's lines, concatenated forward then
/// reversed, form the reference; a position survives when every later page
/// matches it at the same key within the Levenshtein threshold. Pages that
/// fail a position but carry a figure are skipped for that position.
HeaderFooterReport detect_headers_footers(const Document& doc,
                                          std::size_t threshold = 5);

/// Document without page 0; remaining pages shift down by one index.
/// Emits a warning into *warnings for the degenerate 1-page case.
Document remove_cover(const Document& doc,
                      std::vector<std::string>* warnings = nullptr);

/// Inclusive page range, in the coordinates of the document it refers to.
struct PageRange {
  int first = 0;
  int last = 0;
};

struct CleanPage {
  int index = 0;
  std::vector<std::string> lines;
  bool has_figure = false;
  /// Index of this page in the original (pre-cleaning) document.
  int source_page_index = 0;
};

struct PreprocessProvenance {
  std::optional<int> removed_cover_page;
  std::vector<int> removed_blank_pages;   // original page indices
  std::vector<int> removed_toc_pages;     // original page indices
  /// Header/footer report with removals mapped to original page indices.
  HeaderFooterReport header_footer;
  std::vector<std::string> warnings;
};

struct CleanDocument {
  std::string doc_id;
  std::vector<CleanPage> pages;
  PreprocessProvenance provenance;
};

/// Full noise removal: cover page, blank pages, the TOC region when given
/// (original page indices, from segment::locate_toc), then repeated
/// header/footer lines detected on what remains. Overlapping page-removal
/// requests are deduplicated.
CleanDocument apply_preprocessing(const Document& doc,
                                  std::optional<PageRange> toc_region = {},
                                  std::size_t threshold = 5);

/// Page-lines view of a cleaned document (indices renumbered contiguously).
Document to_document(const CleanDocument& clean);

nlohmann::json header_footer_report_to_json(const HeaderFooterReport& report);
nlohmann::json provenance_to_json(const PreprocessProvenance& prov);

}  // namespace btsie
