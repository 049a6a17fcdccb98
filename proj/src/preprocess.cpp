#include "btsie/preprocess.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "btsie/errors.hpp"

namespace btsie {

using nlohmann::json;

namespace {

// Lines of a page in forward order followed by reverse order, the index
// space position_key lives in.
std::vector<std::string> forward_reversed(const Page& page) {
  std::vector<std::string> out(page.lines.begin(), page.lines.end());
  out.insert(out.end(), page.lines.rbegin(), page.lines.rend());
  return out;
}

// Maps a position key back to the line index of a page with line_count
// lines, or -1 when the page is too short for that key.
int key_to_line_index(std::size_t key, std::size_t line_count) {
  if (key < line_count) return static_cast<int>(key);
  if (key < 2 * line_count) return static_cast<int>(2 * line_count - 1 - key);
  return -1;
}

}  // namespace

HeaderFooterReport detect_headers_footers(const Document& doc,
                                          std::size_t threshold) {
  HeaderFooterReport report;
  if (doc.pages.size() < 2) {
    report.insufficient_pages = true;
    return report;
  }

  const auto reference = forward_reversed(doc.pages.front());
  std::vector<std::vector<std::string>> page_lists;
  page_lists.reserve(doc.pages.size());
  for (const auto& page : doc.pages) page_lists.push_back(forward_reversed(page));

  std::set<int> skipped;
  for (std::size_t key = 0; key < reference.size(); ++key) {
    const std::string canonical = text::strip_copy(reference[key]);
    if (canonical.empty()) continue;

    bool repeated = true;
    for (std::size_t k = 1; k < doc.pages.size(); ++k) {
      const auto& lines = page_lists[k];
      const bool matches =
          key < lines.size() && levenshtein(reference[key], lines[key]) <= threshold;
      if (matches) continue;
      if (doc.pages[k].has_figure) {
        skipped.insert(doc.pages[k].index);
        continue;
      }
      repeated = false;
      break;
    }
    if (repeated) report.detected.push_back({key, canonical});
  }

  // Every page sheds the matching line at each surviving key. Lines that do
  // not match within the threshold (figure pages missing the header) stay.
  std::set<std::pair<int, int>> removals;
  for (const auto& page : doc.pages) {
    for (const auto& det : report.detected) {
      const int li = key_to_line_index(det.position_key, page.lines.size());
      if (li < 0) continue;
      if (levenshtein(text::strip_copy(page.lines[li]), det.canonical_text) <=
          threshold) {
        removals.insert({page.index, li});
      }
    }
  }
  report.removals.assign(removals.begin(), removals.end());
  report.skipped_pages.assign(skipped.begin(), skipped.end());
  return report;
}

Document remove_cover(const Document& doc, std::vector<std::string>* warnings) {
  Document out;
  out.doc_id = doc.doc_id;
  out.source_path = doc.source_path;
  if (doc.pages.empty()) return out;
  if (doc.pages.size() == 1 && warnings) {
    warnings->push_back("cover removal leaves a 1-page document empty");
  }
  for (std::size_t i = 1; i < doc.pages.size(); ++i) {
    Page page = doc.pages[i];
    page.index = static_cast<int>(i - 1);
    out.pages.push_back(std::move(page));
  }
  return out;
}

CleanDocument apply_preprocessing(const Document& doc,
                                  std::optional<PageRange> toc_region,
                                  std::size_t threshold) {
  CleanDocument clean;
  clean.doc_id = doc.doc_id;
  auto& prov = clean.provenance;
  if (doc.pages.empty()) {
    prov.warnings.push_back("document has no pages");
    return clean;
  }

  std::set<int> removed;
  removed.insert(0);
  prov.removed_cover_page = 0;
  if (doc.pages.size() == 1) {
    prov.warnings.push_back("cover removal leaves a 1-page document empty");
  }

  for (int idx : blank_page_indices(doc)) {
    if (removed.insert(idx).second) prov.removed_blank_pages.push_back(idx);
  }
  if (toc_region) {
    const int last = std::min<int>(toc_region->last,
                                   static_cast<int>(doc.pages.size()) - 1);
    for (int idx = std::max(0, toc_region->first); idx <= last; ++idx) {
      if (removed.insert(idx).second) prov.removed_toc_pages.push_back(idx);
    }
  }

  // Detection runs on the surviving pages so the reference page is a
  // content page rather than the cover.
  Document survivors;
  survivors.doc_id = doc.doc_id;
  std::vector<int> source_index;
  for (const auto& page : doc.pages) {
    if (removed.count(page.index)) continue;
    Page copy = page;
    copy.index = static_cast<int>(survivors.pages.size());
    survivors.pages.push_back(std::move(copy));
    source_index.push_back(page.index);
  }

  HeaderFooterReport report = detect_headers_footers(survivors, threshold);
  if (report.insufficient_pages) {
    prov.warnings.push_back(
        "fewer than 2 content pages; header/footer detection skipped");
  }

  std::vector<std::set<int>> drop_lines(survivors.pages.size());
  for (auto& [page_idx, line_idx] : report.removals) {
    drop_lines[page_idx].insert(line_idx);
    page_idx = source_index[page_idx];  // report in original coordinates
  }
  for (int& page_idx : report.skipped_pages) page_idx = source_index[page_idx];
  prov.header_footer = std::move(report);

  for (std::size_t i = 0; i < survivors.pages.size(); ++i) {
    CleanPage page;
    page.index = static_cast<int>(i);
    page.has_figure = survivors.pages[i].has_figure;
    page.source_page_index = source_index[i];
    for (std::size_t li = 0; li < survivors.pages[i].lines.size(); ++li) {
      if (!drop_lines[i].count(static_cast<int>(li))) {
        page.lines.push_back(survivors.pages[i].lines[li]);
      }
    }
    clean.pages.push_back(std::move(page));
  }
  return clean;
}

Document to_document(const CleanDocument& clean) {
  Document doc;
  doc.doc_id = clean.doc_id;
  for (const auto& page : clean.pages) {
    doc.pages.push_back({page.index, page.lines, page.has_figure});
  }
  return doc;
}

json header_footer_report_to_json(const HeaderFooterReport& report) {
  json detected = json::array();
  for (const auto& d : report.detected) {
    detected.push_back({{"position_key", d.position_key},
                        {"text", d.canonical_text}});
  }
  json removals = json::array();
  for (const auto& [p, l] : report.removals) removals.push_back({p, l});
  return json{{"detected", detected},
              {"removals", removals},
              {"skipped_pages", report.skipped_pages},
              {"insufficient_pages", report.insufficient_pages}};
}

json provenance_to_json(const PreprocessProvenance& prov) {
  json j{{"removed_blank_pages", prov.removed_blank_pages},
         {"removed_toc_pages", prov.removed_toc_pages},
         {"header_footer", header_footer_report_to_json(prov.header_footer)},
         {"warnings", prov.warnings}};
  if (prov.removed_cover_page) {
    j["removed_cover_page"] = *prov.removed_cover_page;
  }
  return j;
}

}  // namespace btsie
