#include "btsie/document.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "btsie/errors.hpp"
#include "btsie/text_utils.hpp"

namespace btsie {

using nlohmann::json;

Document document_from_json(const json& j, std::string source_path) {
  if (!j.is_object() || !j.contains("pages") || !j["pages"].is_array()) {
    throw ValidationError("page-lines document: missing \"pages\" array");
  }
  Document doc;
  doc.doc_id = j.value("doc_id", std::string{});
  doc.source_path = std::move(source_path);
  if (j["pages"].empty()) {
    throw ValidationError("document has no pages");
  }
  int expected = 0;
  for (const auto& pj : j["pages"]) {
    Page page;
    if (!pj.is_object() || !pj.contains("index") || !pj.contains("lines")) {
      throw ValidationError("page " + std::to_string(expected) +
                            ": each page needs \"index\" and \"lines\"");
    }
    page.index = pj["index"].get<int>();
    if (page.index != expected) {
      throw ValidationError("page " + std::to_string(page.index) +
                            ": indices must be 0-based and contiguous (expected " +
                            std::to_string(expected) + ")");
    }
    if (!pj["lines"].is_array()) {
      throw ValidationError("page " + std::to_string(page.index) +
                            ": \"lines\" must be an array of strings");
    }
    for (const auto& line : pj["lines"]) {
      if (!line.is_string()) {
        throw ValidationError("page " + std::to_string(page.index) +
                              ": non-string line");
      }
      page.lines.push_back(line.get<std::string>());
    }
    page.has_figure = pj.value("has_figure", false);
    doc.pages.push_back(std::move(page));
    ++expected;
  }
  return doc;
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open document file: " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return document_from_json(j, path.string());
}

json document_to_json(const Document& doc) {
  json pages = json::array();
  for (const auto& page : doc.pages) {
    pages.push_back({{"index", page.index},
                     {"lines", page.lines},
                     {"has_figure", page.has_figure}});
  }
  return json{{"doc_id", doc.doc_id}, {"pages", pages}};
}

void save_document(const Document& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write document file: " + path.string());
  }
  out << document_to_json(doc).dump(2) << '\n';
}

std::vector<int> blank_page_indices(const Document& doc) {
  std::vector<int> blanks;
  for (const auto& page : doc.pages) {
    bool blank = true;
    for (const auto& line : page.lines) {
      if (!text::is_blank(line)) {
        blank = false;
        break;
      }
    }
    if (blank) blanks.push_back(page.index);
  }
  return blanks;
}

}  // namespace btsie
