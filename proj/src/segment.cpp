#include "btsie/segment.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "btsie/text_utils.hpp"

namespace btsie {

using nlohmann::json;

namespace {

bool is_valid_roman(std::string_view s) {
  // Strict uppercase Roman numeral, so ordinary words never pass.
  static const char* kUnits[] = {"", "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
  static const char* kTens[] = {"", "X", "XX", "XXX", "XL", "L", "LX", "LXX", "LXXX", "XC"};
  static const char* kHundreds[] = {"", "C", "CC", "CCC", "CD", "D", "DC", "DCC", "DCCC", "CM"};
  if (s.empty() || s.size() > 12) return false;
  std::size_t pos = 0;
  int m = 0;
  while (pos < s.size() && s[pos] == 'M' && m < 4) {
    ++pos;
    ++m;
  }
  for (const auto& table : {kHundreds, kTens, kUnits}) {
    for (int d = 9; d >= 1; --d) {
      const std::string_view part = table[d];
      if (!part.empty() && s.substr(pos, part.size()) == part) {
        pos += part.size();
        break;
      }
    }
  }
  return pos == s.size();
}

bool is_number_component(std::string_view s) {
  if (s.empty()) return false;
  if (std::all_of(s.begin(), s.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    return s.size() <= 4;
  }
  return is_valid_roman(s);
}

// Heading labels that may precede the number, lowercased for comparison.
bool is_heading_label(std::string_view lowered) {
  return lowered == "chapitre" || lowered == "article" || lowered == "section" ||
         lowered == "paragraphe" || lowered == "chapter";
}

}  // namespace

std::optional<Headline> classify_headline(std::string_view line) {
  const auto cps = text::decode_utf8(line);
  std::size_t pos = 0;
  int leading = 0;
  while (pos < cps.size() && text::is_space(cps[pos])) {
    ++pos;
    ++leading;
    if (leading > 3) return std::nullopt;
  }
  if (pos >= cps.size()) return std::nullopt;

  auto read_word = [&](std::size_t from) {
    std::size_t end = from;
    while (end < cps.size() && text::is_word_char(cps[end])) ++end;
    return end;
  };

  // Optional heading label ("Chapitre 2 ...", "Article I ...").
  std::size_t word_end = read_word(pos);
  std::string first_word =
      text::encode_utf8({cps.begin() + pos, cps.begin() + word_end});
  std::size_t number_start = pos;
  if (is_heading_label(text::lower_copy(first_word))) {
    std::size_t next = word_end;
    while (next < cps.size() && text::is_space(cps[next])) ++next;
    if (next == word_end || next >= cps.size()) return std::nullopt;
    number_start = next;
  }

  // Number token: dot-separated Arabic or Roman components.
  std::vector<std::string> components;
  std::size_t cursor = number_start;
  while (true) {
    const std::size_t comp_end = read_word(cursor);
    if (comp_end == cursor) return std::nullopt;
    std::string component =
        text::encode_utf8({cps.begin() + cursor, cps.begin() + comp_end});
    if (!is_number_component(component)) return std::nullopt;
    components.push_back(std::move(component));
    cursor = comp_end;
    if (cursor + 1 < cps.size() && cps[cursor] == U'.' &&
        text::is_word_char(cps[cursor + 1])) {
      ++cursor;
      continue;
    }
    break;
  }

  // The number must be followed by a separator or end of line.
  std::size_t title_start = cursor;
  bool separated = title_start >= cps.size();
  while (title_start < cps.size()) {
    const char32_t c = cps[title_start];
    if (text::is_space(c)) {
      separated = true;
      ++title_start;
    } else if (c == U'.' || c == U')' || c == U'-' || c == 0x2013 || c == 0x2014 ||
               c == U':') {
      separated = true;
      ++title_start;
    } else {
      break;
    }
  }
  if (!separated) return std::nullopt;

  Headline headline;
  headline.raw_text = std::string(line);
  std::string number;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) number += '.';
    number += components[i];
  }
  headline.number_token = std::move(number);
  headline.level = static_cast<int>(components.size());
  headline.title = text::strip_copy(
      text::encode_utf8({cps.begin() + title_start, cps.end()}));
  return headline;
}

namespace {

std::vector<std::string> number_components(const std::string& token) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : token) {
    if (c == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

HierarchyResult build_hierarchy(const Document& doc) {
  HierarchyResult result;
  result.root = std::make_unique<SectionNode>();

  // stack[i] = deepest open node at depth i; stack[0] is the root.
  std::vector<SectionNode*> stack{result.root.get()};
  auto node_level = [](const SectionNode* n) {
    return n->headline ? n->headline->level : 0;
  };

  bool any_headline = false;
  for (const auto& page : doc.pages) {
    for (std::size_t li = 0; li < page.lines.size(); ++li) {
      const std::string& line = page.lines[li];
      if (text::is_blank(line)) continue;
      auto headline = classify_headline(line);
      if (!headline) {
        stack.back()->paragraphs.push_back(
            {text::strip_copy(line), page.index, static_cast<int>(li)});
        continue;
      }
      any_headline = true;
      headline->page_index = page.index;
      headline->line_index = static_cast<int>(li);

      while (node_level(stack.back()) >= headline->level) stack.pop_back();
      SectionNode* parent = stack.back();
      if (node_level(parent) != headline->level - 1) {
        result.warnings.push_back(
            "level jump at page " + std::to_string(page.index) + " line " +
            std::to_string(li) + ": headline \"" + headline->number_token +
            "\" (level " + std::to_string(headline->level) +
            ") attached under level " + std::to_string(node_level(parent)));
      } else if (parent->headline && headline->level > 1) {
        const auto parent_parts = number_components(parent->headline->number_token);
        const auto child_parts = number_components(headline->number_token);
        bool prefix_ok = child_parts.size() > parent_parts.size();
        for (std::size_t i = 0; prefix_ok && i < parent_parts.size(); ++i) {
          prefix_ok = parent_parts[i] == child_parts[i];
        }
        if (!prefix_ok) {
          result.warnings.push_back(
              "numbering inconsistency at page " + std::to_string(page.index) +
              " line " + std::to_string(li) + ": \"" + headline->number_token +
              "\" under \"" + parent->headline->number_token + "\"");
        }
      }
      auto node = std::make_unique<SectionNode>();
      node->headline = std::move(*headline);
      parent->children.push_back(std::move(node));
      stack.push_back(parent->children.back().get());
    }
  }

  if (!any_headline) {
    bool has_text = !result.root->paragraphs.empty();
    if (has_text) result.warnings.push_back("no numbering system detected");
  }
  return result;
}

HierarchyResult build_hierarchy(const CleanDocument& clean) {
  return build_hierarchy(to_document(clean));
}

namespace {

void collect_requirements(const SectionNode& node,
                          std::vector<const SectionNode*>& path,
                          std::vector<RawRequirement>& out) {
  path.push_back(&node);
  if (node.is_leaf()) {
    bool has_content = false;
    for (const SectionNode* n : path) {
      if (!n->paragraphs.empty() || n->headline) {
        has_content = true;
        break;
      }
    }
    if (has_content) {
      RawRequirement req;
      req.req_id = "r" + std::to_string(out.size() + 1);
      if (node.headline) req.title = node.headline->title;
      std::string text;
      for (const SectionNode* n : path) {
        if (n->headline) req.hierarchy_path.push_back(n->headline->title);
        for (const auto& para : n->paragraphs) {
          if (!text.empty()) text += '\n';
          const std::size_t start = text::cp_length(text);
          text += para.text;
          req.char_map.push_back({start, text::cp_length(text), para.page_index,
                                  para.line_index});
        }
      }
      req.text = std::move(text);
      out.push_back(std::move(req));
    }
  } else {
    for (const auto& child : node.children) {
      collect_requirements(*child, path, out);
    }
  }
  path.pop_back();
}

}  // namespace

std::vector<RawRequirement> extract_raw_requirements(const SectionNode& root) {
  std::vector<RawRequirement> out;
  std::vector<const SectionNode*> path;
  collect_requirements(root, path, out);
  // Pad ids so they sort lexically in document order.
  const int width = out.size() >= 100 ? 4 : 3;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::string n = std::to_string(i + 1);
    out[i].req_id = "r" + std::string(width - std::min<std::size_t>(width, n.size()), '0') + n;
  }
  return out;
}

namespace {

void collect_toc(const SectionNode& node, std::vector<TocEntry>& out) {
  if (node.headline) out.push_back({node.headline->number_token, node.headline->title});
  for (const auto& child : node.children) collect_toc(*child, out);
}

// Strips dot leaders and trailing page numbers from a TOC line.
std::string clean_toc_line(std::string_view line) {
  auto cps = text::decode_utf8(text::strip_copy(line));
  // Trailing page number.
  while (!cps.empty() && text::is_ascii_digit(cps.back())) cps.pop_back();
  // Trailing dots and spaces left behind by the leader.
  while (!cps.empty() && (cps.back() == U'.' || text::is_space(cps.back()))) {
    cps.pop_back();
  }
  // Internal leader runs ("Title....4") collapse to a single space.
  std::vector<char32_t> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (cps[i] == U'.' && i + 1 < cps.size() && cps[i + 1] == U'.') {
      while (i < cps.size() && cps[i] == U'.') ++i;
      out.push_back(U' ');
    } else {
      out.push_back(cps[i++]);
    }
  }
  return text::strip_copy(text::encode_utf8(out));
}

}  // namespace

std::vector<TocEntry> regenerate_toc(const SectionNode& root) {
  std::vector<TocEntry> out;
  collect_toc(root, out);
  return out;
}

std::optional<PageRange> locate_toc(const Document& doc,
                                    const std::vector<TocEntry>& entries,
                                    const TocOptions& options) {
  if (entries.empty() || doc.pages.empty()) return std::nullopt;

  const int scan = std::min<int>(options.scan_pages,
                                 static_cast<int>(doc.pages.size()));
  std::vector<bool> qualifies(scan, false);
  for (int p = 0; p < scan; ++p) {
    int non_blank = 0, matched = 0;
    for (const auto& line : doc.pages[p].lines) {
      if (text::is_blank(line)) continue;
      ++non_blank;
      const std::string cleaned = clean_toc_line(line);
      if (cleaned.empty()) continue;
      for (const auto& entry : entries) {
        const std::string with_number = entry.number_token + " " + entry.title;
        if (levenshtein(cleaned, entry.title) <= options.levenshtein_threshold ||
            levenshtein(cleaned, with_number) <= options.levenshtein_threshold) {
          ++matched;
          break;
        }
      }
    }
    qualifies[p] = non_blank > 0 && matched >= options.min_matched_lines &&
                   static_cast<double>(matched) / non_blank >= options.min_match_ratio;
  }

  for (int p = 0; p < scan; ++p) {
    if (!qualifies[p]) continue;
    int last = p;
    while (last + 1 < scan && qualifies[last + 1]) ++last;
    return PageRange{p, last};
  }
  return std::nullopt;
}

json raw_requirement_to_json(const RawRequirement& req) {
  return json{{"req_id", req.req_id},
              {"title", req.title},
              {"hierarchy_path", req.hierarchy_path},
              {"text", req.text}};
}

}  // namespace btsie
