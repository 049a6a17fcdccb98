#include "btsie/textproc.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "btsie/errors.hpp"
#include "btsie/text_utils.hpp"

namespace btsie {

using nlohmann::json;
namespace tx = btsie::text;

std::vector<Token> tokenize(std::string_view input) {
  const auto cps = tx::decode_utf8(input);
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = cps.size();

  auto emit = [&](std::size_t start, std::size_t end) {
    Token t;
    t.start = start;
    t.end = end;
    t.surface = tx::encode_utf8({cps.begin() + start, cps.begin() + end});
    tokens.push_back(std::move(t));
  };

  while (i < n) {
    if (tx::is_space(cps[i])) {
      ++i;
      continue;
    }
    if (tx::is_word_char(cps[i])) {
      const std::size_t start = i;
      while (i < n) {
        if (tx::is_word_char(cps[i])) {
          ++i;
          continue;
        }
        // Decimal separators and the multiplication sign stay inside a
        // token when flanked by digits ("1.46", "1,4", "100×220").
        const bool joiner = cps[i] == U'.' || cps[i] == U',' || cps[i] == 0x00D7;
        if (joiner && i + 1 < n && i > start && tx::is_ascii_digit(cps[i - 1]) &&
            tx::is_ascii_digit(cps[i + 1])) {
          i += 2;
          continue;
        }
        break;
      }
      emit(start, i);
      continue;
    }
    emit(i, i + 1);  // punctuation
    ++i;
  }
  return tokens;
}

std::vector<std::size_t> sentence_boundaries(std::string_view input) {
  const auto cps = tx::decode_utf8(input);
  std::vector<std::size_t> boundaries;
  bool seen_content = false;
  std::size_t i = 0;
  while (i < cps.size()) {
    const char32_t c = cps[i];
    if (c == U'\n') {
      std::size_t j = i;
      while (j < cps.size() && cps[j] == U'\n') ++j;
      if (seen_content) {
        boundaries.push_back(j);
        seen_content = false;
      }
      i = j;
      continue;
    }
    if (tx::is_space(c)) {
      ++i;
      continue;
    }
    if ((c == U'.' || c == U'!' || c == U'?') &&
        (i + 1 == cps.size() || tx::is_space(cps[i + 1]))) {
      if (seen_content) {
        boundaries.push_back(i + 1);
        seen_content = false;
      }
      ++i;
      continue;
    }
    seen_content = true;
    ++i;
  }
  return boundaries;
}

int count_sentences(std::string_view input) {
  const auto boundaries = sentence_boundaries(input);
  int count = static_cast<int>(boundaries.size());
  // Trailing text after the last boundary counts as one more sentence.
  const auto cps = tx::decode_utf8(input);
  const std::size_t from = boundaries.empty() ? 0 : boundaries.back();
  for (std::size_t i = from; i < cps.size(); ++i) {
    if (!tx::is_space(cps[i])) {
      ++count;
      break;
    }
  }
  return count;
}

int sentences_between(std::string_view input, std::size_t from, std::size_t to) {
  int count = 0;
  for (std::size_t b : sentence_boundaries(input)) {
    if (b > from && b <= to) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// POS tagging
// ---------------------------------------------------------------------------

LexiconPosTagger LexiconPosTagger::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open lexicon file: " + path.string());
  LexiconPosTagger tagger;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    tagger.lexicon_[tx::lower_copy(line.substr(0, tab))] =
        tx::strip_copy(line.substr(tab + 1));
  }
  return tagger;
}

LexiconPosTagger LexiconPosTagger::from_entries(
    const std::vector<std::pair<std::string, std::string>>& entries) {
  LexiconPosTagger tagger;
  for (const auto& [surface, pos] : entries) {
    tagger.lexicon_[tx::lower_copy(surface)] = pos;
  }
  return tagger;
}

namespace {

bool all_digits(std::string_view s) {
  const auto cps = tx::decode_utf8(s);
  if (cps.empty()) return false;
  for (char32_t c : cps) {
    if (!tx::is_ascii_digit(c) && c != U'.' && c != U',') return false;
  }
  return tx::is_ascii_digit(cps.front());
}

bool contains_digit(std::string_view s) {
  for (char32_t c : tx::decode_utf8(s)) {
    if (tx::is_ascii_digit(c)) return true;
  }
  return false;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

std::string suffix_guess(const std::string& lower) {
  if (ends_with(lower, "ment")) return "ADV";
  if (ends_with(lower, "tion") || ends_with(lower, "sion") ||
      ends_with(lower, "té") || ends_with(lower, "ité")) {
    return "NOUN";
  }
  if (ends_with(lower, "eaux") || ends_with(lower, "aux")) return "NOUN";
  if (ends_with(lower, "ique") || ends_with(lower, "aire") ||
      ends_with(lower, "euse") || ends_with(lower, "eux")) {
    return "ADJ";
  }
  if (lower.size() > 4 && (ends_with(lower, "ée") || ends_with(lower, "és") ||
                           ends_with(lower, "ées") || ends_with(lower, "é"))) {
    return "ADJ";
  }
  if (lower.size() > 4 && (ends_with(lower, "er") || ends_with(lower, "ir"))) {
    return "VERB";
  }
  return "X";
}

}  // namespace

void LexiconPosTagger::tag(std::vector<Token>& tokens) const {
  for (auto& token : tokens) {
    if (tx::is_blank(token.surface)) {
      token.pos = "SPACE";
      continue;
    }
    const auto cps = tx::decode_utf8(token.surface);
    if (cps.size() == 1 && tx::is_punct(cps[0])) {
      token.pos = "PUNCT";
      continue;
    }
    const std::string lower = tx::lower_copy(token.surface);
    if (auto it = lexicon_.find(lower); it != lexicon_.end()) {
      token.pos = it->second;
      continue;
    }
    if (all_digits(token.surface)) {
      token.pos = "NUM";
      continue;
    }
    if (contains_digit(token.surface)) {
      token.pos = "PROPN";
      continue;
    }
    token.pos = suffix_guess(lower);
  }
}

PrecomputedPosTagger PrecomputedPosTagger::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open POS sidecar: " + path.string());
  PrecomputedPosTagger tagger;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (tx::is_blank(line)) continue;
    try {
      const json j = json::parse(line);
      const AnnId id = AnnId::from_json(j.at("id"));
      tagger.by_sample_[id.value] = j.at("pos").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      throw ValidationError(path.string() + " line " + std::to_string(line_no) +
                            ": " + e.what());
    }
  }
  return tagger;
}

bool PrecomputedPosTagger::tag_sample(const AnnId& sample_id,
                                      std::vector<Token>& tokens) const {
  const auto it = by_sample_.find(sample_id.value);
  if (it == by_sample_.end() || it->second.size() != tokens.size()) return false;
  for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].pos = it->second[i];
  return true;
}

// ---------------------------------------------------------------------------
// BILOU codec
// ---------------------------------------------------------------------------

namespace {

struct TagItem {
  char bilu = 'O';
  std::string label;
};

TagItem parse_simple_tag(std::string_view tag) {
  if (tag.size() < 3 || tag[1] != '-' ||
      (tag[0] != 'B' && tag[0] != 'I' && tag[0] != 'L' && tag[0] != 'U')) {
    throw ValidationError("malformed BILOU tag: \"" + std::string(tag) + "\"");
  }
  return {tag[0], std::string(tag.substr(2))};
}

}  // namespace

std::vector<std::string> split_overlap_tag(std::string_view tag) {
  if (tag == "O") return {"O"};
  // Entity labels contain underscores, so the layer separator is located as
  // "_<BILU>-" rather than by a naive split.
  for (std::size_t i = 2; i + 2 < tag.size(); ++i) {
    if (tag[i] == '_' &&
        (tag[i + 1] == 'B' || tag[i + 1] == 'I' || tag[i + 1] == 'L' ||
         tag[i + 1] == 'U') &&
        tag[i + 2] == '-') {
      return {std::string(tag.substr(0, i)), std::string(tag.substr(i + 1))};
    }
  }
  return {std::string(tag)};
}

TagSequence bilou_encode(const std::vector<Token>& tokens,
                         const std::vector<EntitySpan>& spans) {
  std::map<std::size_t, std::size_t> by_start, by_end;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    by_start[tokens[i].start] = i;
    by_end[tokens[i].end] = i;
  }

  struct Placed {
    const EntitySpan* span;
    std::size_t first, last;
  };
  std::vector<Placed> placed;
  for (const auto& span : spans) {
    const auto s = by_start.find(span.start_offset);
    const auto e = by_end.find(span.end_offset);
    if (s == by_start.end() || e == by_end.end() || e->second < s->second) {
      throw ValidationError("span " + span.label + " [" +
                            std::to_string(span.start_offset) + ", " +
                            std::to_string(span.end_offset) +
                            ") does not align with token boundaries");
    }
    placed.push_back({&span, s->second, e->second});
  }

  std::vector<std::vector<const Placed*>> cover(tokens.size());
  for (const auto& p : placed) {
    for (std::size_t t = p.first; t <= p.last; ++t) cover[t].push_back(&p);
  }

  TagSequence tags(tokens.size(), "O");
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    auto& here = cover[t];
    if (here.empty()) continue;
    if (here.size() > 2) {
      throw ValidationError(
          "more than two overlapping spans on token \"" + tokens[t].surface +
          "\" (offset " + std::to_string(tokens[t].start) + ")");
    }
    // Longer span is primary; ties broken by earlier start.
    std::sort(here.begin(), here.end(), [](const Placed* a, const Placed* b) {
      const auto len_a = a->span->end_offset - a->span->start_offset;
      const auto len_b = b->span->end_offset - b->span->start_offset;
      if (len_a != len_b) return len_a > len_b;
      return a->span->start_offset < b->span->start_offset;
    });
    std::string tag;
    for (const Placed* p : here) {
      char letter;
      if (p->first == p->last) {
        letter = 'U';
      } else if (t == p->first) {
        letter = 'B';
      } else if (t == p->last) {
        letter = 'L';
      } else {
        letter = 'I';
      }
      if (!tag.empty()) tag += '_';
      tag += letter;
      tag += '-';
      tag += p->span->label;
    }
    tags[t] = std::move(tag);
  }
  return tags;
}

BilouDecodeResult bilou_decode(const std::vector<Token>& tokens,
                               const TagSequence& tags, std::string_view text) {
  if (tokens.size() != tags.size()) {
    throw ValidationError("tag sequence length " + std::to_string(tags.size()) +
                          " does not match token count " +
                          std::to_string(tokens.size()));
  }

  struct Open {
    std::string label;
    std::size_t first_token;
    std::size_t last_token;
    bool continued = false;
  };
  BilouDecodeResult result;
  std::vector<Open> open;

  auto emit = [&](const std::string& label, std::size_t first, std::size_t last) {
    EntitySpan span;
    span.label = label;
    span.start_offset = tokens[first].start;
    span.end_offset = tokens[last].end;
    span.surface = tx::cp_substr(text, span.start_offset, span.end_offset);
    result.spans.push_back(std::move(span));
  };

  for (std::size_t t = 0; t < tags.size(); ++t) {
    for (auto& o : open) o.continued = false;

    for (const auto& layer : split_overlap_tag(tags[t])) {
      if (layer == "O") continue;
      const TagItem item = parse_simple_tag(layer);
      if (item.bilu == 'U') {
        emit(item.label, t, t);
        continue;
      }
      if (item.bilu == 'B') {
        open.push_back({item.label, t, t, true});
        continue;
      }
      // I or L: continue an open run of the same label.
      Open* run = nullptr;
      for (auto& o : open) {
        if (!o.continued && o.label == item.label) {
          run = &o;
          break;
        }
      }
      if (!run) {
        result.repairs.push_back(std::string(1, item.bilu) + "-" + item.label +
                                 " without B at token " + std::to_string(t) +
                                 "; span opened here");
        open.push_back({item.label, t, t, true});
        run = &open.back();
      } else {
        run->last_token = t;
        run->continued = true;
      }
      if (item.bilu == 'L') {
        emit(run->label, run->first_token, run->last_token);
        open.erase(open.begin() + (run - open.data()));
      }
    }

    // Runs not continued at this position ended without an L.
    for (std::size_t k = open.size(); k-- > 0;) {
      if (!open[k].continued) {
        result.repairs.push_back("span " + open[k].label +
                                 " unterminated before token " +
                                 std::to_string(t));
        emit(open[k].label, open[k].first_token, open[k].last_token);
        open.erase(open.begin() + k);
      }
    }
  }
  for (const auto& o : open) {
    result.repairs.push_back("span " + o.label + " unterminated at sequence end");
    emit(o.label, o.first_token, o.last_token);
  }

  std::sort(result.spans.begin(), result.spans.end(),
            [](const EntitySpan& a, const EntitySpan& b) {
              if (a.start_offset != b.start_offset) {
                return a.start_offset < b.start_offset;
              }
              if (a.end_offset != b.end_offset) return a.end_offset < b.end_offset;
              return a.label < b.label;
            });
  for (std::size_t i = 0; i < result.spans.size(); ++i) {
    result.spans[i].id = AnnId::of(static_cast<std::int64_t>(i + 1));
  }
  return result;
}

bool bilou_grammar_ok(const TagSequence& tags) {
  // open[label] = runs of that label open before the current position; each
  // must be continued by exactly one I or L of its label at every position.
  std::map<std::string, int> open;
  for (const auto& tag : tags) {
    std::map<std::string, int> pending = open;
    for (const auto& layer : split_overlap_tag(tag)) {
      if (layer == "O") continue;
      TagItem item;
      try {
        item = parse_simple_tag(layer);
      } catch (const ValidationError&) {
        return false;
      }
      switch (item.bilu) {
        case 'B':
          ++open[item.label];
          break;
        case 'U':
          break;
        case 'I':
          if (pending[item.label] <= 0) return false;
          --pending[item.label];
          break;
        case 'L':
          if (pending[item.label] <= 0) return false;
          --pending[item.label];
          --open[item.label];
          break;
      }
    }
    for (const auto& [label, count] : pending) {
      (void)label;
      if (count > 0) return false;
    }
  }
  for (const auto& [label, count] : open) {
    (void)label;
    if (count != 0) return false;
  }
  return true;
}

}  // namespace btsie
