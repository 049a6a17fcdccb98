#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "btsie/annotations.hpp"

namespace btsie {

/// A token with code-point offsets into the original text. pos is empty
/// until a tagger runs.
struct Token {
  std::string surface;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string pos;
};

/// Whitespace-and-punctuation tokenizer: punctuation (including apostrophes)
/// forms single-character tokens; alphanumeric compounds ("93x225"), decimal
/// numbers ("1.46", "1,4") and digit×digit forms ("100×220") stay whole.
std::vector<Token> tokenize(std::string_view text);

/// Offsets just past each sentence end: '.', '!' or '?' followed by
/// whitespace or end of text, and newline runs. Boundaries separated only by
/// whitespace collapse into one.
std::vector<std::size_t> sentence_boundaries(std::string_view text);

/// Number of sentences (boundaries plus any trailing unterminated text).
int count_sentences(std::string_view text);

/// Sentence boundaries strictly inside the code-point range (from, to).
int sentences_between(std::string_view text, std::size_t from, std::size_t to);

class PosTagger {
 public:
  virtual ~PosTagger() = default;
  /// Fills Token::pos for every token; unknown words become "X".
  virtual void tag(std::vector<Token>& tokens) const = 0;
};

/// Lookup tagger over a TSV lexicon (`surface<TAB>POS`, UTF-8, lowercase
/// keys) with digit/punctuation rules and French suffix heuristics as
/// fallback.
class LexiconPosTagger : public PosTagger {
 public:
  static LexiconPosTagger load(const std::filesystem::path& path);
  static LexiconPosTagger from_entries(
      const std::vector<std::pair<std::string, std::string>>& entries);

  void tag(std::vector<Token>& tokens) const override;

 private:
  std::map<std::string, std::string> lexicon_;
};

/// Tagger backed by a precomputed-POS sidecar JSONL: one object per sample,
/// {"id":…, "pos":[…]} aligned with this library's tokenization.
class PrecomputedPosTagger {
 public:
  static PrecomputedPosTagger load(const std::filesystem::path& path);

  /// Applies the stored tags for the given sample id; returns false (leaving
  /// tokens untouched) when the id is unknown or lengths disagree.
  bool tag_sample(const AnnId& sample_id, std::vector<Token>& tokens) const;

 private:
  std::map<std::string, std::vector<std::string>> by_sample_;
};

/// Per-token BILOU (or extended-BILOU) labels, aligned 1:1 with a token list.
using TagSequence = std::vector<std::string>;

/// Encodes spans as BILOU tags over the tokens. Spans must start and end on
/// token boundaries. Up to two spans may cover one token; the longer span is
/// primary (ties: earlier start) and the tags join as "primary_secondary".
TagSequence bilou_encode(const std::vector<Token>& tokens,
                         const std::vector<EntitySpan>& spans);

struct BilouDecodeResult {
  std::vector<EntitySpan> spans;
  /// Notes about malformed runs repaired during decoding.
  std::vector<std::string> repairs;
};

/// Inverse of bilou_encode on well-formed sequences; malformed runs are
/// decoded leniently (an I without a B opens a span) with repair notes.
BilouDecodeResult bilou_decode(const std::vector<Token>& tokens,
                               const TagSequence& tags,
                               std::string_view text);

/// True when every I/L tag of a label follows a B of the same label with no
/// intervening O or U (checked per overlap layer).
bool bilou_grammar_ok(const TagSequence& tags);

/// Splits an extended tag into its layers; "O" yields a single "O".
std::vector<std::string> split_overlap_tag(std::string_view tag);

}  // namespace btsie
