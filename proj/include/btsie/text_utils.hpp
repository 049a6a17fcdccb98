#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace btsie::text {

/// Decodes UTF-8 into code points. Invalid byte sequences decode to U+FFFD
/// one byte at a time so offsets stay monotone.
std::vector<char32_t> decode_utf8(std::string_view s);

std::string encode_utf8(const std::vector<char32_t>& cps);
std::string encode_utf8(char32_t cp);

/// Number of code points in s.
std::size_t cp_length(std::string_view s);

/// Byte offset of each code point boundary; result.size() == cp_length(s) + 1
/// and result.back() == s.size().
std::vector<std::size_t> cp_byte_offsets(std::string_view s);

/// Substring by code-point offsets [cp_start, cp_end).
std::string cp_substr(std::string_view s, std::size_t cp_start, std::size_t cp_end);

bool is_space(char32_t c);
bool is_ascii_digit(char32_t c);

/// Punctuation and symbol code points that always form their own token.
bool is_punct(char32_t c);

/// Letters, digits and underscore; any non-ASCII code point that is neither
/// whitespace nor a known punctuation/symbol counts as a word character so
/// accented French letters need no table.
bool is_word_char(char32_t c);

char32_t to_lower(char32_t c);

/// Lowercase copy covering ASCII plus Latin-1 / Latin Extended-A letters.
std::string lower_copy(std::string_view s);

/// Copy with leading/trailing whitespace (incl. NBSP) removed.
std::string strip_copy(std::string_view s);

bool is_blank(std::string_view s);

/// Composes French base-letter + combining-mark pairs (NFD fragments) into
/// their precomposed forms. Not a general NFC pass; covers the marks that
/// occur in French text (acute, grave, circumflex, diaeresis, cedilla).
std::string compose_french(std::string_view s);

/// Edit distance (insert/delete/substitute, unit costs) over code points.
std::size_t levenshtein(std::string_view a, std::string_view b);

}  // namespace btsie::text
