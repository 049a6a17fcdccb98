#include "btsie/text_utils.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace btsie::text {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point starting at s[i]; advances i by the bytes consumed.
char32_t decode_one(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return kReplacement;
  }
  if (i + len > s.size()) {
    ++i;
    return kReplacement;
  }
  for (int k = 1; k < len; ++k) {
    const auto bk = static_cast<unsigned char>(s[i + k]);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return kReplacement;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  i += len;
  return cp;
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) out.push_back(decode_one(s, i));
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) out += encode_utf8(cp);
  return out;
}

std::size_t cp_length(std::string_view s) {
  std::size_t n = 0, i = 0;
  while (i < s.size()) {
    decode_one(s, i);
    ++n;
  }
  return n;
}

std::vector<std::size_t> cp_byte_offsets(std::string_view s) {
  std::vector<std::size_t> offsets;
  offsets.reserve(s.size() + 1);
  std::size_t i = 0;
  while (i < s.size()) {
    offsets.push_back(i);
    decode_one(s, i);
  }
  offsets.push_back(s.size());
  return offsets;
}

std::string cp_substr(std::string_view s, std::size_t cp_start, std::size_t cp_end) {
  if (cp_end <= cp_start) return {};
  std::size_t i = 0, cp = 0, byte_start = s.size(), byte_end = s.size();
  while (i < s.size()) {
    if (cp == cp_start) byte_start = i;
    if (cp == cp_end) {
      byte_end = i;
      break;
    }
    decode_one(s, i);
    ++cp;
  }
  if (cp == cp_start) byte_start = i;
  if (cp == cp_end) byte_end = i;
  if (byte_start >= byte_end) return {};
  return std::string(s.substr(byte_start, byte_end - byte_start));
}

bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v' || c == 0x00A0 || c == 0x202F;
}

bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_punct(char32_t c) {
  if (c < 0x80) {
    return !(is_ascii_digit(c) || (c >= U'a' && c <= U'z') ||
             (c >= U'A' && c <= U'Z') || c == U'_' || is_space(c));
  }
  switch (c) {
    case 0x00AB:  // «
    case 0x00BB:  // »
    case 0x2018:  // '
    case 0x2019:  // '
    case 0x201C:  // "
    case 0x201D:  // "
    case 0x2013:  // –
    case 0x2014:  // —
    case 0x2022:  // •
    case 0x2026:  // …
    case 0x00D7:  // ×
    case 0x00F7:  // ÷
    case 0x00B0:  // °
    case 0x00A7:  // §
    case 0x2264:  // ≤
    case 0x2265:  // ≥
    case 0x2260:  // ≠
      return true;
    default:
      return false;
  }
}

bool is_word_char(char32_t c) {
  if (c < 0x80) {
    return is_ascii_digit(c) || (c >= U'a' && c <= U'z') ||
           (c >= U'A' && c <= U'Z') || c == U'_';
  }
  return !is_space(c) && !is_punct(c);
}

char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  // Latin-1 letters À..Þ map to à..þ, excluding ×.
  if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return c + 32;
  switch (c) {
    case 0x0152: return 0x0153;  // Œ → œ
    case 0x0178: return 0x00FF;  // Ÿ → ÿ
    default: return c;
  }
}

std::string lower_copy(std::string_view s) {
  auto cps = decode_utf8(s);
  for (auto& c : cps) c = to_lower(c);
  return encode_utf8(cps);
}

std::string strip_copy(std::string_view s) {
  auto cps = decode_utf8(s);
  std::size_t b = 0, e = cps.size();
  while (b < e && is_space(cps[b])) ++b;
  while (e > b && is_space(cps[e - 1])) --e;
  return encode_utf8(std::vector<char32_t>(cps.begin() + b, cps.begin() + e));
}

bool is_blank(std::string_view s) {
  for (char32_t c : decode_utf8(s)) {
    if (!is_space(c)) return false;
  }
  return true;
}

std::string compose_french(std::string_view s) {
  static const std::unordered_map<std::uint64_t, char32_t> table = [] {
    auto key = [](char32_t base, char32_t mark) {
      return (static_cast<std::uint64_t>(base) << 32) | mark;
    };
    std::unordered_map<std::uint64_t, char32_t> t;
    // 0x0300 grave, 0x0301 acute, 0x0302 circumflex, 0x0308 diaeresis, 0x0327 cedilla
    t[key(U'a', 0x300)] = 0x00E0; t[key(U'a', 0x302)] = 0x00E2;
    t[key(U'e', 0x300)] = 0x00E8; t[key(U'e', 0x301)] = 0x00E9;
    t[key(U'e', 0x302)] = 0x00EA; t[key(U'e', 0x308)] = 0x00EB;
    t[key(U'i', 0x302)] = 0x00EE; t[key(U'i', 0x308)] = 0x00EF;
    t[key(U'o', 0x302)] = 0x00F4; t[key(U'u', 0x300)] = 0x00F9;
    t[key(U'u', 0x302)] = 0x00FB; t[key(U'u', 0x308)] = 0x00FC;
    t[key(U'y', 0x308)] = 0x00FF; t[key(U'c', 0x327)] = 0x00E7;
    t[key(U'A', 0x300)] = 0x00C0; t[key(U'A', 0x302)] = 0x00C2;
    t[key(U'E', 0x300)] = 0x00C8; t[key(U'E', 0x301)] = 0x00C9;
    t[key(U'E', 0x302)] = 0x00CA; t[key(U'E', 0x308)] = 0x00CB;
    t[key(U'I', 0x302)] = 0x00CE; t[key(U'I', 0x308)] = 0x00CF;
    t[key(U'O', 0x302)] = 0x00D4; t[key(U'U', 0x300)] = 0x00D9;
    t[key(U'U', 0x302)] = 0x00DB; t[key(U'U', 0x308)] = 0x00DC;
    t[key(U'C', 0x327)] = 0x00C7;
    return t;
  }();

  auto cps = decode_utf8(s);
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t c : cps) {
    if (!out.empty()) {
      auto it = table.find((static_cast<std::uint64_t>(out.back()) << 32) | c);
      if (it != table.end()) {
        out.back() = it->second;
        continue;
      }
    }
    out.push_back(c);
  }
  return encode_utf8(out);
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  const auto ca = decode_utf8(a);
  const auto cb = decode_utf8(b);
  if (ca.empty()) return cb.size();
  if (cb.empty()) return ca.size();

  std::vector<std::size_t> prev(cb.size() + 1), cur(cb.size() + 1);
  for (std::size_t j = 0; j <= cb.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= ca.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= cb.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (ca[i - 1] == cb[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[cb.size()];
}

}  // namespace btsie::text
