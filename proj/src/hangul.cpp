#include "eotree/hangul.hpp"

#include "eotree/diagnostics.hpp"

namespace eotree::hangul {

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b = s[i];
    char32_t cp = 0;
    int extra = 0;
    if (b < 0x80) {
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      cp = b & 0x1F;
      extra = 1;
    } else if ((b & 0xF0) == 0xE0) {
      cp = b & 0x0F;
      extra = 2;
    } else if ((b & 0xF8) == 0xF0) {
      cp = b & 0x07;
      extra = 3;
    } else {
      throw Error("Encoding", "invalid UTF-8 lead byte");
    }
    if (extra > 0 && i + extra >= s.size())
      throw Error("Encoding", "truncated UTF-8 sequence");
    for (int k = 1; k <= extra; ++k) {
      unsigned char c = s[i + k];
      if ((c & 0xC0) != 0x80) throw Error("Encoding", "invalid UTF-8 continuation byte");
      cp = (cp << 6) | (c & 0x3F);
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
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
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

int trailing_index(char32_t syllable) {
  if (!is_syllable(syllable)) return -1;
  return static_cast<int>((syllable - 0xAC00) % 28);
}

int jamo_trailing_index(char32_t jamo) {
  // Compatibility jamo consonants U+3131..U+314E mapped to jongseong
  // indices; -1 where the consonant cannot close a syllable.
  static const int table[] = {
      1,  2,  3,  4,  5,  6,  7,  -1, 8,  9,  10, 11, 12, 13, 14,
      15, 16, 17, -1, 18, 19, 20, 21, 22, -1, 23, 24, 25, 26, 27,
  };
  if (jamo < 0x3131 || jamo > 0x314E) return -1;
  return table[jamo - 0x3131];
}

char32_t compose_trailing(char32_t syllable, char32_t jamo) {
  int tail = jamo_trailing_index(jamo);
  if (tail < 0) return 0;
  if (trailing_index(syllable) != 0) return 0;
  return syllable + static_cast<char32_t>(tail);
}

std::string append_form(const std::string& eojeol, std::string_view form) {
  if (form.empty()) return eojeol;
  if (eojeol.empty()) return std::string(form);
  std::vector<char32_t> head = decode_utf8(eojeol);
  std::vector<char32_t> tail = decode_utf8(form);
  char32_t composed = compose_trailing(head.back(), tail.front());
  if (composed != 0) {
    head.back() = composed;
    tail.erase(tail.begin());
  }
  head.insert(head.end(), tail.begin(), tail.end());
  return encode_utf8(head);
}

}  // namespace eotree::hangul
