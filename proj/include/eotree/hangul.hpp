#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 / Hangul syllable arithmetic. Just enough to compose a
// bare trailing consonant (jongseong) written as a compatibility jamo into
// the preceding syllable: 되 + ㄹ -> 될, 이 + ㄴ -> 인.

namespace eotree::hangul {

std::vector<char32_t> decode_utf8(std::string_view s);
void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(const std::vector<char32_t>& cps);

inline bool is_syllable(char32_t cp) { return cp >= 0xAC00 && cp <= 0xD7A3; }

// 0 = no trailing consonant, 1..27 = jongseong index, -1 = not a syllable.
int trailing_index(char32_t syllable);

// Jongseong index for a compatibility jamo consonant (U+3131..U+314E),
// or -1 when the jamo cannot close a syllable (ㄸ, ㅃ, ㅉ) or is not a
// consonant jamo at all.
int jamo_trailing_index(char32_t jamo);

// Compose `jamo` into `syllable` as its trailing consonant. Returns 0 when
// the syllable already has one or the jamo cannot be a trailing consonant.
char32_t compose_trailing(char32_t syllable, char32_t jamo);

// Append `form` to `eojeol`, composing a leading bare consonant jamo into
// the last syllable when possible; otherwise a plain concatenation.
std::string append_form(const std::string& eojeol, std::string_view form);

}  // namespace eotree::hangul
