#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spanmt/errors.hpp"

// UTF-8 / code point utilities. All span offsets in this library count
// Unicode code points, matching the conventions of the datasets it
// processes; these helpers do the byte<->code point bookkeeping.

namespace spanmt::uni {

namespace detail {

struct CpRange {
  uint32_t first;
  uint32_t last;  // exclusive
};

struct LowerEntry {
  uint32_t cp;
  uint32_t to[3];
  uint8_t n;
};

#include "spanmt/detail/unicode_tables.inc"

template <size_t N>
inline bool in_ranges(const CpRange (&table)[N], char32_t cp) {
  auto it = std::upper_bound(std::begin(table), std::end(table), static_cast<uint32_t>(cp),
                             [](uint32_t v, const CpRange& r) { return v < r.first; });
  return it != std::begin(table) && static_cast<uint32_t>(cp) < std::prev(it)->last;
}

}  // namespace detail

// General category P*.
inline bool is_punct(char32_t cp) { return detail::in_ranges(detail::kPunctRanges, cp); }

// General category L*.
inline bool is_alpha(char32_t cp) { return detail::in_ranges(detail::kAlphaRanges, cp); }

// General category N*.
inline bool is_numeric(char32_t cp) { return detail::in_ranges(detail::kNumericRanges, cp); }

// Whitespace in the sense of Python's str.isspace().
inline bool is_space(char32_t cp) { return detail::in_ranges(detail::kSpaceRanges, cp); }

inline bool is_word_char(char32_t cp) {
  return cp == U'_' || is_alpha(cp) || is_numeric(cp);
}

inline void append_utf8(std::string& out, char32_t cp) {
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

inline std::string to_utf8(const std::u32string& s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) append_utf8(out, cp);
  return out;
}

// Strict decode; rejects truncated sequences, overlong encodings and
// surrogate code points.
inline std::u32string to_u32(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw Error("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > s.size()) throw Error("truncated UTF-8 sequence at offset " + std::to_string(i));
    for (size_t k = 1; k < len; ++k) {
      unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80)
        throw Error("invalid UTF-8 continuation byte at offset " + std::to_string(i + k));
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      throw Error("invalid UTF-8 code point at offset " + std::to_string(i));
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline size_t cp_length(std::string_view s) {
  size_t n = 0;
  for (char c : s)
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  return n;
}

// Byte offset of the cp_index-th code point (s.size() when past the end).
inline size_t cp_to_byte(std::string_view s, size_t cp_index) {
  size_t n = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
      if (n == cp_index) return i;
      ++n;
    }
  }
  return s.size();
}

inline std::string cp_slice(std::string_view s, size_t cp_start, size_t cp_end) {
  if (cp_end <= cp_start) return {};
  size_t b0 = cp_to_byte(s, cp_start);
  size_t b1 = cp_to_byte(s, cp_end);
  return std::string(s.substr(b0, b1 - b0));
}

// Precomputed byte offsets per code point; for repeated slicing of the
// same string.
class CpIndex {
public:
  explicit CpIndex(std::string_view s) : text_(s) {
    offsets_.reserve(s.size() + 1);
    for (size_t i = 0; i < s.size(); ++i)
      if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) offsets_.push_back(i);
    offsets_.push_back(s.size());
  }

  size_t cp_length() const { return offsets_.size() - 1; }

  std::string slice(size_t cp_start, size_t cp_end) const {
    if (cp_end <= cp_start) return {};
    cp_start = std::min(cp_start, cp_length());
    cp_end = std::min(cp_end, cp_length());
    return std::string(text_.substr(offsets_[cp_start], offsets_[cp_end] - offsets_[cp_start]));
  }

  char32_t at(size_t cp_index) const {
    std::u32string one = to_u32(text_.substr(offsets_[cp_index],
                                             offsets_[cp_index + 1] - offsets_[cp_index]));
    return one[0];
  }

private:
  std::string_view text_;
  std::vector<size_t> offsets_;
};

// Full per-character lowercase mapping (Unicode full case mappings, with
// the Greek final-sigma rule approximated by a letter-context test).
inline std::u32string to_lower(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    char32_t cp = s[i];
    if (cp == U'Σ') {  // capital sigma: final form when it ends a word
      bool prev_alpha = i > 0 && is_alpha(s[i - 1]);
      bool next_alpha = i + 1 < s.size() && is_alpha(s[i + 1]);
      out.push_back(prev_alpha && !next_alpha ? U'ς' : U'σ');
      continue;
    }
    auto it = std::lower_bound(std::begin(detail::kLowerMap), std::end(detail::kLowerMap),
                               static_cast<uint32_t>(cp),
                               [](const detail::LowerEntry& e, uint32_t v) { return e.cp < v; });
    if (it != std::end(detail::kLowerMap) && it->cp == static_cast<uint32_t>(cp)) {
      for (uint8_t k = 0; k < it->n; ++k) out.push_back(static_cast<char32_t>(it->to[k]));
    } else {
      out.push_back(cp);
    }
  }
  return out;
}

inline std::string to_lower_utf8(std::string_view s) { return to_utf8(to_lower(to_u32(s))); }

}  // namespace spanmt::uni
