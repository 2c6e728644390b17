#include "rakun/unicode.hpp"

namespace rakun {

namespace {

// Returns the length of the UTF-8 sequence starting at text[pos], or 1 when
// the bytes do not form a valid sequence.
std::size_t sequence_length(std::string_view text, std::size_t pos) {
  const auto first = static_cast<unsigned char>(text[pos]);
  std::size_t expect = 0;
  if (first < 0x80) {
    return 1;
  } else if ((first & 0xE0) == 0xC0) {
    expect = 2;
  } else if ((first & 0xF0) == 0xE0) {
    expect = 3;
  } else if ((first & 0xF8) == 0xF0) {
    expect = 4;
  } else {
    return 1;
  }
  if (pos + expect > text.size()) return 1;
  for (std::size_t i = 1; i < expect; ++i) {
    if ((static_cast<unsigned char>(text[pos + i]) & 0xC0) != 0x80) return 1;
  }
  return expect;
}

char32_t decode_at(std::string_view text, std::size_t pos, std::size_t len) {
  const auto first = static_cast<unsigned char>(text[pos]);
  if (len == 1) return first;
  char32_t cp = first & (0xFF >> (len + 1));
  for (std::size_t i = 1; i < len; ++i) {
    cp = (cp << 6) | (static_cast<unsigned char>(text[pos + i]) & 0x3F);
  }
  return cp;
}

}  // namespace

std::vector<char32_t> decode_codepoints(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t len = sequence_length(text, pos);
    out.push_back(decode_at(text, pos, len));
    pos += len;
  }
  return out;
}

std::size_t codepoint_count(std::string_view text) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    pos += sequence_length(text, pos);
    ++count;
  }
  return count;
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace rakun
