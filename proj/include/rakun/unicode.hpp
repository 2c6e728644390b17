#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rakun {

// Decodes UTF-8 leniently: a malformed byte is taken as its own codepoint.
std::vector<char32_t> decode_codepoints(std::string_view text);

// Number of codepoints under the same lenient decoding.
std::size_t codepoint_count(std::string_view text);

// Lowercases ASCII letters only; all other bytes pass through.
std::string ascii_lower(std::string_view text);

inline bool is_ascii_alnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_lower_alpha(unsigned char c) { return c >= 'a' && c <= 'z'; }

}  // namespace rakun
