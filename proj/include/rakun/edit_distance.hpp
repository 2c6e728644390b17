#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace rakun {

// Levenshtein distance over codepoints (unit cost insert/delete/substitute).
std::size_t levenshtein(std::string_view a, std::string_view b);

// True when levenshtein(a, b) <= limit; abandons the DP early otherwise.
bool levenshtein_within(std::string_view a, std::string_view b, std::size_t limit);

// Pre-decoded variant for tight loops over many pairs.
bool levenshtein_within(const std::vector<char32_t>& a, const std::vector<char32_t>& b,
                        std::size_t limit);

}  // namespace rakun
