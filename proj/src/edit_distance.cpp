#include "rakun/edit_distance.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "rakun/unicode.hpp"

namespace rakun {

std::size_t levenshtein(std::string_view a, std::string_view b) {
  const std::vector<char32_t> s = decode_codepoints(a);
  const std::vector<char32_t> t = decode_codepoints(b);
  if (s.empty()) return t.size();
  if (t.empty()) return s.size();

  std::vector<std::size_t> prev(t.size() + 1);
  std::vector<std::size_t> curr(t.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});

  for (std::size_t i = 1; i <= s.size(); ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (s[i - 1] == t[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, sub});
    }
    std::swap(prev, curr);
  }
  return prev[t.size()];
}

bool levenshtein_within(std::string_view a, std::string_view b, std::size_t limit) {
  return levenshtein_within(decode_codepoints(a), decode_codepoints(b), limit);
}

bool levenshtein_within(const std::vector<char32_t>& a, const std::vector<char32_t>& b,
                        std::size_t limit) {
  const std::size_t diff = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  if (diff > limit) return false;
  if (a.empty() || b.empty()) return true;  // diff check already passed

  // Two-row DP with values clamped at limit+1; abandons once a full row
  // exceeds the limit.
  const std::size_t cap = limit + 1;
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> curr(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = std::min(j, cap);

  for (std::size_t i = 1; i <= a.size(); ++i) {
    curr[0] = std::min(i, cap);
    std::size_t row_min = curr[0];
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, sub, cap});
      row_min = std::min(row_min, curr[j]);
    }
    if (row_min > limit) return false;
    std::swap(prev, curr);
  }
  return prev[b.size()] <= limit;
}

}  // namespace rakun
