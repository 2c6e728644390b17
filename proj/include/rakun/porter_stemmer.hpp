#pragma once

#include <string>
#include <string_view>

namespace rakun {

// Porter's 1980 suffix-stripping algorithm. Words shorter than three
// characters or containing anything outside [a-z] are returned unchanged, so
// numbers, hyphenated forms and already-lowercased acronyms keep stable
// identifiers.
std::string porter_stem(std::string_view word);

// Stems each whitespace-separated term of a phrase and rejoins the results
// with single spaces.
std::string stem_phrase(std::string_view phrase);

}  // namespace rakun
