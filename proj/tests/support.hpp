#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "strembed/types.hpp"

namespace testing {

// Letters map to ids 'a' -> 0, 'b' -> 1, ...; digits map to their value.
inline strembed::Str str(const std::string& text, std::size_t alphabet = 26) {
    std::vector<strembed::Symbol> s;
    for (const char c : text) s.push_back(static_cast<strembed::Symbol>(c >= 'a' ? c - 'a' : c - '0'));
    return {alphabet, std::move(s)};
}

inline strembed::Str bin(const std::string& text) { return str(text, 2); }

inline std::string letters(const strembed::Str& s) {
    std::string out;
    for (const strembed::Symbol c : s.symbols()) out.push_back(static_cast<char>('a' + c));
    return out;
}

inline std::string digits(const strembed::Str& s) {
    std::string out;
    for (const strembed::Symbol c : s.symbols()) out.push_back(static_cast<char>('0' + c));
    return out;
}

}  // namespace testing
