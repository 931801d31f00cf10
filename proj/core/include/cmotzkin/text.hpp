#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cmotzkin/words.hpp"

namespace cmotzkin {

// Canonical text forms, single space separated:
//   steps    "U1 U1 L D1"
//   letters  "1 1 2 3"
// The letter parser also accepts commas and, when every letter is a single
// digit, an unseparated digit string such as "12132123".

std::string format_token(const Token& t);
std::string format_steps(const std::vector<Token>& steps);
std::string format_letters(const std::vector<int>& letters);
/// Steps and letters mixed, e.g. "U1 L 3 D1".
std::string format_cells(const std::vector<Token>& cells);

std::string format_path(const MotzkinWord& path);
std::string format_word(const YamanouchiWord& word);

/// Throws invalid_word on anything that is not L, U<color> or D<color>.
std::vector<Token> parse_steps(std::string_view text);
/// Steps and letters mixed; bare integers become letter cells.
std::vector<Token> parse_cells(std::string_view text);
/// Throws invalid_word on non-numeric or non-positive letters.
std::vector<int> parse_letters(std::string_view text);

MotzkinWord parse_path(std::string_view text, int colors);
YamanouchiWord parse_word(std::string_view text, int max_rows);

}  // namespace cmotzkin
