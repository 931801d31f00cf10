#pragma once

#include <string>
#include <vector>

#include "cmotzkin/words.hpp"

namespace cmotzkin {

/// Outcome of a validation pass. On failure, `condition` names the first
/// violated rule and `position` is the 1-based cell where it was detected
/// (0 when no single position applies).
struct ValidationReport {
  bool ok = true;
  std::string condition;
  int position = 0;

  /// "PASS" or "FAIL <condition> at <position>".
  std::string render() const;

  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string cond, int pos) {
    return {false, std::move(cond), pos};
  }
};

// Conditions reported for step sequences:
//   "letter" - a letter token where only steps are allowed
//   "color"  - step color outside [1, colors]
//   "M2"     - prefix height chain h_1 >= ... >= h_colors >= 0 broken
//   "M1"     - some color ends unbalanced (reported at the last position)
ValidationReport validate_motzkin(const std::vector<Token>& steps, int colors);
ValidationReport validate_motzkin(const MotzkinWord& path);

// Conditions reported for letter words:
//   "letter" - letter < 1
//   "rows"   - letter exceeds max_rows
//   "ballot" - some prefix holds more i+1 than i
ValidationReport validate_yamanouchi(const std::vector<int>& letters, int max_rows);
ValidationReport validate_yamanouchi(const YamanouchiWord& word);

}  // namespace cmotzkin
