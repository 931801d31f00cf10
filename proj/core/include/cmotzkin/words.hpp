#pragma once

#include <vector>

#include "cmotzkin/token.hpp"

namespace cmotzkin {

/// A word over {L, U^(k), D^(k) : 1 <= k <= colors}. Valid instances satisfy
/// the per-color balance condition and the prefix height chain
/// h_1 >= h_2 >= ... >= h_colors >= 0 (see validate_motzkin). A word may use
/// fewer colors than its bound.
struct MotzkinWord {
  std::vector<Token> steps;
  int colors = 0;

  int size() const { return static_cast<int>(steps.size()); }

  friend bool operator==(const MotzkinWord&, const MotzkinWord&) = default;
};

/// Row indices of a standard Young tableau in reading order. Valid instances
/// satisfy the ballot condition: every prefix has at least as many i as i+1.
struct YamanouchiWord {
  std::vector<int> letters;
  int max_rows = 0;

  int size() const { return static_cast<int>(letters.size()); }
  int max_letter() const {
    int m = 0;
    for (int v : letters) m = v > m ? v : m;
    return m;
  }

  friend bool operator==(const YamanouchiWord&, const YamanouchiWord&) = default;
};

/// Weakly decreasing row lengths of a Young diagram.
struct Partition {
  std::vector<int> rows;

  int cells() const;
  /// Column lengths, longest first.
  std::vector<int> conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// The three-way split of d-Motzkin paths used by the conversion:
///   Bar   - some level step sits above the top-color floor (h_d > 0 there),
///   Hat   - top-color steps occur but no such level step,
///   Lower - no top-color steps at all.
enum class PathClass { Lower, Hat, Bar };

/// Mixed steps-and-letters sequence the conversion algorithms rewrite in
/// place. Cell positions are 1-based and stable across rewrites; scans and
/// height counts treat letter cells as transparent.
struct WorkingSequence {
  std::vector<Token> cells;
  int colors = 0;

  int size() const { return static_cast<int>(cells.size()); }
  const Token& at(int position) const { return cells[position - 1]; }

  static WorkingSequence from_path(const MotzkinWord& path) {
    return {path.steps, path.colors};
  }
  static WorkingSequence from_word(const YamanouchiWord& word, int colors);

  /// The step cells in order (letters dropped).
  MotzkinWord path_part() const;
  /// Requires every cell to be a letter.
  YamanouchiWord to_word(int max_rows) const;

  bool all_steps() const;
  bool all_letters() const;

  friend bool operator==(const WorkingSequence&, const WorkingSequence&) = default;
};

}  // namespace cmotzkin
