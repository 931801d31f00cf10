#pragma once

#include <vector>

#include "cmotzkin/words.hpp"

namespace cmotzkin {

/// Prefix height h_color(j) for every cell position j (1-based, returned in
/// index order). Letter cells do not advance the count, so heights are
/// constant across them. Throws invalid_word for a color outside [1, colors].
std::vector<int> heights(const WorkingSequence& seq, int color);
std::vector<int> heights(const MotzkinWord& path, int color);

/// Number of level steps.
int level_steps(const MotzkinWord& path);

/// Splits a path into Lower / Hat / Bar (see PathClass). Undefined for
/// colors == 0; throws invalid_word there.
PathClass classify(const MotzkinWord& path);
const char* to_string(PathClass c);

/// For an up step, the least j > position closing its color balance; for a
/// down step the matching opener. An involution on the colored steps of a
/// valid word. Throws invalid_word for level positions or unmatched steps.
int matching_partner(const MotzkinWord& path, int position);

/// Positions j holding Up(color) with h_color(j) == h_{color-1}(j), counts
/// taken over step cells up to and including j. Requires 2 <= color <= colors.
std::vector<int> critical_up_steps(const WorkingSequence& seq, int color);
std::vector<int> critical_up_steps(const MotzkinWord& path, int color);

/// Positions j holding Up(color) with h_color(j) == h_{color+1}(j) + 1.
/// Requires 1 <= color <= colors - 1.
std::vector<int> exceeding_up_steps(const WorkingSequence& seq, int color);
std::vector<int> exceeding_up_steps(const MotzkinWord& path, int color);

/// Sanity oracle: each color's subword is a parenthesis system and every
/// matching (k+1)-pair is nested inside a matching k-pair. Holds for every
/// valid word; returns false on words that break either condition.
bool check_nesting_properties(const MotzkinWord& path);

/// Row lengths of the tableau encoded by a ballot word (row i holds the
/// positions of letter i). Throws invalid_word if the counts do not form a
/// partition.
Partition shape_of(const YamanouchiWord& word);

/// Number of odd-length columns of the encoded tableau shape.
int odd_columns(const YamanouchiWord& word);

}  // namespace cmotzkin
