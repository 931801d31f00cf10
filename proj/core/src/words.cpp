#include "cmotzkin/words.hpp"

#include <numeric>

#include "cmotzkin/errors.hpp"

namespace cmotzkin {

int Partition::cells() const {
  return std::accumulate(rows.begin(), rows.end(), 0);
}

std::vector<int> Partition::conjugate() const {
  std::vector<int> cols(rows.empty() ? 0 : rows.front(), 0);
  for (int r : rows)
    for (int j = 0; j < r; ++j) ++cols[j];
  return cols;
}

WorkingSequence WorkingSequence::from_word(const YamanouchiWord& word, int colors) {
  WorkingSequence seq;
  seq.colors = colors;
  seq.cells.reserve(word.letters.size());
  for (int v : word.letters) seq.cells.push_back(Token::letter(v));
  return seq;
}

MotzkinWord WorkingSequence::path_part() const {
  MotzkinWord path;
  path.colors = colors;
  for (const Token& c : cells)
    if (c.is_step()) path.steps.push_back(c);
  return path;
}

YamanouchiWord WorkingSequence::to_word(int max_rows) const {
  YamanouchiWord word;
  word.max_rows = max_rows;
  word.letters.reserve(cells.size());
  for (const Token& c : cells) {
    if (!c.is_letter())
      throw algorithm_defect("working sequence still holds steps");
    word.letters.push_back(c.value);
  }
  return word;
}

bool WorkingSequence::all_steps() const {
  for (const Token& c : cells)
    if (c.is_letter()) return false;
  return true;
}

bool WorkingSequence::all_letters() const {
  for (const Token& c : cells)
    if (c.is_step()) return false;
  return true;
}

}  // namespace cmotzkin
