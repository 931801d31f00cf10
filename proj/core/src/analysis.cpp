#include "cmotzkin/analysis.hpp"

#include <algorithm>

#include "cmotzkin/errors.hpp"

namespace cmotzkin {

std::vector<int> heights(const WorkingSequence& seq, int color) {
  if (color < 1 || color > seq.colors)
    throw invalid_word("color out of range: " + std::to_string(color));
  std::vector<int> out(seq.cells.size(), 0);
  int h = 0;
  for (std::size_t i = 0; i < seq.cells.size(); ++i) {
    const Token& c = seq.cells[i];
    if (c.is_up(color)) ++h;
    else if (c.is_down(color)) --h;
    out[i] = h;
  }
  return out;
}

std::vector<int> heights(const MotzkinWord& path, int color) {
  return heights(WorkingSequence::from_path(path), color);
}

int level_steps(const MotzkinWord& path) {
  int n = 0;
  for (const Token& t : path.steps) n += t.is_level();
  return n;
}

PathClass classify(const MotzkinWord& path) {
  if (path.colors < 1)
    throw invalid_word("classification needs at least one color");
  const int d = path.colors;
  int h = 0;
  bool has_top_up = false;
  for (const Token& t : path.steps) {
    if (t.is_up(d)) ++h, has_top_up = true;
    else if (t.is_down(d)) --h;
    else if (t.is_level() && h > 0) return PathClass::Bar;
  }
  return has_top_up ? PathClass::Hat : PathClass::Lower;
}

const char* to_string(PathClass c) {
  switch (c) {
    case PathClass::Lower: return "lower";
    case PathClass::Hat: return "hat";
    case PathClass::Bar: return "bar";
  }
  return "?";
}

int matching_partner(const MotzkinWord& path, int position) {
  const int n = path.size();
  if (position < 1 || position > n)
    throw invalid_word("position out of range: " + std::to_string(position));
  const Token& probe = path.steps[position - 1];
  if (!probe.is_step() || probe.is_level())
    throw invalid_word("no matching partner at a level step");

  std::vector<std::vector<int>> open(path.colors + 1);
  std::vector<int> partner(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    const Token& t = path.steps[j - 1];
    if (t.kind == CellKind::Up) {
      open[t.value].push_back(j);
    } else if (t.kind == CellKind::Down) {
      if (open[t.value].empty())
        throw invalid_word("unmatched down step at " + std::to_string(j));
      partner[open[t.value].back()] = j;
      partner[j] = open[t.value].back();
      open[t.value].pop_back();
    }
  }
  if (partner[position] == 0)
    throw invalid_word("unmatched step at " + std::to_string(position));
  return partner[position];
}

namespace {

// Positions of Up(color) steps satisfying a height relation at their own
// cell: critical tests h_color == h_{color-1}, exceeding tests
// h_color == h_{color+1} + 1. Counts run over step cells only.
std::vector<int> flagged_up_positions(const WorkingSequence& seq, int color,
                                      bool critical) {
  std::vector<int> out;
  std::vector<int> h(seq.colors + 2, 0);
  for (int j = 1; j <= seq.size(); ++j) {
    const Token& c = seq.at(j);
    if (!c.is_step() || c.is_level()) continue;
    h[c.value] += c.kind == CellKind::Up ? 1 : -1;
    if (!c.is_up(color)) continue;
    if (critical ? h[color] == h[color - 1] : h[color] == h[color + 1] + 1)
      out.push_back(j);
  }
  return out;
}

}  // namespace

std::vector<int> critical_up_steps(const WorkingSequence& seq, int color) {
  if (color < 2 || color > seq.colors)
    throw invalid_word("critical up steps need a color in [2, colors]");
  return flagged_up_positions(seq, color, true);
}

std::vector<int> critical_up_steps(const MotzkinWord& path, int color) {
  return critical_up_steps(WorkingSequence::from_path(path), color);
}

std::vector<int> exceeding_up_steps(const WorkingSequence& seq, int color) {
  if (color < 1 || color >= seq.colors)
    throw invalid_word("exceeding up steps need a color in [1, colors-1]");
  return flagged_up_positions(seq, color, false);
}

std::vector<int> exceeding_up_steps(const MotzkinWord& path, int color) {
  return exceeding_up_steps(WorkingSequence::from_path(path), color);
}

bool check_nesting_properties(const MotzkinWord& path) {
  const int n = path.size();
  // each color's subword must be a parenthesis system
  std::vector<std::vector<int>> open(path.colors + 1);
  std::vector<std::vector<std::pair<int, int>>> pairs(path.colors + 1);
  for (int j = 1; j <= n; ++j) {
    const Token& t = path.steps[j - 1];
    if (t.is_letter()) return false;
    if (t.is_level()) continue;
    if (t.value < 1 || t.value > path.colors) return false;
    if (t.kind == CellKind::Up) {
      open[t.value].push_back(j);
    } else {
      if (open[t.value].empty()) return false;
      pairs[t.value].push_back({open[t.value].back(), j});
      open[t.value].pop_back();
    }
  }
  for (int k = 1; k <= path.colors; ++k)
    if (!open[k].empty()) return false;

  // every matching (k+1)-pair must sit strictly inside a matching k-pair
  for (int k = 1; k + 1 <= path.colors; ++k) {
    for (const auto& [i, j] : pairs[k + 1]) {
      bool nested = false;
      for (const auto& [a, b] : pairs[k])
        if (a < i && j < b) {
          nested = true;
          break;
        }
      if (!nested) return false;
    }
  }
  return true;
}

Partition shape_of(const YamanouchiWord& word) {
  Partition shape;
  for (int v : word.letters) {
    if (v < 1) throw invalid_word("letter below 1");
    if (static_cast<int>(shape.rows.size()) < v) shape.rows.resize(v, 0);
    ++shape.rows[v - 1];
  }
  for (std::size_t i = 1; i < shape.rows.size(); ++i)
    if (shape.rows[i] > shape.rows[i - 1])
      throw invalid_word("letter counts are not weakly decreasing");
  return shape;
}

int odd_columns(const YamanouchiWord& word) {
  const std::vector<int> cols = shape_of(word).conjugate();
  int odd = 0;
  for (int len : cols) odd += len % 2;
  return odd;
}

}  // namespace cmotzkin
