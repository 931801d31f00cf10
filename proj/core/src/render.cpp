#include "cmotzkin/render.hpp"

#include <algorithm>

#include "cmotzkin/analysis.hpp"

namespace cmotzkin {

// Grid bands are unit strips between integer heights; band b is drawn one
// text row above band b-1. An up step from height y occupies band y, a down
// step to height y occupies band y, a level step at height y draws its '_'
// on the floor of band y. Color digits go directly above their step.
std::string render_path(const MotzkinWord& path) {
  const int n = path.size();
  if (n == 0) return "";

  struct Glyph {
    char ch;
    int band;
    int digit_band;  // -1 when the step carries no color
    int color;
  };
  std::vector<Glyph> glyphs;
  glyphs.reserve(n);
  int y = 0;
  int top = 0;
  for (const Token& t : path.steps) {
    Glyph g{};
    if (t.kind == CellKind::Up) {
      g = {'/', y, y + 1, t.value};
      ++y;
    } else if (t.kind == CellKind::Down) {
      --y;
      g = {'\\', y, y + 1, t.value};
    } else {
      g = {'_', y, -1, 0};
    }
    glyphs.push_back(g);
    top = std::max(top, std::max(g.band, g.digit_band));
  }

  std::vector<std::string> rows(top + 1, std::string(n, ' '));
  for (int j = 0; j < n; ++j) {
    const Glyph& g = glyphs[j];
    rows[g.band][j] = g.ch;
    if (g.digit_band >= 0)
      rows[g.digit_band][j] = static_cast<char>('0' + g.color % 10);
  }

  std::string out;
  for (int b = top; b >= 0; --b) {
    std::string row = rows[b];
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_tableau(const YamanouchiWord& word) {
  const Partition shape = shape_of(word);
  const int n = word.size();
  if (n == 0) return "";
  const int width = static_cast<int>(std::to_string(n).size());

  std::vector<std::vector<int>> rows(shape.rows.size());
  for (int j = 1; j <= n; ++j) rows[word.letters[j - 1] - 1].push_back(j);

  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (int entry : row) {
      std::string cell = std::to_string(entry);
      if (!line.empty()) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace cmotzkin
