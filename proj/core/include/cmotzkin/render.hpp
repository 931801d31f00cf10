#pragma once

#include <string>

#include "cmotzkin/words.hpp"

namespace cmotzkin {

/// ASCII drawing of a path: '/' '\\' '_' glyphs, one column per step, with
/// the color digit directly above each colored step. Empty path renders as
/// an empty string.
std::string render_path(const MotzkinWord& path);

/// Left-justified rows of cell entries: row i lists the positions holding
/// letter i.
std::string render_tableau(const YamanouchiWord& word);

}  // namespace cmotzkin
