#include "cmotzkin/bijection.hpp"

#include <cassert>
#include <sstream>
#include <utility>

#include "cmotzkin/text.hpp"
#include "cmotzkin/validate.hpp"

namespace cmotzkin {

namespace {

// Positions are 1-based; 0 means "not found".

int first_enclosed_level(const WorkingSequence& seq, int t) {
  int h = 0;
  for (int j = 1; j <= seq.size(); ++j) {
    const Token& c = seq.at(j);
    if (c.is_up(t)) ++h;
    else if (c.is_down(t)) --h;
    else if (c.is_level() && h > 0) return j;
  }
  return 0;
}

int first_up(const WorkingSequence& seq, int t) {
  for (int j = 1; j <= seq.size(); ++j)
    if (seq.at(j).is_up(t)) return j;
  return 0;
}

int first_down_after(const WorkingSequence& seq, int pos, int color) {
  for (int j = pos + 1; j <= seq.size(); ++j)
    if (seq.at(j).is_down(color)) return j;
  return 0;
}

int nearest_down_before(const WorkingSequence& seq, int pos, int color) {
  for (int j = pos - 1; j >= 1; --j)
    if (seq.at(j).is_down(color)) return j;
  return 0;
}

int nearest_level_before(const WorkingSequence& seq, int pos) {
  for (int j = pos - 1; j >= 1; --j)
    if (seq.at(j).is_level()) return j;
  return 0;
}

int rightmost_letter(const WorkingSequence& seq, int value) {
  for (int j = seq.size(); j >= 1; --j)
    if (seq.at(j).is_letter(value)) return j;
  return 0;
}

// Per-color flag tables, frozen for one whole iteration. flags[k][j] is set
// when position j holds an Up(k) that is critical (forward) or exceeding
// (backward) in the path-part at iteration start.
std::vector<std::vector<char>> frozen_flags(const WorkingSequence& seq, int t,
                                            bool critical) {
  std::vector<std::vector<char>> flags(t + 1,
                                       std::vector<char>(seq.size() + 1, 0));
  std::vector<int> h(seq.colors + 2, 0);
  for (int j = 1; j <= seq.size(); ++j) {
    const Token& c = seq.at(j);
    if (!c.is_step() || c.is_level()) continue;
    h[c.value] += c.kind == CellKind::Up ? 1 : -1;
    if (c.kind != CellKind::Up || c.value > t) continue;
    const int k = c.value;
    if (critical) {
      if (k >= 2 && h[k] == h[k - 1]) flags[k][j] = 1;
    } else {
      if (k <= t - 1 && h[k] == h[k + 1] + 1) flags[k][j] = 1;
    }
  }
  return flags;
}

[[noreturn]] void defect(const char* what) { throw algorithm_defect(what); }

IterationRecord run_forward(WorkingSequence& seq, int t, PhaseKind kind,
                            bool want_snapshots) {
  IterationRecord rec;
  rec.direction = StepDirection::Forward;
  rec.kind = kind;
  rec.top_color = t;
  if (want_snapshots) rec.before = seq;

  if (kind == PhaseKind::Ones) {
    rec.letter = 1;
    for (int j = 1; j <= seq.size(); ++j)
      if (seq.at(j).is_level()) {
        seq.cells[j - 1] = Token::letter(1);
        rec.letter_positions.push_back(j);
      }
    if (want_snapshots) rec.after = seq;
    return rec;
  }

  const bool odd = kind == PhaseKind::Odd;
  rec.letter = odd ? 2 * t + 1 : 2 * t;
  const int a = odd ? first_enclosed_level(seq, t) : first_up(seq, t);
  if (a == 0) defect("forward iteration has no anchor");
  rec.anchor = a;

  if (t == 1) {
    const int b = first_down_after(seq, a, 1);
    if (b == 0) defect("forward iteration found no closing down step");
    seq.cells[a - 1] = odd ? Token::down(1) : Token::level();
    seq.cells[b - 1] = Token::letter(rec.letter);
    rec.chain = {b};
    rec.letter_positions = {b};
    if (want_snapshots) rec.after = seq;
    return rec;
  }

  const auto critical = frozen_flags(seq, t, true);
  const int b_top = first_down_after(seq, a, t);
  if (b_top == 0) defect("no top-color down step after the anchor");

  std::vector<int> chain{b_top};
  std::vector<int> marked{b_top};
  std::vector<std::pair<int, int>> open;  // detour stack: (up position, color)
  int expected_chain = t - 1;
  int pos = b_top;
  int level = t - 1;  // color currently searched for
  int b_last = 0;

  auto scan_right = [&](auto&& stop) -> int {
    for (int j = pos + 1; j <= seq.size(); ++j) {
      const Token& c = seq.at(j);
      if (c.is_step() && stop(j, c)) return j;
    }
    return 0;
  };

  // Locating a down step either closes the innermost open detour or extends
  // the chain; the scan itself never needs to know which.
  auto close_or_chain = [&](int j, int color) {
    marked.push_back(j);
    if (!open.empty()) {
      assert(open.back().second == color);
      rec.pairs.push_back({open.back().first, j, color});
      open.pop_back();
    } else {
      assert(expected_chain == color);
      (void)expected_chain;
      chain.push_back(j);
      --expected_chain;
    }
  };

  while (b_last == 0) {
    if (level == t - 1) {
      // top segment: a critical Up(t) jumps straight to the next Down(t)
      const int j = scan_right([&](int p, const Token& c) {
        return (c.is_up(t) && critical[t][p]) || c.is_down(t - 1);
      });
      if (j == 0) defect("chain search ran off the end");
      if (seq.at(j).is_up(t)) {
        const int q = first_down_after(seq, j, t);
        if (q == 0) defect("no closing down step for a critical up");
        marked.push_back(j);
        marked.push_back(q);
        rec.pairs.push_back({j, q, t});
        pos = q;
      } else if (t - 1 == 1) {
        b_last = j;
      } else {
        close_or_chain(j, t - 1);
        pos = j;
        level = t - 2;
      }
    } else {
      const int j = scan_right([&](int p, const Token& c) {
        return (c.is_up(level + 1) && critical[level + 1][p]) ||
               c.is_down(level);
      });
      if (j == 0) defect("chain search ran off the end");
      if (seq.at(j).is_up(level + 1)) {
        marked.push_back(j);
        open.push_back({j, level + 1});
        pos = j;
        ++level;
      } else if (level == 1) {
        b_last = j;
      } else {
        close_or_chain(j, level);
        pos = j;
        --level;
      }
    }
  }
  assert(open.empty());
  chain.push_back(b_last);

  seq.cells[a - 1] = odd ? Token::down(t) : Token::level();
  for (int m : marked) {
    Token& c = seq.cells[m - 1];
    assert(c.value >= 2);
    --c.value;  // lose one color
  }
  seq.cells[b_last - 1] = Token::letter(rec.letter);
  rec.chain = std::move(chain);
  rec.letter_positions = {b_last};
  if (want_snapshots) rec.after = seq;
  return rec;
}

IterationRecord run_backward(WorkingSequence& seq, int t, PhaseKind kind,
                             bool want_snapshots) {
  IterationRecord rec;
  rec.direction = StepDirection::Backward;
  rec.kind = kind;
  rec.top_color = t;
  if (want_snapshots) rec.before = seq;

  if (kind == PhaseKind::Ones) {
    rec.letter = 1;
    for (int j = 1; j <= seq.size(); ++j)
      if (seq.at(j).is_letter(1)) {
        seq.cells[j - 1] = Token::level();
        rec.letter_positions.push_back(j);
      }
    if (want_snapshots) rec.after = seq;
    return rec;
  }

  const bool odd = kind == PhaseKind::Odd;
  rec.letter = odd ? 2 * t + 1 : 2 * t;
  const int c = rightmost_letter(seq, rec.letter);
  if (c == 0) defect("backward iteration has no letter to consume");
  rec.letter_positions = {c};

  if (t == 1) {
    const int a = odd ? nearest_down_before(seq, c, 1)
                      : nearest_level_before(seq, c);
    if (a == 0) defect("backward iteration found no opener");
    seq.cells[a - 1] = odd ? Token::level() : Token::up(1);
    seq.cells[c - 1] = Token::down(1);
    rec.anchor = a;
    rec.chain = {c};
    if (want_snapshots) rec.after = seq;
    return rec;
  }

  const auto exceeding = frozen_flags(seq, t, false);
  const Token target = odd ? Token::down(t) : Token::level();

  std::vector<int> chain{c};
  std::vector<int> marked;
  std::vector<std::pair<int, int>> open;  // detour stack: (up position, color)
  int pos = c;
  int anchor = 0;

  auto scan_left = [&](auto&& stop) -> int {
    for (int j = pos - 1; j >= 1; --j) {
      const Token& cell = seq.at(j);
      if (cell.is_step() && stop(j, cell)) return j;
    }
    return 0;
  };

  auto close_or_chain = [&](int j, int color) {
    marked.push_back(j);
    if (!open.empty()) {
      assert(open.back().second == color);
      rec.pairs.push_back({open.back().first, j, color});
      open.pop_back();
    } else {
      chain.push_back(j);
    }
  };

  // An exceeding Up(1) immediately grabs the nearest Down(1) on its left;
  // the interrupted scan then resumes to the left of that down step.
  auto detour_at = [&](int j, int color) {
    marked.push_back(j);
    open.push_back({j, color});
    pos = j;
    if (color == 1) {
      const int q = nearest_down_before(seq, pos, 1);
      if (q == 0) defect("no down step left of an exceeding up");
      close_or_chain(q, 1);
      pos = q;
      return false;  // resume the interrupted scan
    }
    return true;  // switch to searching Down(color)
  };

  // the chain opens with the nearest Down(1) left of the letter cell
  {
    const int q1 = nearest_down_before(seq, c, 1);
    if (q1 == 0) defect("no down step left of the letter cell");
    close_or_chain(q1, 1);
    pos = q1;
  }

  enum class State { Mid, Target } state =
      t == 2 ? State::Target : State::Mid;
  int level = 2;  // color currently searched for while in Mid

  while (anchor == 0) {
    if (state == State::Mid) {
      const int j = scan_left([&](int p, const Token& cell) {
        return (cell.is_up(level - 1) && exceeding[level - 1][p]) ||
               cell.is_down(level);
      });
      if (j == 0) defect("backward chain search ran off the start");
      if (seq.at(j).is_up(level - 1)) {
        if (detour_at(j, level - 1)) --level;
      } else {
        close_or_chain(j, level);
        pos = j;
        if (level == t - 1) state = State::Target;
        else ++level;
      }
    } else {
      const int j = scan_left([&](int p, const Token& cell) {
        return (cell.is_up(t - 1) && exceeding[t - 1][p]) || cell == target;
      });
      if (j == 0) defect("backward scan found no anchor");
      if (seq.at(j) == target) {
        anchor = j;
      } else if (detour_at(j, t - 1)) {
        level = t - 1;
        state = State::Mid;
      }
    }
  }
  assert(open.empty());

  seq.cells[anchor - 1] = odd ? Token::level() : Token::up(t);
  for (int m : marked) {
    Token& cell = seq.cells[m - 1];
    assert(cell.value >= 1 && cell.value <= t - 1);
    ++cell.value;  // gain one color
  }
  seq.cells[c - 1] = Token::down(1);
  rec.anchor = anchor;
  rec.chain = std::move(chain);
  if (want_snapshots) rec.after = seq;
  return rec;
}

void convert_forward(WorkingSequence& seq,
                     std::vector<IterationRecord>* records) {
  const bool snaps = records != nullptr;
  auto run = [&](int t, PhaseKind kind) {
    IterationRecord rec = run_forward(seq, t, kind, snaps);
    if (records) records->push_back(std::move(rec));
  };
  for (int t = seq.colors; t >= 1; --t) {
    while (first_enclosed_level(seq, t) != 0) run(t, PhaseKind::Odd);
    while (first_up(seq, t) != 0) run(t, PhaseKind::Even);
  }
  run(1, PhaseKind::Ones);
}

void convert_backward(WorkingSequence& seq,
                      std::vector<IterationRecord>* records) {
  const bool snaps = records != nullptr;
  auto run = [&](int t, PhaseKind kind) {
    IterationRecord rec = run_backward(seq, t, kind, snaps);
    if (records) records->push_back(std::move(rec));
  };
  run(1, PhaseKind::Ones);
  for (int t = 1; t <= seq.colors; ++t) {
    while (rightmost_letter(seq, 2 * t) != 0) run(t, PhaseKind::Even);
    while (rightmost_letter(seq, 2 * t + 1) != 0) run(t, PhaseKind::Odd);
  }
}

void require_valid_path(const MotzkinWord& path) {
  const ValidationReport report = validate_motzkin(path);
  if (!report.ok)
    throw invalid_word("not a valid Motzkin word: " + report.render());
}

void require_valid_word(const YamanouchiWord& word, int colors) {
  if (colors < 0) throw invalid_word("negative color bound");
  const ValidationReport report =
      validate_yamanouchi(word.letters, word.max_rows);
  if (!report.ok)
    throw invalid_word("not a valid ballot word: " + report.render());
  if (word.max_letter() > 2 * colors + 1)
    throw invalid_word("word needs more than " + std::to_string(2 * colors + 1) +
                       " rows");
}

}  // namespace

YamanouchiWord path_to_tableau(const MotzkinWord& path) {
  require_valid_path(path);
  WorkingSequence seq = WorkingSequence::from_path(path);
  convert_forward(seq, nullptr);
  return seq.to_word(2 * path.colors + 1);
}

MotzkinWord tableau_to_path(const YamanouchiWord& word, int colors) {
  require_valid_word(word, colors);
  WorkingSequence seq = WorkingSequence::from_word(word, colors);
  convert_backward(seq, nullptr);
  if (!seq.all_steps()) defect("letters left after the backward conversion");
  return seq.path_part();
}

Trace path_to_tableau_trace(const MotzkinWord& path) {
  require_valid_path(path);
  Trace trace;
  trace.input = WorkingSequence::from_path(path);
  WorkingSequence seq = trace.input;
  convert_forward(seq, &trace.records);
  trace.output = std::move(seq);
  return trace;
}

Trace tableau_to_path_trace(const YamanouchiWord& word, int colors) {
  require_valid_word(word, colors);
  Trace trace;
  trace.input = WorkingSequence::from_word(word, colors);
  WorkingSequence seq = trace.input;
  convert_backward(seq, &trace.records);
  trace.output = std::move(seq);
  return trace;
}

IterationRecord forward_iteration(WorkingSequence& seq, int top_color,
                                  PhaseKind kind) {
  return run_forward(seq, top_color, kind, true);
}

IterationRecord backward_iteration(WorkingSequence& seq, int top_color,
                                   PhaseKind kind) {
  return run_backward(seq, top_color, kind, true);
}

namespace {

const char* kind_name(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::Odd: return "odd";
    case PhaseKind::Even: return "even";
    case PhaseKind::Ones: return "ones";
  }
  return "?";
}

void append_positions(std::ostream& os, const std::vector<int>& ps) {
  if (ps.empty()) {
    os << '-';
    return;
  }
  for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << ps[i];
}

}  // namespace

std::string record_to_text(const IterationRecord& rec) {
  std::ostringstream os;
  os << (rec.direction == StepDirection::Forward ? "fwd" : "bwd");
  os << " t=" << rec.top_color << ' ' << kind_name(rec.kind);
  os << " anchor=";
  if (rec.anchor) os << rec.anchor;
  else os << '-';
  os << " chain=";
  append_positions(os, rec.chain);
  os << " pairs=";
  if (rec.pairs.empty()) {
    os << '-';
  } else {
    for (std::size_t i = 0; i < rec.pairs.size(); ++i) {
      if (i) os << ',';
      os << rec.pairs[i].up << ':' << rec.pairs[i].down << ':'
         << rec.pairs[i].color;
    }
  }
  os << " letter=" << rec.letter << " pos=";
  append_positions(os, rec.letter_positions);
  return os.str();
}

std::string trace_to_text(const Trace& trace) {
  std::string out;
  for (const IterationRecord& rec : trace.records) {
    out += record_to_text(rec);
    out += '\n';
  }
  return out;
}

}  // namespace cmotzkin
