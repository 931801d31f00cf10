#pragma once

#include <string>
#include <vector>

#include "cmotzkin/errors.hpp"
#include "cmotzkin/words.hpp"

namespace cmotzkin {

// The conversion rewrites a working sequence step by step. Each iteration
// works at a top color t and falls into one of three kinds:
//
//   Odd   forward: anchor = first level step with h_t > 0; a down chain
//         (b_t, ..., b_1) is located left to right, the anchor becomes
//         Down(t), every marked step loses one color, b_1 becomes the
//         letter 2t+1. Backward undoes the rightmost letter 2t+1.
//   Even  forward: anchor = first Up(t); same chain search; the anchor
//         becomes a level step and b_1 the letter 2t. Backward undoes the
//         rightmost letter 2t.
//   Ones  forward: every remaining level step becomes the letter 1
//         (t == 1 only). Backward turns every letter 1 back into a level.
//
// The chain search for t >= 2 walks right from b_t (the first Down(t) after
// the anchor) looking for the next chain color. Meeting a critical up step
// opens a detour that is closed by the matching down; detour steps are
// marked and later shifted one color down. Critical and exceeding step sets
// are frozen when an iteration starts, never mid-scan. The backward search
// mirrors this right to left with exceeding up steps and shifts marks one
// color up. Iterations at t == 1 need no chain: a single anchor/close pair
// is rewritten.

enum class StepDirection { Forward, Backward };
enum class PhaseKind { Odd, Even, Ones };

struct MarkedPair {
  int up = 0;
  int down = 0;
  int color = 0;  // color before the rewrite

  friend bool operator==(const MarkedPair&, const MarkedPair&) = default;
};

/// Audit trail of one iteration.
struct IterationRecord {
  StepDirection direction = StepDirection::Forward;
  PhaseKind kind = PhaseKind::Ones;
  int top_color = 0;
  int anchor = 0;                     // 0 for Ones records
  std::vector<int> chain;             // forward: (b_t, ..., b_1);
                                      // backward: letter cell, then the
                                      // chain-marked downs in scan order
  std::vector<MarkedPair> pairs;      // detour pairs, in mark order
  int letter = 0;
  std::vector<int> letter_positions;  // single element except for Ones
  WorkingSequence before;
  WorkingSequence after;
};

struct Trace {
  WorkingSequence input;
  std::vector<IterationRecord> records;
  WorkingSequence output;
};

/// The conversion from a colored Motzkin word to the ballot word of a
/// standard Young tableau with at most 2*colors+1 rows. Length is preserved.
/// Throws invalid_word on invalid input.
YamanouchiWord path_to_tableau(const MotzkinWord& path);

/// Inverse conversion. Requires a valid ballot word with max letter at most
/// 2*colors+1. Throws invalid_word on invalid input; algorithm_defect if a
/// required step cannot be found (impossible for valid input).
MotzkinWord tableau_to_path(const YamanouchiWord& word, int colors);

Trace path_to_tableau_trace(const MotzkinWord& path);
Trace tableau_to_path_trace(const YamanouchiWord& word, int colors);

/// Runs a single iteration in place and reports it. Exposed for the
/// verification harness: applying the backward iteration of the same kind
/// and top color to a forward record's `after` must reproduce `before`.
IterationRecord forward_iteration(WorkingSequence& seq, int top_color, PhaseKind kind);
IterationRecord backward_iteration(WorkingSequence& seq, int top_color, PhaseKind kind);

/// Line-oriented log, one record per line.
std::string record_to_text(const IterationRecord& rec);
std::string trace_to_text(const Trace& trace);

}  // namespace cmotzkin
