#pragma once

#include <optional>
#include <vector>

#include "cmotzkin/bigint.hpp"
#include "cmotzkin/words.hpp"

namespace cmotzkin {

/// Whether level steps may occur anywhere or only while the innermost
/// coordinate sits on the floor (z_colors == 0).
enum class LevelPolicy { Anywhere, FloorOnly };

/// A point of the walk region z_1 >= z_2 >= ... >= z_d >= 0.
struct WalkState {
  std::vector<int> coords;

  bool valid() const {
    int prev = coords.empty() ? 0 : coords.front();
    for (int z : coords) {
      if (z < 0 || z > prev) return false;
      prev = z;
    }
    return true;
  }
};

/// Pull-based stream of every valid word of the requested length, in
/// lexicographic order of step codes (L < U1 < D1 < U2 < D2 < ...).
/// Backtracking prunes prefixes whose heights cannot return to zero in the
/// remaining length.
class MotzkinGenerator {
 public:
  MotzkinGenerator(int length, int colors);
  std::optional<MotzkinWord> next();

 private:
  bool feasible(int code) const;
  void push(int code);
  void pop();
  bool extend_to_leaf();
  bool backtrack_advance();

  int length_;
  int colors_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> codes_;
  std::vector<int> height_;  // height_[k] for 1 <= k <= colors
  int height_sum_ = 0;
};

/// Pull-based stream of every ballot word of the requested length with
/// letters <= max_rows, lexicographically.
class BallotGenerator {
 public:
  BallotGenerator(int length, int max_rows);
  std::optional<YamanouchiWord> next();

 private:
  bool feasible(int letter) const;
  bool backtrack_advance();

  int length_;
  int max_rows_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> letters_;
  std::vector<int> counts_;  // counts_[v] for 1 <= v <= max_rows
};

std::vector<MotzkinWord> all_motzkin(int length, int colors);
std::vector<YamanouchiWord> all_ballot(int length, int max_rows);

/// Closed lazy walks of the given length at the origin of the region
/// z_1 >= ... >= z_colors >= 0, one coordinate moving by +-1 per step or
/// standing still (FloorOnly restricts stand-stills to z_colors == 0).
/// Equals the number of colored Motzkin words (Anywhere) and the number of
/// tableaux with at most 2*colors rows (FloorOnly).
BigInt count_motzkin_dp(int length, int colors, LevelPolicy policy);

/// Ballot words of the given length with letters <= max_rows, counted by a
/// walk on partitions that adds one cell per step.
BigInt count_syt_dp(int length, int max_rows);

}  // namespace cmotzkin
