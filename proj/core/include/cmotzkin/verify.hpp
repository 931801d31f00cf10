#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmotzkin {

struct CheckResult {
  std::string name;
  std::string range;
  std::uint64_t instances = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;  // first few counterexamples
  double seconds = 0.0;

  bool passed() const { return failure_count == 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::uint64_t total_instances() const;
  const CheckResult* find(const std::string& name) const;

  /// Aligned text table, one row per check.
  std::string render_table() const;
  /// key=value lines for machine consumption.
  std::string render_kv() const;
};

/// Largest n enumerated exhaustively per color bound; keeps a full run under
/// a couple of minutes. DP and formula checks are not capped by this.
int enumeration_cap(int colors);

/// Exhaustively certifies, for every d <= d_max and n <= min(n_max, cap(d)):
/// the image of the conversion is exactly the ballot words with letters
/// <= 2d+1, both roundtrips are the identity, the class split matches the
/// max letter (Bar <-> 2d+1, Hat <-> 2d, Lower <-> at most 2d-1), and every
/// trace is structurally sound (valid intermediate path parts, one-step
/// backward inversion, chain and detour-pair nesting).
VerifyReport verify_bijection(int n_max, int d_max);

/// level_steps(path) == odd_columns(image) on every enumerated path.
VerifyReport verify_statistic(int n_max, int d_max);

/// Within every forward trace, the positions that receive the letter 2t+1
/// strictly increase across iterations, and likewise for 2t, at every level t.
VerifyReport verify_monotonicity(int n_max, int d_max);

/// Count agreement: generators vs DP, octant walks vs tableau DP, floor
/// walks vs even row bounds (also recounted through the class filter),
/// closed formulas vs DP, and monotonicity/stabilization in the bound.
VerifyReport verify_counts(int n_max, int d_max);

VerifyReport verify_all(int n_max, int d_max);

}  // namespace cmotzkin
