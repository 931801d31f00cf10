#include "cmotzkin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

#include "cmotzkin/analysis.hpp"
#include "cmotzkin/bijection.hpp"
#include "cmotzkin/enumerate.hpp"
#include "cmotzkin/formulas.hpp"
#include "cmotzkin/text.hpp"
#include "cmotzkin/validate.hpp"

namespace cmotzkin {

namespace {

constexpr std::size_t kMaxCounterexamples = 3;

class Stopwatch {
 public:
  void start() { t0_ = std::chrono::steady_clock::now(); }
  void stop(CheckResult& check) {
    const auto t1 = std::chrono::steady_clock::now();
    check.seconds += std::chrono::duration<double>(t1 - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

CheckResult make_check(std::string name, std::string range) {
  CheckResult check;
  check.name = std::move(name);
  check.range = std::move(range);
  return check;
}

void fail(CheckResult& check, std::string detail) {
  ++check.failure_count;
  if (check.failures.size() < kMaxCounterexamples)
    check.failures.push_back(std::move(detail));
}

std::string range_str(int d, int n) {
  return "d=" + std::to_string(d) + " n<=" + std::to_string(n);
}

std::string instance_tag(int d, const MotzkinWord& path) {
  return "d=" + std::to_string(d) + " path=[" + format_path(path) + "]";
}

// Forward-record structure: ascending chain behind the anchor, and every
// detour pair either sits at its segment's base color or nests inside a
// marked pair one color down.
bool record_structure_ok(const IterationRecord& rec, std::string* why) {
  if (rec.kind == PhaseKind::Ones) return true;
  const int t = rec.top_color;
  if (static_cast<int>(rec.chain.size()) != t) {
    *why = "chain length";
    return false;
  }
  int prev = rec.anchor;
  for (int p : rec.chain) {
    if (p <= prev) {
      *why = "chain not increasing";
      return false;
    }
    prev = p;
  }
  if (t < 2) return true;
  for (const MarkedPair& pair : rec.pairs) {
    if (!(pair.up < pair.down)) {
      *why = "pair order";
      return false;
    }
    // segment index: chain[i] = b_{t-i}; the pair lives between two
    // consecutive chain positions and its base color is the left one's color
    int base = 0;
    for (int i = 0; i + 1 < static_cast<int>(rec.chain.size()); ++i)
      if (rec.chain[i] < pair.up && pair.down < rec.chain[i + 1]) base = t - i;
    if (base == 0) {
      *why = "pair straddles the chain";
      return false;
    }
    if (pair.color < base || pair.color > t) {
      *why = "pair color outside its segment";
      return false;
    }
    if (pair.color > base) {
      bool nested = false;
      for (const MarkedPair& outer : rec.pairs)
        if (outer.color == pair.color - 1 && outer.up < pair.up &&
            pair.down < outer.down)
          nested = true;
      if (!nested) {
        *why = "pair not nested one color down";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed()) return false;
  return true;
}

std::uint64_t VerifyReport::total_instances() const {
  std::uint64_t total = 0;
  for (const CheckResult& c : checks) total += c.instances;
  return total;
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerifyReport::render_table() const {
  std::size_t name_w = 5, range_w = 5;
  for (const CheckResult& c : checks) {
    name_w = std::max(name_w, c.name.size());
    range_w = std::max(range_w, c.range.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_w)) << "check" << "  "
     << std::setw(static_cast<int>(range_w)) << "range" << "  "
     << std::right << std::setw(10) << "instances" << "  " << std::setw(8)
     << "failures" << "  " << std::setw(8) << "seconds" << '\n';
  for (const CheckResult& c : checks) {
    os << std::left << std::setw(static_cast<int>(name_w)) << c.name << "  "
       << std::setw(static_cast<int>(range_w)) << c.range << "  "
       << std::right << std::setw(10) << c.instances << "  " << std::setw(8)
       << c.failure_count << "  " << std::setw(8) << std::fixed
       << std::setprecision(2) << c.seconds << '\n';
    for (const std::string& f : c.failures) os << "    counterexample: " << f << '\n';
  }
  return os.str();
}

std::string VerifyReport::render_kv() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    std::string range = c.range;
    std::replace(range.begin(), range.end(), ' ', ',');
    os << "check=" << c.name << " range=" << range
       << " instances=" << c.instances << " failures=" << c.failure_count
       << " seconds=" << std::fixed << std::setprecision(3) << c.seconds
       << '\n';
    for (const std::string& f : c.failures) {
      std::string detail = f;
      std::replace(detail.begin(), detail.end(), ' ', ',');
      os << "counterexample check=" << c.name << " detail=" << detail << '\n';
    }
  }
  return os.str();
}

int enumeration_cap(int colors) {
  switch (colors) {
    case 0:
    case 1:
      return 14;
    case 2:
      return 10;
    case 3:
      return 8;
    case 4:
      return 7;
    default:
      return 6;
  }
}

VerifyReport verify_bijection(int n_max, int d_max) {
  VerifyReport report;
  for (int d = 1; d <= d_max; ++d) {
    const int cap = std::min(n_max, enumeration_cap(d));
    const std::string range = range_str(d, cap);
    CheckResult image = make_check("bijection-image", range);
    CheckResult roundtrip = make_check("bijection-roundtrip", range);
    CheckResult classes = make_check("class-refinement", range);
    CheckResult validity = make_check("trace-intermediate-validity", range);
    CheckResult inversion = make_check("single-iteration-inversion", range);
    CheckResult structure = make_check("trace-structure", range);
    Stopwatch watch;

    for (int n = 0; n <= cap; ++n) {
      std::vector<std::string> expected;
      {
        BallotGenerator gen(n, 2 * d + 1);
        while (auto word = gen.next())
          expected.push_back(format_word(*word));
      }
      std::vector<std::string> images;
      images.reserve(expected.size());

      MotzkinGenerator gen(n, d);
      while (auto path = gen.next()) {
        watch.start();
        const Trace trace = path_to_tableau_trace(*path);
        YamanouchiWord word = trace.output.to_word(2 * d + 1);
        ++image.instances;
        if (!validate_yamanouchi(word).ok)
          fail(image, instance_tag(d, *path) + " image is not a ballot word");
        images.push_back(format_word(word));
        watch.stop(image);

        watch.start();
        ++roundtrip.instances;
        const MotzkinWord back = tableau_to_path(word, d);
        if (!(back == *path))
          fail(roundtrip, instance_tag(d, *path) + " came back as [" +
                              format_path(back) + "]");
        watch.stop(roundtrip);

        watch.start();
        ++classes.instances;
        const PathClass cls = classify(*path);
        const int m = word.max_letter();
        const bool class_ok = (cls == PathClass::Bar && m == 2 * d + 1) ||
                              (cls == PathClass::Hat && m == 2 * d) ||
                              (cls == PathClass::Lower && m <= 2 * d - 1);
        if (!class_ok)
          fail(classes, instance_tag(d, *path) + " class " +
                            to_string(cls) + " vs max letter " +
                            std::to_string(m));
        watch.stop(classes);

        watch.start();
        const WorkingSequence* prev = &trace.input;
        for (const IterationRecord& rec : trace.records) {
          ++validity.instances;
          if (!(rec.before == *prev))
            fail(validity, instance_tag(d, *path) + " snapshots do not chain");
          if (!validate_motzkin(rec.after.path_part()).ok)
            fail(validity, instance_tag(d, *path) +
                               " invalid path part after an iteration");
          prev = &rec.after;
        }
        if (!(*prev == trace.output))
          fail(validity, instance_tag(d, *path) + " trace output detached");
        watch.stop(validity);

        watch.start();
        for (const IterationRecord& rec : trace.records) {
          ++inversion.instances;
          WorkingSequence undone = rec.after;
          backward_iteration(undone, rec.top_color, rec.kind);
          if (!(undone == rec.before))
            fail(inversion,
                 instance_tag(d, *path) + " one backward step missed: " +
                     record_to_text(rec));
        }
        watch.stop(inversion);

        watch.start();
        for (const IterationRecord& rec : trace.records) {
          if (rec.direction != StepDirection::Forward) continue;
          ++structure.instances;
          std::string why;
          if (!record_structure_ok(rec, &why))
            fail(structure, instance_tag(d, *path) + " " + why + ": " +
                                record_to_text(rec));
        }
        watch.stop(structure);
      }

      watch.start();
      std::sort(images.begin(), images.end());
      std::sort(expected.begin(), expected.end());
      if (images != expected) {
        std::string detail = "d=" + std::to_string(d) +
                             " n=" + std::to_string(n) + " image has " +
                             std::to_string(images.size()) + " words, family has " +
                             std::to_string(expected.size());
        for (std::size_t i = 0; i < images.size() && i < expected.size(); ++i)
          if (images[i] != expected[i]) {
            detail += "; first mismatch [" + images[i] + "] vs [" +
                      expected[i] + "]";
            break;
          }
        fail(image, detail);
      }
      watch.stop(image);

      // reverse roundtrip, word side
      watch.start();
      BallotGenerator words(n, 2 * d + 1);
      while (auto word = words.next()) {
        ++roundtrip.instances;
        const MotzkinWord path = tableau_to_path(*word, d);
        if (!validate_motzkin(path).ok)
          fail(roundtrip, "d=" + std::to_string(d) + " word=[" +
                              format_word(*word) + "] preimage invalid");
        const YamanouchiWord again = path_to_tableau(path);
        if (!(again == *word))
          fail(roundtrip, "d=" + std::to_string(d) + " word=[" +
                              format_word(*word) + "] came back as [" +
                              format_word(again) + "]");
      }
      watch.stop(roundtrip);
    }

    report.checks.push_back(std::move(image));
    report.checks.push_back(std::move(roundtrip));
    report.checks.push_back(std::move(classes));
    report.checks.push_back(std::move(validity));
    report.checks.push_back(std::move(inversion));
    report.checks.push_back(std::move(structure));
  }
  return report;
}

VerifyReport verify_statistic(int n_max, int d_max) {
  VerifyReport report;
  for (int d = 1; d <= d_max; ++d) {
    const int cap = std::min(n_max, enumeration_cap(d));
    CheckResult check = make_check("level-steps-vs-odd-columns", range_str(d, cap));
    Stopwatch watch;
    watch.start();
    for (int n = 0; n <= cap; ++n) {
      MotzkinGenerator gen(n, d);
      while (auto path = gen.next()) {
        ++check.instances;
        const int levels = level_steps(*path);
        const int odd = odd_columns(path_to_tableau(*path));
        if (levels != odd)
          fail(check, instance_tag(d, *path) + " has " +
                          std::to_string(levels) + " level steps but " +
                          std::to_string(odd) + " odd columns");
      }
    }
    watch.stop(check);
    report.checks.push_back(std::move(check));
  }
  return report;
}

VerifyReport verify_monotonicity(int n_max, int d_max) {
  VerifyReport report;
  for (int d = 1; d <= d_max; ++d) {
    const int cap = std::min(n_max, enumeration_cap(d));
    CheckResult check = make_check("letter-position-monotonicity", range_str(d, cap));
    Stopwatch watch;
    watch.start();
    for (int n = 0; n <= cap; ++n) {
      MotzkinGenerator gen(n, d);
      while (auto path = gen.next()) {
        ++check.instances;
        const Trace trace = path_to_tableau_trace(*path);
        std::map<std::pair<int, int>, int> last;
        for (const IterationRecord& rec : trace.records) {
          if (rec.kind == PhaseKind::Ones) continue;
          const auto key = std::make_pair(rec.top_color,
                                          rec.kind == PhaseKind::Odd ? 1 : 0);
          const int pos = rec.letter_positions.front();
          auto [it, inserted] = last.try_emplace(key, pos);
          if (!inserted) {
            if (pos <= it->second) {
              fail(check, instance_tag(d, *path) + " letter " +
                              std::to_string(rec.letter) + " at " +
                              std::to_string(pos) + " after " +
                              std::to_string(it->second));
            }
            it->second = pos;
          }
        }
      }
    }
    watch.stop(check);
    report.checks.push_back(std::move(check));
  }
  return report;
}

VerifyReport verify_counts(int n_max, int d_max) {
  VerifyReport report;

  // generators against the walk DPs
  for (int d = 0; d <= std::min(d_max, 3); ++d) {
    const int cap = std::min({n_max, enumeration_cap(d), 10});
    CheckResult check = make_check("generator-vs-dp", range_str(d, cap));
    Stopwatch watch;
    watch.start();
    for (int n = 0; n <= cap; ++n) {
      ++check.instances;
      BigInt listed = 0;
      MotzkinGenerator gen(n, d);
      while (gen.next()) ++listed;
      const BigInt counted = count_motzkin_dp(n, d, LevelPolicy::Anywhere);
      if (listed != counted)
        fail(check, "paths d=" + std::to_string(d) + " n=" + std::to_string(n) +
                        ": " + listed.str() + " listed vs " + counted.str());
      ++check.instances;
      BigInt words = 0;
      BallotGenerator ballot(n, 2 * d + 1);
      while (ballot.next()) ++words;
      const BigInt tableaux = count_syt_dp(n, 2 * d + 1);
      if (words != tableaux)
        fail(check, "words rows=" + std::to_string(2 * d + 1) +
                        " n=" + std::to_string(n) + ": " + words.str() +
                        " listed vs " + tableaux.str());
    }
    watch.stop(check);
    report.checks.push_back(std::move(check));
  }

  // the two walk models agree with the tableau DP
  {
    const int cap = std::min(n_max, 12);
    CheckResult octant = make_check("octant-walk-vs-syt-dp", "d<=" + std::to_string(d_max) + " n<=" + std::to_string(cap));
    CheckResult floor = make_check("floor-walk-vs-syt-dp", "d<=" + std::to_string(d_max) + " n<=" + std::to_string(cap));
    Stopwatch watch;
    watch.start();
    for (int d = 1; d <= d_max; ++d)
      for (int n = 0; n <= cap; ++n) {
        ++octant.instances;
        const BigInt walks = count_motzkin_dp(n, d, LevelPolicy::Anywhere);
        const BigInt odd_rows = count_syt_dp(n, 2 * d + 1);
        if (walks != odd_rows)
          fail(octant, "d=" + std::to_string(d) + " n=" + std::to_string(n) +
                           ": " + walks.str() + " vs " + odd_rows.str());
        ++floor.instances;
        const BigInt floored = count_motzkin_dp(n, d, LevelPolicy::FloorOnly);
        const BigInt even_rows = count_syt_dp(n, 2 * d);
        if (floored != even_rows)
          fail(floor, "d=" + std::to_string(d) + " n=" + std::to_string(n) +
                          ": " + floored.str() + " vs " + even_rows.str());
      }
    watch.stop(octant);
    floor.seconds = octant.seconds;
    report.checks.push_back(std::move(octant));
    report.checks.push_back(std::move(floor));
  }

  // floor walks recounted through the class filter
  for (int d = 1; d <= std::min(d_max, 3); ++d) {
    const int cap = std::min({n_max, enumeration_cap(d), 10});
    CheckResult check = make_check("floor-walk-vs-class-filter", range_str(d, cap));
    Stopwatch watch;
    watch.start();
    for (int n = 0; n <= cap; ++n) {
      ++check.instances;
      BigInt unenclosed = 0;
      MotzkinGenerator gen(n, d);
      while (auto path = gen.next())
        if (classify(*path) != PathClass::Bar) ++unenclosed;
      const BigInt floored = count_motzkin_dp(n, d, LevelPolicy::FloorOnly);
      if (unenclosed != floored)
        fail(check, "d=" + std::to_string(d) + " n=" + std::to_string(n) +
                        ": " + unenclosed.str() + " vs " + floored.str());
    }
    watch.stop(check);
    report.checks.push_back(std::move(check));
  }

  // closed formulas against the tableau DP
  for (int rows = 2; rows <= 5; ++rows) {
    const int cap = std::min(n_max, 40);
    CheckResult check = make_check("formula-vs-dp", "rows=" + std::to_string(rows) + " n<=" + std::to_string(cap));
    Stopwatch watch;
    watch.start();
    for (int n = 0; n <= cap; ++n) {
      ++check.instances;
      const BigInt formula = syt_count_formula(n, rows);
      const BigInt counted = count_syt_dp(n, rows);
      if (formula != counted)
        fail(check, "rows=" + std::to_string(rows) + " n=" + std::to_string(n) +
                        ": formula " + formula.str() + " vs dp " + counted.str());
    }
    watch.stop(check);
    report.checks.push_back(std::move(check));
  }

  // the three-row closed form lists Motzkin numbers
  {
    const int cap = std::min(n_max, 40);
    CheckResult check = make_check("motzkin-number-formula", "n<=" + std::to_string(cap));
    Stopwatch watch;
    watch.start();
    for (int n = 0; n <= cap; ++n) {
      ++check.instances;
      const BigInt walks = count_motzkin_dp(n, 1, LevelPolicy::Anywhere);
      const BigInt formula = syt_count_formula(n, 3);
      if (walks != formula)
        fail(check, "n=" + std::to_string(n) + ": " + walks.str() + " vs " +
                        formula.str());
    }
    watch.stop(check);
    report.checks.push_back(std::move(check));
  }

  // counts weakly increase with the bound and stabilize at the full count
  {
    const int cap = std::min(n_max, 12);
    CheckResult check = make_check("count-monotonicity", "n<=" + std::to_string(cap));
    Stopwatch watch;
    watch.start();
    for (int n = 0; n <= cap; ++n) {
      BigInt prev_paths = -1, prev_words = -1;
      for (int d = 0; d <= std::max(d_max, (n + 1) / 2); ++d) {
        ++check.instances;
        const BigInt paths = count_motzkin_dp(n, d, LevelPolicy::Anywhere);
        if (prev_paths >= 0 && paths < prev_paths)
          fail(check, "paths shrank at d=" + std::to_string(d) +
                          " n=" + std::to_string(n));
        prev_paths = paths;
      }
      for (int rows = 1; rows <= n + 1; ++rows) {
        ++check.instances;
        const BigInt words = count_syt_dp(n, rows);
        if (prev_words >= 0 && words < prev_words)
          fail(check, "words shrank at rows=" + std::to_string(rows) +
                          " n=" + std::to_string(n));
        prev_words = words;
      }
      // once the row bound clears n, both sides count every tableau
      ++check.instances;
      const int d_full = (n + 1) / 2;  // 2*d_full + 1 >= n
      if (count_motzkin_dp(n, d_full, LevelPolicy::Anywhere) !=
          count_syt_dp(n, std::max(n, 1)))
        fail(check, "stabilized counts disagree at n=" + std::to_string(n));
    }
    watch.stop(check);
    report.checks.push_back(std::move(check));
  }

  return report;
}

VerifyReport verify_all(int n_max, int d_max) {
  VerifyReport report = verify_bijection(n_max, d_max);
  for (auto& part : {verify_statistic(n_max, d_max),
                     verify_monotonicity(n_max, d_max),
                     verify_counts(n_max, d_max)})
    for (const CheckResult& check : part.checks)
      report.checks.push_back(check);
  return report;
}

}  // namespace cmotzkin
