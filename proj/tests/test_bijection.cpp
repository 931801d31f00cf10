#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "cmotzkin/analysis.hpp"
#include "cmotzkin/bijection.hpp"
#include "cmotzkin/enumerate.hpp"
#include "cmotzkin/errors.hpp"
#include "cmotzkin/text.hpp"
#include "cmotzkin/validate.hpp"

#include "fixtures.hpp"

using namespace cmotzkin;

namespace {

MotzkinWord path_of(const char* text, int colors) {
  return parse_path(text, colors);
}

YamanouchiWord word_of(const char* text, int max_rows) {
  return parse_word(text, max_rows);
}

}  // namespace

TEST_CASE("one-color worked instance, both ways") {
  const MotzkinWord path = path_of(fixtures::kSmallPath, 1);
  const YamanouchiWord word = path_to_tableau(path);
  CHECK(format_word(word) == fixtures::kSmallWord);
  CHECK(tableau_to_path(word_of(fixtures::kSmallWord, 3), 1) == path);
}

TEST_CASE("one-color worked instance, iteration by iteration") {
  const Trace trace = path_to_tableau_trace(path_of(fixtures::kSmallPath, 1));
  REQUIRE(trace.records.size() == 8);

  // two odd iterations: anchors 3 then 5, letters 3 at 4 then 7
  CHECK(trace.records[0].kind == PhaseKind::Odd);
  CHECK(trace.records[0].anchor == 3);
  CHECK(trace.records[0].chain == std::vector<int>{4});
  CHECK(trace.records[1].anchor == 5);
  CHECK(trace.records[1].chain == std::vector<int>{7});

  // five even iterations in anchor order 1, 2, 6, 9, 10
  const std::vector<std::pair<int, int>> expected{
      {1, 3}, {2, 5}, {6, 8}, {9, 11}, {10, 12}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const IterationRecord& rec = trace.records[2 + i];
    CHECK(rec.kind == PhaseKind::Even);
    CHECK(rec.anchor == expected[i].first);
    CHECK(rec.chain == std::vector<int>{expected[i].second});
  }

  CHECK(trace.records.back().kind == PhaseKind::Ones);
  CHECK(trace.records.back().letter_positions ==
        std::vector<int>{1, 2, 6, 9, 10});
}

TEST_CASE("one-color backward trace mirrors the forward pairs") {
  const Trace trace =
      tableau_to_path_trace(word_of(fixtures::kSmallWord, 3), 1);
  REQUIRE(trace.records.size() == 8);
  CHECK(trace.records[0].kind == PhaseKind::Ones);
  // letters 2 consumed right to left: 12, 11, 8, 5, 3
  const std::vector<std::pair<int, int>> evens{
      {10, 12}, {9, 11}, {6, 8}, {2, 5}, {1, 3}};
  for (std::size_t i = 0; i < evens.size(); ++i) {
    const IterationRecord& rec = trace.records[1 + i];
    CHECK(rec.kind == PhaseKind::Even);
    CHECK(rec.anchor == evens[i].first);
    CHECK(rec.chain == std::vector<int>{evens[i].second});
  }
  // letters 3: cell 7 pairs with 5, then cell 4 with 3
  CHECK(trace.records[6].kind == PhaseKind::Odd);
  CHECK(trace.records[6].anchor == 5);
  CHECK(trace.records[6].chain == std::vector<int>{7});
  CHECK(trace.records[7].anchor == 3);
  CHECK(trace.records[7].chain == std::vector<int>{4});
  CHECK(format_path(trace.output.path_part()) == fixtures::kSmallPath);
}

TEST_CASE("two-color worked instance, both ways") {
  const MotzkinWord path = path_of(fixtures::kTwoColorPath, 2);
  CHECK(format_word(path_to_tableau(path)) == fixtures::kTwoColorWord);
  CHECK(tableau_to_path(word_of(fixtures::kTwoColorWord, 5), 2) == path);
}

TEST_CASE("two-color forward trace: anchors, chains, detour pairs") {
  const Trace trace =
      path_to_tableau_trace(path_of(fixtures::kTwoColorPath, 2));
  REQUIRE(trace.records.size() == 11);

  const IterationRecord& odd = trace.records[0];
  CHECK(odd.kind == PhaseKind::Odd);
  CHECK(odd.top_color == 2);
  CHECK(odd.anchor == 7);
  CHECK(odd.chain == std::vector<int>{8, 13});
  REQUIRE(odd.pairs.size() == 1);
  CHECK(odd.pairs[0] == MarkedPair{11, 12, 2});
  CHECK(odd.letter == 5);
  CHECK(odd.letter_positions == std::vector<int>{13});

  const IterationRecord& even1 = trace.records[1];
  CHECK(even1.kind == PhaseKind::Even);
  CHECK(even1.anchor == 3);
  CHECK(even1.chain == std::vector<int>{4, 8});
  REQUIRE(even1.pairs.size() == 1);
  CHECK(even1.pairs[0] == MarkedPair{6, 7, 2});
  CHECK(even1.letter_positions == std::vector<int>{8});

  const IterationRecord& even2 = trace.records[2];
  CHECK(even2.anchor == 5);
  CHECK(even2.chain == std::vector<int>{9, 15});
  REQUIRE(even2.pairs.size() == 1);
  CHECK(even2.pairs[0] == MarkedPair{10, 14, 2});
  CHECK(even2.letter_positions == std::vector<int>{15});

  // letters 4 then appear left to right: 8 before 15
  CHECK(even1.letter_positions.front() < even2.letter_positions.front());

  // the remaining one-color phase works on the flattened sequence
  CHECK(trace.records[3].top_color == 1);
  CHECK(format_word(trace.output.to_word(5)) == fixtures::kTwoColorWord);
}

TEST_CASE("two-color backward trace recovers the named cells") {
  const Trace trace =
      tableau_to_path_trace(word_of(fixtures::kTwoColorWord, 5), 2);

  std::vector<const IterationRecord*> evens, odds;
  for (const IterationRecord& rec : trace.records) {
    if (rec.top_color != 2) continue;
    (rec.kind == PhaseKind::Even ? evens : odds).push_back(&rec);
  }
  REQUIRE(evens.size() == 2);
  REQUIRE(odds.size() == 1);

  // rightmost letter 4 first: cell 15, marked run (14, 10, 9), anchor 5
  CHECK(evens[0]->letter_positions == std::vector<int>{15});
  CHECK(evens[0]->anchor == 5);
  CHECK(evens[0]->chain == std::vector<int>{15, 14});
  REQUIRE(evens[0]->pairs.size() == 1);
  CHECK(evens[0]->pairs[0] == MarkedPair{10, 9, 1});

  CHECK(evens[1]->letter_positions == std::vector<int>{8});
  CHECK(evens[1]->anchor == 3);
  CHECK(evens[1]->chain == std::vector<int>{8, 7});
  REQUIRE(evens[1]->pairs.size() == 1);
  CHECK(evens[1]->pairs[0] == MarkedPair{6, 4, 1});

  // the letter 5 ends at the two-color down step, cell 7
  CHECK(odds[0]->letter_positions == std::vector<int>{13});
  CHECK(odds[0]->anchor == 7);
  CHECK(odds[0]->chain == std::vector<int>{13, 12});
  REQUIRE(odds[0]->pairs.size() == 1);
  CHECK(odds[0]->pairs[0] == MarkedPair{11, 8, 1});

  CHECK(format_path(trace.output.path_part()) == fixtures::kTwoColorPath);
}

TEST_CASE("three-color worked instance") {
  const MotzkinWord path = path_of(fixtures::kThreeColorPath, 3);
  REQUIRE(validate_motzkin(path).ok);

  const Trace trace = path_to_tableau_trace(path);
  const IterationRecord& first = trace.records.front();
  CHECK(first.kind == PhaseKind::Odd);
  CHECK(first.top_color == 3);
  CHECK(first.anchor == 6);
  CHECK(first.chain == std::vector<int>{8, 12, 23});
  REQUIRE(first.pairs.size() == 4);
  CHECK(first.pairs[0] == MarkedPair{9, 11, 3});
  CHECK(first.pairs[1] == MarkedPair{15, 17, 3});
  CHECK(first.pairs[2] == MarkedPair{13, 19, 2});
  CHECK(first.pairs[3] == MarkedPair{20, 21, 2});
  CHECK(first.letter == 7);
  CHECK(first.letter_positions == std::vector<int>{23});
  CHECK(first.after.cells == parse_cells(fixtures::kThreeColorAfterOdd));

  const IterationRecord& second = trace.records[1];
  CHECK(second.kind == PhaseKind::Even);
  CHECK(second.anchor == 5);
  CHECK(second.chain == std::vector<int>{6, 7, 12});
  REQUIRE(second.pairs.size() == 1);
  CHECK(second.pairs[0] == MarkedPair{10, 11, 2});
  CHECK(second.letter == 6);
  CHECK(second.letter_positions == std::vector<int>{12});

  const IterationRecord& third = trace.records[2];
  CHECK(third.anchor == 14);
  CHECK(third.chain == std::vector<int>{22, 24, 25});
  CHECK(third.pairs.empty());
  CHECK(third.letter_positions == std::vector<int>{25});

  const YamanouchiWord word = trace.output.to_word(7);
  CHECK(word.max_letter() == 7);
  CHECK(tableau_to_path(word, 3) == path);
  CHECK(level_steps(path) == odd_columns(word));
}

TEST_CASE("degenerate instances") {
  CHECK(format_word(path_to_tableau(path_of("L L L", 1))) == "1 1 1");
  CHECK(format_path(tableau_to_path(word_of("1 1 1", 1), 0)) == "L L L");
  CHECK(path_to_tableau(MotzkinWord{{}, 2}) == YamanouchiWord{{}, 5});
  CHECK(tableau_to_path(YamanouchiWord{{}, 5}, 2) == MotzkinWord{{}, 2});
  CHECK(format_word(path_to_tableau(path_of("U1 D1", 1))) == "1 2");
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(path_to_tableau(path_of("D1 U1", 1)), invalid_word);
  CHECK_THROWS_AS(path_to_tableau(path_of("U2 D2", 1)), invalid_word);
  CHECK_THROWS_AS(tableau_to_path(word_of("2 1", 3), 1), invalid_word);
  // a valid word that needs more rows than the bound allows
  CHECK_THROWS_AS(tableau_to_path(word_of("1 2 3 4", 4), 1), invalid_word);
}

TEST_CASE("snapshots chain and stay valid") {
  for (const char* text : {fixtures::kSmallPath, fixtures::kTwoColorPath,
                           fixtures::kThreeColorPath}) {
    // bound 3 covers all three fixtures
    const Trace trace = path_to_tableau_trace(parse_path(text, 3));
    const WorkingSequence* prev = &trace.input;
    for (const IterationRecord& rec : trace.records) {
      CHECK(rec.before == *prev);
      CHECK(validate_motzkin(rec.after.path_part()).ok);
      prev = &rec.after;
    }
    CHECK(*prev == trace.output);
  }
}

TEST_CASE("single backward iterations undo single forward iterations") {
  for (const char* text : {fixtures::kSmallPath, fixtures::kTwoColorPath,
                           fixtures::kThreeColorPath}) {
    const Trace trace = path_to_tableau_trace(parse_path(text, 3));
    for (const IterationRecord& rec : trace.records) {
      WorkingSequence undone = rec.after;
      backward_iteration(undone, rec.top_color, rec.kind);
      CHECK(undone == rec.before);
    }
  }
}

TEST_CASE("exhaustive roundtrips and image, small bounds") {
  for (int d = 1; d <= 3; ++d) {
    const int n_cap = d == 1 ? 9 : 7;
    for (int n = 0; n <= n_cap; ++n) {
      std::set<std::string> images;
      int paths = 0;
      for (const MotzkinWord& path : all_motzkin(n, d)) {
        ++paths;
        const YamanouchiWord word = path_to_tableau(path);
        REQUIRE(validate_yamanouchi(word).ok);
        images.insert(format_word(word));
        REQUIRE(tableau_to_path(word, d) == path);
      }
      // injective with exactly the bounded-height family as image
      CHECK(static_cast<int>(images.size()) == paths);
      std::set<std::string> family;
      for (const YamanouchiWord& word : all_ballot(n, 2 * d + 1))
        family.insert(format_word(word));
      CHECK(images == family);
      for (const YamanouchiWord& word : all_ballot(n, 2 * d + 1))
        CHECK(path_to_tableau(tableau_to_path(word, d)) == word);
    }
  }
}

TEST_CASE("class refinement matches the max letter") {
  for (int n = 0; n <= 8; ++n)
    for (const MotzkinWord& path : all_motzkin(n, 2)) {
      const int m = path_to_tableau(path).max_letter();
      switch (classify(path)) {
        case PathClass::Bar: CHECK(m == 5); break;
        case PathClass::Hat: CHECK(m == 4); break;
        case PathClass::Lower: CHECK(m <= 3); break;
      }
    }
}

TEST_CASE("trace log lines") {
  const Trace trace =
      path_to_tableau_trace(path_of(fixtures::kTwoColorPath, 2));
  const std::string log = trace_to_text(trace);
  CHECK(log.find("fwd t=2 odd anchor=7 chain=8,13 pairs=11:12:2 letter=5 "
                 "pos=13\n") == 0);
  CHECK(log.find("fwd t=1 ones") != std::string::npos);
  CHECK(std::count(log.begin(), log.end(), '\n') == 11);
}
