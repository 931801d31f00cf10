#include "cmotzkin/enumerate.hpp"

#include <map>
#include <stdexcept>

namespace cmotzkin {

namespace {

Token token_for_code(int code) {
  if (code == 0) return Token::level();
  return code % 2 ? Token::up((code + 1) / 2) : Token::down(code / 2);
}

}  // namespace

MotzkinGenerator::MotzkinGenerator(int length, int colors)
    : length_(length), colors_(colors) {
  if (length < 0 || colors < 0)
    throw std::invalid_argument("negative enumeration bound");
  height_.assign(colors + 2, 0);
}

// A prefix is kept only if it can still close: appending must respect the
// height chain and leave at least sum(h) steps of room.
bool MotzkinGenerator::feasible(int code) const {
  const int rem = length_ - static_cast<int>(codes_.size()) - 1;
  if (code == 0) return rem >= height_sum_;
  const int color = (code + 1) / 2;
  if (color > colors_) return false;
  if (code % 2) {  // up
    if (color > 1 && height_[color] + 1 > height_[color - 1]) return false;
    return rem >= height_sum_ + 1;
  }
  // down
  if (height_[color] == 0) return false;
  if (color < colors_ && height_[color] - 1 < height_[color + 1]) return false;
  return true;  // rem >= sum - 1 holds whenever the prefix was feasible
}

void MotzkinGenerator::push(int code) {
  codes_.push_back(code);
  if (code == 0) return;
  const int color = (code + 1) / 2;
  if (code % 2) ++height_[color], ++height_sum_;
  else --height_[color], --height_sum_;
}

void MotzkinGenerator::pop() {
  const int code = codes_.back();
  codes_.pop_back();
  if (code == 0) return;
  const int color = (code + 1) / 2;
  if (code % 2) --height_[color], --height_sum_;
  else ++height_[color], ++height_sum_;
}

bool MotzkinGenerator::extend_to_leaf() {
  while (static_cast<int>(codes_.size()) < length_) {
    bool extended = false;
    for (int code = 0; code <= 2 * colors_; ++code)
      if (feasible(code)) {
        push(code);
        extended = true;
        break;
      }
    if (!extended) return false;  // only possible when length 0 prefix stuck
  }
  return true;
}

bool MotzkinGenerator::backtrack_advance() {
  while (!codes_.empty()) {
    const int last = codes_.back();
    pop();
    for (int code = last + 1; code <= 2 * colors_; ++code)
      if (feasible(code)) {
        push(code);
        if (extend_to_leaf()) return true;
        break;  // cannot happen: feasible prefixes always extend
      }
  }
  return false;
}

std::optional<MotzkinWord> MotzkinGenerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!extend_to_leaf()) {
      done_ = true;
      return std::nullopt;
    }
  } else if (!backtrack_advance()) {
    done_ = true;
    return std::nullopt;
  }
  MotzkinWord word;
  word.colors = colors_;
  word.steps.reserve(codes_.size());
  for (int code : codes_) word.steps.push_back(token_for_code(code));
  return word;
}

BallotGenerator::BallotGenerator(int length, int max_rows)
    : length_(length), max_rows_(max_rows) {
  if (length < 0 || max_rows < 1)
    throw std::invalid_argument("bad enumeration bound");
  counts_.assign(max_rows + 2, 0);
}

bool BallotGenerator::feasible(int letter) const {
  if (letter > max_rows_) return false;
  return letter == 1 || counts_[letter] + 1 <= counts_[letter - 1];
}

bool BallotGenerator::backtrack_advance() {
  while (!letters_.empty()) {
    const int last = letters_.back();
    letters_.pop_back();
    --counts_[last];
    for (int v = last + 1; v <= max_rows_; ++v)
      if (feasible(v)) {
        letters_.push_back(v);
        ++counts_[v];
        // a valid prefix always extends with 1s
        while (static_cast<int>(letters_.size()) < length_) {
          letters_.push_back(1);
          ++counts_[1];
        }
        return true;
      }
  }
  return false;
}

std::optional<YamanouchiWord> BallotGenerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    letters_.assign(length_, 1);
    counts_[1] = length_;
  } else if (!backtrack_advance()) {
    done_ = true;
    return std::nullopt;
  }
  return YamanouchiWord{letters_, max_rows_};
}

std::vector<MotzkinWord> all_motzkin(int length, int colors) {
  std::vector<MotzkinWord> out;
  MotzkinGenerator gen(length, colors);
  while (auto word = gen.next()) out.push_back(std::move(*word));
  return out;
}

std::vector<YamanouchiWord> all_ballot(int length, int max_rows) {
  std::vector<YamanouchiWord> out;
  BallotGenerator gen(length, max_rows);
  while (auto word = gen.next()) out.push_back(std::move(*word));
  return out;
}

BigInt count_motzkin_dp(int length, int colors, LevelPolicy policy) {
  if (length < 0 || colors < 0)
    throw std::invalid_argument("negative counting bound");
  using State = std::vector<int>;
  std::map<State, BigInt> current{{State(colors, 0), 1}};
  for (int step = 1; step <= length; ++step) {
    const int room = length - step;  // steps left after this one
    std::map<State, BigInt> next;
    for (const auto& [state, ways] : current) {
      int sum = 0;
      for (int z : state) sum += z;
      // stand still
      if ((policy == LevelPolicy::Anywhere || colors == 0 ||
           state.back() == 0) &&
          sum <= room)
        next[state] += ways;
      for (int i = 0; i < colors; ++i) {
        if ((i == 0 || state[i] + 1 <= state[i - 1]) && sum + 1 <= room) {
          State up = state;
          ++up[i];
          next[std::move(up)] += ways;
        }
        if (state[i] >= 1 && (i + 1 == colors || state[i] - 1 >= state[i + 1])) {
          State down = state;
          --down[i];
          next[std::move(down)] += ways;
        }
      }
    }
    current = std::move(next);
  }
  const auto it = current.find(State(colors, 0));
  return it == current.end() ? BigInt(0) : it->second;
}

BigInt count_syt_dp(int length, int max_rows) {
  if (length < 0) throw std::invalid_argument("negative counting bound");
  if (max_rows < 1) throw std::invalid_argument("row bound below 1");
  using Shape = std::vector<int>;  // trimmed, weakly decreasing
  std::map<Shape, BigInt> current{{Shape{}, 1}};
  for (int step = 1; step <= length; ++step) {
    std::map<Shape, BigInt> next;
    for (const auto& [shape, ways] : current) {
      const int rows = static_cast<int>(shape.size());
      for (int i = 0; i <= rows; ++i) {
        if (i >= max_rows) break;
        if (i > 0 && i < rows && shape[i] >= shape[i - 1]) continue;
        Shape grown = shape;
        if (i == rows) grown.push_back(1);
        else ++grown[i];
        next[std::move(grown)] += ways;
      }
    }
    current = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [shape, ways] : current) total += ways;
  return total;
}

}  // namespace cmotzkin
