#include "cmotzkin/validate.hpp"

namespace cmotzkin {

std::string ValidationReport::render() const {
  if (ok) return "PASS";
  return "FAIL " + condition + " at " + std::to_string(position);
}

ValidationReport validate_motzkin(const std::vector<Token>& steps, int colors) {
  std::vector<int> h(colors + 2, 0);
  const int n = static_cast<int>(steps.size());
  for (int j = 1; j <= n; ++j) {
    const Token& t = steps[j - 1];
    if (t.is_letter()) return ValidationReport::fail("letter", j);
    if (t.is_level()) continue;
    if (t.value < 1 || t.value > colors) return ValidationReport::fail("color", j);
    h[t.value] += t.kind == CellKind::Up ? 1 : -1;
    // only the touched color can break the chain
    const int k = t.value;
    if (h[k] < 0 || (k > 1 && h[k] > h[k - 1]) || (k < colors && h[k] < h[k + 1]))
      return ValidationReport::fail("M2", j);
  }
  for (int k = 1; k <= colors; ++k)
    if (h[k] != 0) return ValidationReport::fail("M1", n);
  return ValidationReport::pass();
}

ValidationReport validate_motzkin(const MotzkinWord& path) {
  return validate_motzkin(path.steps, path.colors);
}

ValidationReport validate_yamanouchi(const std::vector<int>& letters, int max_rows) {
  std::vector<int> counts(max_rows + 2, 0);
  const int n = static_cast<int>(letters.size());
  for (int j = 1; j <= n; ++j) {
    const int v = letters[j - 1];
    if (v < 1) return ValidationReport::fail("letter", j);
    if (v > max_rows) return ValidationReport::fail("rows", j);
    ++counts[v];
    if (v > 1 && counts[v] > counts[v - 1]) return ValidationReport::fail("ballot", j);
  }
  return ValidationReport::pass();
}

ValidationReport validate_yamanouchi(const YamanouchiWord& word) {
  return validate_yamanouchi(word.letters, word.max_rows);
}

}  // namespace cmotzkin
