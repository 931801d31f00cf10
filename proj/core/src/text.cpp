#include "cmotzkin/text.hpp"

#include <cctype>
#include <sstream>

#include "cmotzkin/errors.hpp"

namespace cmotzkin {

namespace {

std::vector<std::string> split_fields(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n' || ch == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int parse_positive(const std::string& field, const char* what) {
  if (field.empty()) throw invalid_word(std::string("empty ") + what);
  for (char ch : field)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw invalid_word(std::string("bad ") + what + ": '" + field + "'");
  long v = std::stol(field);
  if (v < 1 || v > 1000000)
    throw invalid_word(std::string("out of range ") + what + ": '" + field + "'");
  return static_cast<int>(v);
}

}  // namespace

std::string format_token(const Token& t) {
  switch (t.kind) {
    case CellKind::Level:
      return "L";
    case CellKind::Up:
      return "U" + std::to_string(t.value);
    case CellKind::Down:
      return "D" + std::to_string(t.value);
    case CellKind::Letter:
      return std::to_string(t.value);
  }
  return "?";
}

std::string format_cells(const std::vector<Token>& cells) {
  std::string out;
  for (const Token& c : cells) {
    if (!out.empty()) out.push_back(' ');
    out += format_token(c);
  }
  return out;
}

std::string format_steps(const std::vector<Token>& steps) { return format_cells(steps); }

std::string format_letters(const std::vector<int>& letters) {
  std::string out;
  for (int v : letters) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(v);
  }
  return out;
}

std::string format_path(const MotzkinWord& path) { return format_steps(path.steps); }
std::string format_word(const YamanouchiWord& word) { return format_letters(word.letters); }

std::vector<Token> parse_steps(std::string_view text) {
  std::vector<Token> out;
  for (const std::string& f : split_fields(text)) {
    if (f == "L" || f == "l") {
      out.push_back(Token::level());
    } else if (f[0] == 'U' || f[0] == 'u') {
      out.push_back(Token::up(parse_positive(f.substr(1), "color")));
    } else if (f[0] == 'D' || f[0] == 'd') {
      out.push_back(Token::down(parse_positive(f.substr(1), "color")));
    } else {
      throw invalid_word("bad step token: '" + f + "'");
    }
  }
  return out;
}

std::vector<Token> parse_cells(std::string_view text) {
  std::vector<Token> out;
  for (const std::string& f : split_fields(text)) {
    if (f == "L" || f == "l") {
      out.push_back(Token::level());
    } else if (f[0] == 'U' || f[0] == 'u') {
      out.push_back(Token::up(parse_positive(f.substr(1), "color")));
    } else if (f[0] == 'D' || f[0] == 'd') {
      out.push_back(Token::down(parse_positive(f.substr(1), "color")));
    } else {
      out.push_back(Token::letter(parse_positive(f, "letter")));
    }
  }
  return out;
}

std::vector<int> parse_letters(std::string_view text) {
  std::vector<std::string> fields = split_fields(text);
  std::vector<int> out;
  if (fields.size() == 1 && fields[0].size() > 1) {
    // digit-string shorthand, one letter per digit
    bool all_digits = true;
    for (char ch : fields[0])
      if (!std::isdigit(static_cast<unsigned char>(ch))) all_digits = false;
    if (all_digits) {
      for (char ch : fields[0]) {
        if (ch == '0') throw invalid_word("letter 0 in digit string");
        out.push_back(ch - '0');
      }
      return out;
    }
  }
  for (const std::string& f : fields) out.push_back(parse_positive(f, "letter"));
  return out;
}

MotzkinWord parse_path(std::string_view text, int colors) {
  return {parse_steps(text), colors};
}

YamanouchiWord parse_word(std::string_view text, int max_rows) {
  return {parse_letters(text), max_rows};
}

}  // namespace cmotzkin
