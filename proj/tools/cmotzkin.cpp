// Command-line front end: conversions between bounded-height standard Young
// tableaux (as ballot words) and colored Motzkin paths, exhaustive
// enumeration, exact counting, self-verification, and ASCII rendering.
//
// Exit status: 0 success, 1 usage error, 2 invalid input word,
// 3 verification failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cmotzkin/analysis.hpp"
#include "cmotzkin/bijection.hpp"
#include "cmotzkin/enumerate.hpp"
#include "cmotzkin/errors.hpp"
#include "cmotzkin/formulas.hpp"
#include "cmotzkin/render.hpp"
#include "cmotzkin/text.hpp"
#include "cmotzkin/validate.hpp"
#include "cmotzkin/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitVerifyFailure = 3;

struct Output {
  std::string path;
  std::ofstream file;

  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) file.open(path);
    return file;
  }
};

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitUsage;
}

int invalid_input(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitInvalidInput;
}

cmotzkin::MotzkinWord read_path(const std::string& text, int colors) {
  const cmotzkin::MotzkinWord path = cmotzkin::parse_path(text, colors);
  const cmotzkin::ValidationReport report = cmotzkin::validate_motzkin(path);
  if (!report.ok)
    throw cmotzkin::invalid_word("invalid path: " + report.render());
  return path;
}

cmotzkin::YamanouchiWord read_word(const std::string& text, int max_rows) {
  const cmotzkin::YamanouchiWord word = cmotzkin::parse_word(text, max_rows);
  const cmotzkin::ValidationReport report = cmotzkin::validate_yamanouchi(word);
  if (!report.ok)
    throw cmotzkin::invalid_word("invalid word: " + report.render());
  return word;
}

void write_trace(const std::string& trace_path, const cmotzkin::Trace& trace) {
  if (trace_path.empty()) return;
  std::ofstream out(trace_path);
  out << cmotzkin::trace_to_text(trace);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"standard Young tableaux <-> colored Motzkin paths"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --output appear after the subcommand name

  std::string output_path;
  app.add_option("--output", output_path, "write stdout output to a file");

  // map
  auto* map_cmd = app.add_subcommand("map", "path to tableau word");
  int map_d = 0;
  std::string map_path, map_trace;
  map_cmd->add_option("--d", map_d, "color bound")->required();
  map_cmd->add_option("--path", map_path, "step tokens, e.g. \"U1 L D1\"")->required();
  map_cmd->add_option("--trace", map_trace, "write the iteration log to a file");

  // unmap
  auto* unmap_cmd = app.add_subcommand("unmap", "tableau word to path");
  int unmap_d = 0;
  std::string unmap_word, unmap_trace;
  unmap_cmd->add_option("--d", unmap_d, "color bound")->required();
  unmap_cmd->add_option("--word", unmap_word, "letters, e.g. \"1 1 2\"")->required();
  unmap_cmd->add_option("--trace", unmap_trace, "write the iteration log to a file");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "list a family, one word per line");
  std::string enum_family, enum_class;
  int enum_n = 0, enum_d = 0;
  enum_cmd->add_option("family", enum_family, "motzkin or syt")
      ->required()
      ->check(CLI::IsMember({"motzkin", "syt"}));
  enum_cmd->add_option("--n", enum_n, "length")->required()->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--d", enum_d, "color bound (motzkin) or row bound (syt)")->required();
  enum_cmd->add_option("--class", enum_class, "filter paths: lower, hat or bar")
      ->check(CLI::IsMember({"lower", "hat", "bar"}));

  // count
  auto* count_cmd = app.add_subcommand("count", "exact cardinality");
  std::string count_family, count_method = "dp", count_policy = "anywhere";
  int count_n = 0, count_d = 0;
  count_cmd->add_option("family", count_family, "motzkin or syt")
      ->required()
      ->check(CLI::IsMember({"motzkin", "syt"}));
  count_cmd->add_option("--n", count_n, "length")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--d", count_d, "color bound (motzkin) or row bound (syt)")->required();
  count_cmd->add_option("--method", count_method, "dp, enumerate or formula")
      ->check(CLI::IsMember({"dp", "enumerate", "formula"}));
  count_cmd->add_option("--level-policy", count_policy, "anywhere or floor-only")
      ->check(CLI::IsMember({"anywhere", "floor-only"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the certification suite");
  int verify_n = 40, verify_d = 4;
  std::string verify_suite = "all", verify_format = "table";
  verify_cmd->add_option("--n-max", verify_n, "largest length")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--d-max", verify_d, "largest color bound")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--suite", verify_suite, "all, bijection, statistic, counts or monotonicity")
      ->check(CLI::IsMember({"all", "bijection", "statistic", "counts", "monotonicity"}));
  verify_cmd->add_option("--format", verify_format, "table or kv")
      ->check(CLI::IsMember({"table", "kv"}));

  // render
  auto* render_cmd = app.add_subcommand("render", "ASCII drawing");
  std::string render_what, render_input;
  int render_d = -1;
  render_cmd->add_option("what", render_what, "path or tableau")
      ->required()
      ->check(CLI::IsMember({"path", "tableau"}));
  render_cmd->add_option("word", render_input, "the word to draw")->required();
  render_cmd->add_option("--d", render_d, "color bound (default: largest color used)");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "level steps and odd columns of a pair");
  int stats_d = 0;
  std::string stats_path;
  stats_cmd->add_option("--d", stats_d, "color bound")->required();
  stats_cmd->add_option("--path", stats_path, "step tokens")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output out{output_path, {}};

  try {
    if (*map_cmd) {
      const cmotzkin::MotzkinWord path = read_path(map_path, map_d);
      if (map_trace.empty()) {
        out.stream() << cmotzkin::format_word(cmotzkin::path_to_tableau(path)) << '\n';
      } else {
        const cmotzkin::Trace trace = cmotzkin::path_to_tableau_trace(path);
        write_trace(map_trace, trace);
        out.stream() << cmotzkin::format_word(trace.output.to_word(2 * map_d + 1)) << '\n';
      }
      return kExitOk;
    }

    if (*unmap_cmd) {
      const cmotzkin::YamanouchiWord word = read_word(unmap_word, 2 * unmap_d + 1);
      if (unmap_trace.empty()) {
        out.stream() << cmotzkin::format_path(cmotzkin::tableau_to_path(word, unmap_d)) << '\n';
      } else {
        const cmotzkin::Trace trace = cmotzkin::tableau_to_path_trace(word, unmap_d);
        write_trace(unmap_trace, trace);
        out.stream() << cmotzkin::format_path(trace.output.path_part()) << '\n';
      }
      return kExitOk;
    }

    if (*enum_cmd) {
      std::ostream& os = out.stream();
      if (enum_family == "motzkin") {
        cmotzkin::MotzkinGenerator gen(enum_n, enum_d);
        while (auto path = gen.next()) {
          if (!enum_class.empty() &&
              std::string(cmotzkin::to_string(cmotzkin::classify(*path))) != enum_class)
            continue;
          os << cmotzkin::format_path(*path) << '\n';
        }
      } else {
        if (!enum_class.empty())
          return usage_error("--class applies to motzkin only");
        cmotzkin::BallotGenerator gen(enum_n, enum_d);
        while (auto word = gen.next()) os << cmotzkin::format_word(*word) << '\n';
      }
      return kExitOk;
    }

    if (*count_cmd) {
      const auto policy = count_policy == "anywhere"
                              ? cmotzkin::LevelPolicy::Anywhere
                              : cmotzkin::LevelPolicy::FloorOnly;
      cmotzkin::BigInt result;
      if (count_family == "motzkin") {
        if (count_method == "dp") {
          result = cmotzkin::count_motzkin_dp(count_n, count_d, policy);
        } else if (count_method == "enumerate") {
          const bool floor_only = policy == cmotzkin::LevelPolicy::FloorOnly;
          cmotzkin::MotzkinGenerator gen(count_n, count_d);
          while (auto path = gen.next())
            if (!floor_only || cmotzkin::classify(*path) != cmotzkin::PathClass::Bar)
              ++result;
        } else {
          return usage_error("no closed formula for paths; use dp or enumerate");
        }
      } else {
        if (count_policy != "anywhere")
          return usage_error("--level-policy applies to motzkin only");
        if (count_method == "dp") {
          result = cmotzkin::count_syt_dp(count_n, count_d);
        } else if (count_method == "enumerate") {
          cmotzkin::BallotGenerator gen(count_n, count_d);
          while (gen.next()) ++result;
        } else {
          if (count_d < 2 || count_d > 5)
            return usage_error("closed forms exist for row bounds 2 to 5; use dp");
          result = cmotzkin::syt_count_formula(count_n, count_d);
        }
      }
      out.stream() << result.str() << '\n';
      return kExitOk;
    }

    if (*verify_cmd) {
      cmotzkin::VerifyReport report;
      if (verify_suite == "all")
        report = cmotzkin::verify_all(verify_n, verify_d);
      else if (verify_suite == "bijection")
        report = cmotzkin::verify_bijection(verify_n, verify_d);
      else if (verify_suite == "statistic")
        report = cmotzkin::verify_statistic(verify_n, verify_d);
      else if (verify_suite == "counts")
        report = cmotzkin::verify_counts(verify_n, verify_d);
      else
        report = cmotzkin::verify_monotonicity(verify_n, verify_d);
      out.stream() << (verify_format == "kv" ? report.render_kv()
                                             : report.render_table());
      return report.all_passed() ? kExitOk : kExitVerifyFailure;
    }

    if (*render_cmd) {
      if (render_what == "path") {
        const std::vector<cmotzkin::Token> steps = cmotzkin::parse_steps(render_input);
        int colors = render_d;
        if (colors < 0)
          for (const cmotzkin::Token& t : steps)
            if (!t.is_level() && t.value > colors) colors = t.value;
        if (colors < 0) colors = 0;
        const cmotzkin::MotzkinWord path =
            read_path(render_input, colors);
        out.stream() << cmotzkin::render_path(path);
      } else {
        const std::vector<int> letters = cmotzkin::parse_letters(render_input);
        int rows = render_d;
        for (int v : letters) rows = std::max(rows, v);
        const cmotzkin::YamanouchiWord word =
            read_word(render_input, std::max(rows, 1));
        out.stream() << cmotzkin::render_tableau(word);
      }
      return kExitOk;
    }

    if (*stats_cmd) {
      const cmotzkin::MotzkinWord path = read_path(stats_path, stats_d);
      const cmotzkin::YamanouchiWord word = cmotzkin::path_to_tableau(path);
      out.stream() << "level_steps=" << cmotzkin::level_steps(path)
                   << " odd_columns=" << cmotzkin::odd_columns(word) << '\n';
      return kExitOk;
    }
  } catch (const cmotzkin::invalid_word& e) {
    return invalid_input(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }

  return usage_error("no subcommand");
}
