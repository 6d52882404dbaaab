#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "queens/complete.hpp"
#include "queens/compose.hpp"
#include "queens/construct.hpp"
#include "queens/enumerate.hpp"
#include "queens/error.hpp"
#include "queens/io.hpp"
#include "queens/width.hpp"

namespace queens::cli {

// Exit-code contract: 0 = success / true verdict, 1 = false verdict
// (invalid board, failed criterion, no witness, no solution, no
// completion), 2 = usage or input error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline int verdict_exit(const error& e) {
  switch (e.code()) {
    case errc::no_solution_exists:
    case errc::no_witness:
      return exit_false;
    default:
      return exit_usage;
  }
}

inline void print_arrangement(std::ostream& out, const arrangement& a,
                              const std::string& fmt) {
  if (fmt == "board")
    out << render_board(a);
  else if (fmt == "json")
    out << to_json(a).dump() << '\n';
  else
    out << format_perm_text(a) << '\n';
}

// Reads a whole file; "-" means the CLI's input stream.
inline std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
  std::ifstream file(path);
  if (!file)
    throw error(errc::invalid_input, "cannot open file: " + path);
  return std::string(std::istreambuf_iterator<char>(file),
                     std::istreambuf_iterator<char>());
}

inline arrangement load_arrangement(const std::string& path,
                                    std::istream& in) {
  std::istringstream text(slurp(path, in));
  return read_arrangement(text);
}

inline std::vector<int> parse_prefix(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> prefix;
  std::string token;
  while (in >> token) {
    try {
      prefix.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw error(errc::invalid_input,
                  "prefix entries must be integers: '" + token + "'");
    }
  }
  return prefix;
}

inline void print_criterion(std::ostream& out, const criterion_report& r) {
  auto list = [&](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ' ';
      s += std::to_string(v[i]);
    }
    return s;
  };
  out << "n: " << r.n << '\n'
      << "diff_residues: " << list(r.diff_residues) << '\n'
      << "sum_residues: " << list(r.sum_residues) << '\n'
      << "diff_complete: " << (r.diff_complete ? "true" : "false") << '\n'
      << "sum_complete: " << (r.sum_complete ? "true" : "false") << '\n'
      << "passes: " << (r.passes ? "true" : "false") << '\n';
}

}  // namespace detail

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit code; all output goes to the given streams.
inline int run(std::vector<std::string> args, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"N-Queens constructions, composition, and width analysis",
               "queens"};
  app.require_subcommand(1);

  // solve N
  int solve_n = 0;
  std::string solve_fmt = "perm";
  auto* solve_cmd =
      app.add_subcommand("solve", "Construct one solution for board size N");
  solve_cmd->add_option("N", solve_n, "board size")->required();
  solve_cmd->add_option("--format", solve_fmt, "output format")
      ->check(CLI::IsMember({"perm", "board", "json"}));

  // validate (--perm | --file)
  std::string validate_perm, validate_file;
  auto* validate_cmd =
      app.add_subcommand("validate", "Check an arrangement for attacks");
  auto* vp = validate_cmd->add_option("--perm", validate_perm,
                                      "permutation as space-separated text");
  validate_cmd->add_option("--file", validate_file,
                           "file with permutation text or JSON ('-' = stdin)")
      ->excludes(vp);

  // compose A.json B.json [--generalized A1,A2,...]
  std::vector<std::string> compose_files;
  std::vector<std::string> compose_generalized;
  std::string compose_fmt = "perm";
  auto* compose_cmd = app.add_subcommand(
      "compose", "Compose arrangements into a larger board");
  compose_cmd->add_option("files", compose_files,
                          "arrangement files: A B, or just B with "
                          "--generalized");
  compose_cmd
      ->add_option("--generalized", compose_generalized,
                   "comma-separated files A_1,...,A_n, one per cell of B")
      ->delimiter(',');
  compose_cmd->add_option("--format", compose_fmt, "output format")
      ->check(CLI::IsMember({"perm", "board", "json"}));

  // criterion --perm
  std::string criterion_perm;
  std::string criterion_fmt = "text";
  auto* criterion_cmd = app.add_subcommand(
      "criterion", "Test the composition residue criterion");
  criterion_cmd->add_option("--perm", criterion_perm, "permutation text")
      ->required();
  criterion_cmd->add_option("--format", criterion_fmt, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // witness N
  int witness_n = 0;
  std::string witness_fmt = "perm";
  auto* witness_cmd = app.add_subcommand(
      "witness", "Produce a criterion-satisfying permutation of size N");
  witness_cmd->add_option("N", witness_n, "size")->required();
  witness_cmd->add_option("--format", witness_fmt, "output format")
      ->check(CLI::IsMember({"perm", "board", "json"}));

  // classify N
  long long classify_n = 0;
  std::string classify_fmt = "text";
  auto* classify_cmd = app.add_subcommand(
      "classify", "Classify N as Q-irreducible or Q-reducible");
  classify_cmd->add_option("N", classify_n, "size")->required();
  classify_cmd->add_option("--format", classify_fmt, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // width --perm [--orbit]
  std::string width_perm;
  std::string width_fmt = "text";
  bool width_orbit = false;
  auto* width_cmd = app.add_subcommand(
      "width", "Minimal queen-function width of a permutation");
  width_cmd->add_option("--perm", width_perm, "permutation text")->required();
  width_cmd->add_flag("--orbit", width_orbit,
                      "least width over the 8 symmetry images");
  width_cmd->add_option("--format", width_fmt, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // enumerate N [--count-only] [--fundamental] [--jobs J] [--prefix "..."]
  int enum_n = 0;
  bool enum_count_only = false, enum_fundamental = false;
  int enum_jobs = 1;
  std::string enum_prefix;
  std::string enum_fmt = "perm";
  auto* enum_cmd =
      app.add_subcommand("enumerate", "Exhaustively enumerate solutions");
  enum_cmd->add_option("N", enum_n, "board size")->required();
  enum_cmd->add_flag("--count-only", enum_count_only,
                     "print the solution count only");
  enum_cmd->add_flag("--fundamental", enum_fundamental,
                     "print fundamental classes as JSON");
  enum_cmd->add_option("--jobs", enum_jobs, "worker threads for counting")
      ->check(CLI::PositiveNumber);
  enum_cmd->add_option("--prefix", enum_prefix,
                       "restrict to solutions starting with these columns");
  enum_cmd->add_option("--format", enum_fmt, "streamed output format")
      ->check(CLI::IsMember({"perm", "board", "json"}));

  // check-remark15
  std::string remark_fmt = "text";
  auto* remark_cmd = app.add_subcommand(
      "check-remark15",
      "Sweep all 15-queens solutions for the minimum representation width");
  remark_cmd->add_option("--format", remark_fmt, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // check-conjecture N
  int conj_n = 0;
  std::string conj_fmt = "text";
  auto* conj_cmd = app.add_subcommand(
      "check-conjecture",
      "Check that every fundamental class has width at most 4");
  conj_cmd->add_option("N", conj_n, "board size")->required();
  conj_cmd->add_option("--format", conj_fmt, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // complete N --queens "r,c;..." [--method backtrack|qf --max-width W]
  int complete_n = 0;
  std::string complete_queens;
  std::string complete_method = "backtrack";
  int complete_max_width = 4;
  std::string complete_fmt = "perm";
  auto* complete_cmd = app.add_subcommand(
      "complete", "Extend a partial placement to a full solution");
  complete_cmd->add_option("N", complete_n, "board size")->required();
  complete_cmd
      ->add_option("--queens", complete_queens,
                   "placed queens as 'r,c;r,c;...' (may be empty)")
      ->required();
  complete_cmd->add_option("--method", complete_method, "search strategy")
      ->check(CLI::IsMember({"backtrack", "qf"}));
  complete_cmd->add_option("--max-width", complete_max_width,
                           "width bound for the qf method")
      ->check(CLI::PositiveNumber);
  complete_cmd->add_option("--format", complete_fmt, "output format")
      ->check(CLI::IsMember({"perm", "board", "json"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (app.got_subcommand(solve_cmd)) {
      const arrangement a = solve(solve_n);
      detail::print_arrangement(out, a, solve_fmt);
      return exit_ok;
    }

    if (app.got_subcommand(validate_cmd)) {
      if (validate_cmd->count("--perm") + validate_cmd->count("--file") != 1)
        throw error(errc::invalid_input,
                    "validate needs exactly one of --perm or --file");
      arrangement a = validate_cmd->count("--perm") != 0
                          ? parse_perm_text(validate_perm)
                          : detail::load_arrangement(validate_file, in);
      const bool ok = validate(a);
      out << (ok ? "valid" : "invalid") << '\n';
      return ok ? exit_ok : exit_false;
    }

    if (app.got_subcommand(compose_cmd)) {
      arrangement result;
      if (!compose_generalized.empty()) {
        if (compose_files.size() != 1)
          throw error(errc::invalid_input,
                      "--generalized takes exactly one positional file (B)");
        std::vector<arrangement> as;
        as.reserve(compose_generalized.size());
        for (const auto& f : compose_generalized)
          as.push_back(detail::load_arrangement(f, in));
        result = generalized_compose(as, detail::load_arrangement(
                                             compose_files[0], in));
      } else {
        if (compose_files.size() != 2)
          throw error(errc::invalid_input,
                      "compose takes two arrangement files: A B");
        result = compose(detail::load_arrangement(compose_files[0], in),
                         detail::load_arrangement(compose_files[1], in));
      }
      detail::print_arrangement(out, result, compose_fmt);
      return exit_ok;
    }

    if (app.got_subcommand(criterion_cmd)) {
      const criterion_report r = criterion(parse_perm_text(criterion_perm));
      if (criterion_fmt == "json")
        out << to_json(r).dump() << '\n';
      else
        detail::print_criterion(out, r);
      return r.passes ? exit_ok : exit_false;
    }

    if (app.got_subcommand(witness_cmd)) {
      const arrangement w = witness(witness_n);
      detail::print_arrangement(out, w, witness_fmt);
      return exit_ok;
    }

    if (app.got_subcommand(classify_cmd)) {
      const irreducibility_class c = classify(classify_n);
      if (classify_fmt == "json") {
        out << to_json(c).dump() << '\n';
      } else {
        out << "n: " << c.n << '\n'
            << "q_irreducible: " << (c.q_irreducible ? "true" : "false")
            << '\n';
        if (c.form) out << "form: " << to_string(*c.form) << '\n';
        if (c.factor_witness)
          out << "factor_witness: " << c.factor_witness->first << ' '
              << c.factor_witness->second << '\n';
      }
      return exit_ok;
    }

    if (app.got_subcommand(width_cmd)) {
      const arrangement a = parse_perm_text(width_perm);
      if (width_orbit) {
        const int w = orbit_min_width(a);
        if (width_fmt == "json")
          out << nlohmann::json{{"orbit_width", w}}.dump() << '\n';
        else
          out << w << '\n';
      } else {
        const width_decomposition d = min_width(a);
        if (width_fmt == "json")
          out << nlohmann::json{{"width", d.width},
                                {"function", to_json(d.function)}}
                     .dump()
              << '\n';
        else
          out << d.width << '\n';
      }
      return exit_ok;
    }

    if (app.got_subcommand(enum_cmd)) {
      const std::vector<int> prefix = detail::parse_prefix(enum_prefix);
      if (enum_count_only) {
        const long long count =
            prefix.empty() ? count_solutions(enum_n, enum_jobs)
                           : count_with_prefix(enum_n, prefix);
        out << count << '\n';
        return exit_ok;
      }
      if (enum_fundamental) {
        if (enum_fmt != "perm" && enum_fmt != "json")
          throw error(errc::invalid_input,
                      "--fundamental output is always JSON");
        const auto classes =
            prefix.empty() ? fundamental_classes(enum_n, enum_jobs)
                           : queens::detail::classes_with_prefix(enum_n,
                                                                 prefix);
        out << to_json(classes).dump() << '\n';
        return exit_ok;
      }
      arrangement a{enum_n, std::vector<int>(
                                static_cast<std::size_t>(enum_n))};
      for_each_solution_with_prefix(enum_n, prefix, [&](const int* perm) {
        std::copy(perm, perm + enum_n, a.perm.begin());
        if (enum_fmt == "board")
          out << render_board(a) << '\n';
        else if (enum_fmt == "json")
          out << to_json(a).dump() << '\n';
        else
          out << format_perm_text(a) << '\n';
      });
      return exit_ok;
    }

    if (app.got_subcommand(remark_cmd)) {
      const remark_report r = check_remark_15();
      if (remark_fmt == "json") {
        out << to_json(r).dump() << '\n';
      } else {
        out << "n: 15\n"
            << "solutions: " << r.solutions << '\n';
        for (const auto& [w, c] : r.width_histogram)
          out << "width " << w << ": " << c << '\n';
        out << "min_width_observed: " << r.min_width_observed << '\n'
            << "prefix_partition_total: " << r.prefix_partition_total << '\n'
            << "passes: " << (r.passes ? "true" : "false") << '\n';
      }
      return r.passes ? exit_ok : exit_false;
    }

    if (app.got_subcommand(conj_cmd)) {
      const conjecture_report r = check_conjecture(conj_n);
      if (conj_fmt == "json") {
        out << to_json(r).dump() << '\n';
      } else {
        out << "n: " << r.n << '\n'
            << "applicable: " << (r.applicable ? "true" : "false") << '\n'
            << "solutions: " << r.solutions << '\n'
            << "classes: " << r.classes << '\n'
            << "max_orbit_width: " << r.max_orbit_width << '\n'
            << "passes: " << (r.passes ? "true" : "false") << '\n';
      }
      return r.passes ? exit_ok : exit_false;
    }

    if (app.got_subcommand(complete_cmd)) {
      const partial_placement p =
          parse_placement_text(complete_n, complete_queens);
      const std::optional<arrangement> result =
          complete_method == "qf"
              ? complete_via_queen_functions(p, complete_max_width)
              : complete(p);
      if (!result) {
        err << (complete_method == "qf"
                    ? "no completion found within the width bound\n"
                    : "no completion exists\n");
        return exit_false;
      }
      detail::print_arrangement(out, *result, complete_fmt);
      return exit_ok;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return detail::verdict_exit(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  err << "no subcommand given\n";
  return exit_usage;
}

}  // namespace queens::cli
