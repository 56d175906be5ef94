#pragma once

// Command-line front end: gen, solve, theory, translate, experiment.
//
// run_cli() takes the streams explicitly so it can be driven in-process.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "randlp/experiments.hpp"
#include "randlp/generator.hpp"
#include "randlp/io.hpp"
#include "randlp/kernel_solver.hpp"
#include "randlp/semantics.hpp"
#include "randlp/theory.hpp"
#include "randlp/translator.hpp"

namespace randlp {

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes to `path`, or to `fallback` when the path is empty.
template <class F>
void emit(const std::string& path, std::ostream& fallback, F&& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  body(out);
}

inline std::string format_set(const Program& p, const AtomSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Atom a) {
    if (!first) out += ",";
    first = false;
    out += p.name_of(a);
  });
  return out + "}";
}

template <class T>
std::vector<T> split_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    T value{};
    if (!CLI::detail::lexical_cast(item, value)) throw CLI::ConversionError("", item);
    out.push_back(value);
  }
  if (out.empty()) throw InvalidArgument("empty list '" + text + "'");
  return out;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random negative two-literal logic programs: generation, solving, theory, experiments",
               "randlp"};
  app.require_subcommand(1);

  // gen
  std::size_t gen_n = 0;
  double gen_c1 = 0;
  double gen_c2 = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random program under L(c1, c2)");
  gen->add_option("--n", gen_n, "Number of atoms")->required();
  gen->add_option("--c1", gen_c1, "Pure-rule intensity")->required();
  gen->add_option("--c2", gen_c2, "Contradiction-rule intensity")->required();
  gen->add_option("--seed", gen_seed, "64-bit seed")->required();
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // solve
  std::string solve_in;
  std::string solve_check;
  std::optional<std::size_t> solve_limit;
  auto* solve = app.add_subcommand("solve", "Enumerate, count or check answer sets");
  solve->add_option("--in", solve_in, "Program file")->required();
  auto* f_enum = solve->add_flag("--enumerate", "List answer sets (default)");
  auto* f_count = solve->add_flag("--count", "Print the number of answer sets");
  auto* o_check = solve->add_option("--check", solve_check, "Comma-separated atoms to test");
  f_enum->excludes(f_count)->excludes(o_check);
  f_count->excludes(o_check);
  solve->add_option("--limit", solve_limit, "Stop after this many answer sets");

  // theory
  std::size_t th_n = 0;
  double th_c1 = 0;
  double th_c2 = 0;
  std::string th_curve;
  auto* theory = app.add_subcommand("theory", "Closed-form predictions for L(c1, c2)");
  theory->add_option("--n", th_n, "Number of atoms")->required();
  theory->add_option("--c1", th_c1, "Pure-rule intensity")->required();
  theory->add_option("--c2", th_c2, "Contradiction-rule intensity")->required();
  theory->add_option("--curve", th_curve, "Write per-k CSV to this file");

  // translate
  std::string tr_in;
  std::string tr_out;
  bool tr_verify = false;
  auto* translate = app.add_subcommand("translate", "Rewrite a negative program into two-literal form");
  translate->add_option("--in", tr_in, "Negative normal program")->required();
  translate->add_option("--out", tr_out, "Output file")->required();
  translate->add_flag("--verify", tr_verify, "Check equivalence by brute force");

  // experiment
  std::string ex_kind;
  std::string ex_n;
  std::string ex_c1;
  std::string ex_c2;
  std::size_t ex_trials = 0;
  std::uint64_t ex_seed = 0;
  double ex_gamma = 0.5;
  std::string ex_out;
  unsigned ex_threads = 1;
  std::optional<std::size_t> ex_limit;
  auto* experiment = app.add_subcommand("experiment", "Batch experiments, CSV output");
  experiment->add_option("kind", ex_kind, "avg | dist | consistency")
      ->required()
      ->check(CLI::IsMember({"avg", "dist", "consistency"}));
  experiment->add_option("--n", ex_n, "Comma-separated atom counts")->required();
  experiment->add_option("--c1", ex_c1, "Pure-rule intensity (comma list allowed)")->required();
  experiment->add_option("--c2", ex_c2, "Contradiction-rule intensity (comma list allowed)")->required();
  experiment->add_option("--trials", ex_trials, "Programs per row")->required();
  experiment->add_option("--seed", ex_seed, "64-bit seed")->required();
  experiment->add_option("--gamma", ex_gamma, "Consistency correction factor");
  experiment->add_option("--out", ex_out, "CSV output file")->required();
  experiment->add_option("--threads", ex_threads, "Worker threads");
  experiment->add_option("--limit", ex_limit, "Abort a row when a program exceeds this many answer sets");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (gen->parsed()) {
      const auto program = generate(LinearModelParams(gen_n, gen_c1, gen_c2), Seed{gen_seed});
      cli_detail::emit(gen_out, out, [&](std::ostream& o) { o << format_program(program); });
    } else if (solve->parsed()) {
      const auto program = parse_program(cli_detail::read_file(solve_in));
      if (!o_check->empty()) {
        AtomSet s(program.universe());
        const auto names = solve_check.empty() ? std::vector<std::string>{}
                                               : cli_detail::split_list<std::string>(solve_check);
        for (const auto& name : names) {
          auto atom = program.find(name);
          if (!atom) throw InvalidArgument("unknown atom '" + name + "'");
          s.insert(*atom);
        }
        const bool general = is_answer_set_general(program, s);
        out << "general: " << (general ? "true" : "false") << "\n";
        if (program.is_n2() && !program.empty()) {
          const bool n2 = is_answer_set_n2(program, s);
          out << "n2: " << (n2 ? "true" : "false") << "\n";
          if (n2 != general) throw std::logic_error("checkers disagree");
        } else {
          out << "n2: n/a\n";
        }
      } else if (*f_count) {
        if (solve_limit) {
          const auto c = enumerate_answer_sets(program, solve_limit);
          out << c.count << (c.truncated ? "+" : "") << "\n";
        } else {
          out << count_answer_sets(program) << "\n";
        }
      } else {
        const auto c = enumerate_answer_sets(program, solve_limit);
        for (const auto& s : c.sets) out << cli_detail::format_set(program, s) << "\n";
        out << "% answer sets: " << c.count << (c.truncated ? " (truncated)" : "") << "\n";
      }
    } else if (theory->parsed()) {
      const auto tp = theory_params(th_n, th_c1, th_c2);
      const auto params = LinearModelParams(th_n, th_c1, th_c2);
      auto kv = [&](const char* key, auto value) { out << key << "=" << format_number(value) << "\n"; };
      kv("n", tp.n);
      kv("c1", tp.c1);
      kv("c2", tp.c2);
      kv("expected_rules", expected_rule_count(params));
      kv("alpha", tp.alpha);
      kv("x0", tp.x0);
      kv("sigma", tp.sigma);
      kv("c0", tp.c0);
      kv("delta", tp.delta);
      kv("phi_x0", tp.phi_x0_direct);
      kv("phi_x0_asymptotic", tp.phi_x0_asymptotic);
      kv("expected_total", expected_total(th_n, th_c1, th_c2));
      kv("limit_expected_total", tp.limit_expected_total);
      if (!th_curve.empty()) {
        cli_detail::emit(th_curve, out, [&](std::ostream& o) {
          CsvWriter csv(o, kCurveHeader);
          for (std::size_t k = 1; k < th_n; ++k) {
            const auto kd = static_cast<double>(k);
            csv.row(k, prob_answer_set(th_n, k, th_c1, th_c2),
                    expected_count_size_k(th_n, k, th_c1, th_c2), phi(kd, th_n, th_c1, th_c2),
                    chi(kd, tp));
          }
        });
      }
    } else if (translate->parsed()) {
      const auto program = parse_program(cli_detail::read_file(tr_in));
      const auto result = to_two_literal(program);
      cli_detail::emit(tr_out, out, [&](std::ostream& o) { o << format_program(result.output); });
      out << "aux atoms: " << result.aux.size() << "\n";
      out << "rules: " << result.output.size() << " (bound " << result.output_size_bound << ")\n";
      if (tr_verify) {
        const bool ok = check_equivalence_modulo_aux(program, result.output, result.aux);
        out << "equivalent: " << (ok ? "true" : "false") << "\n";
        if (!ok) return 1;
      }
    } else if (experiment->parsed()) {
      ExperimentConfig cfg;
      cfg.n = cli_detail::split_list<std::size_t>(ex_n);
      cfg.c1 = cli_detail::split_list<double>(ex_c1);
      cfg.c2 = cli_detail::split_list<double>(ex_c2);
      cfg.trials = ex_trials;
      cfg.seed = Seed{ex_seed};
      cfg.gamma = ex_gamma;
      cfg.threads = ex_threads;
      cfg.solver_limit = ex_limit;
      cfg.progress = &err;
      err << "seeding: trial i of row (n,c1,c2) uses mix(row_seed(" << ex_seed
          << ",n,c1,c2), i); empty draws resampled\n";
      if (ex_kind == "avg") {
        const auto rows = run_avg_experiment(cfg);
        cli_detail::emit(ex_out, out, [&](std::ostream& o) {
          CsvWriter csv(o, kAvgHeader);
          for (const auto& r : rows)
            csv.row(r.n, r.c1, r.c2, r.trials, r.avg_answer_sets, r.stderr_, r.theory_finite_n,
                    r.theory_limit);
        });
      } else if (ex_kind == "dist") {
        const auto r = run_dist_experiment(cfg);
        cli_detail::emit(ex_out, out, [&](std::ostream& o) {
          CsvWriter csv(o, kDistHeader);
          for (const auto& row : r.rows) csv.row(row.k, row.empirical_avg, row.model_E_Nk, row.chi_k);
        });
        out << "difference_rate=" << format_number(r.difference_rate) << "\n";
      } else {
        const auto r = run_consistency_experiment(cfg);
        cli_detail::emit(ex_out, out, [&](std::ostream& o) {
          CsvWriter csv(o, kConsistencyHeader);
          for (const auto& row : r.rows)
            csv.row(row.n, row.c1, row.c2, row.trials, row.empirical_ratio, row.pred_full,
                    row.pred_gamma);
        });
      }
    }
  } catch (const CLI::ConversionError& e) {
    err << "error: invalid list value: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

inline int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace randlp
