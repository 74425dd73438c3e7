// Copyright 2026 The abtour Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "abtour/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "abtour/analysis.hpp"
#include "abtour/bench.hpp"
#include "abtour/construct.hpp"
#include "abtour/core.hpp"
#include "abtour/io.hpp"
#include "abtour/oracle.hpp"
#include "json.hpp"

namespace abtour::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv, kTable };
enum class Method { kNaive, kPigeonhole, kMinimax };

struct RunConfig {
  std::string command;
  std::string scores_inline;
  std::string scores_file;
  std::string matrix_file;
  Method method = Method::kMinimax;
  std::optional<Score> a;
  std::optional<Score> b;
  Format format = Format::kJson;
  std::uint64_t seed = 1;

  std::optional<Score> pair_cap;
  Score a_floor = 0;
  std::size_t n_max = 0;
  Score d_max = 0;
  unsigned threads = 0;
  std::vector<std::size_t> bench_sizes{1'000, 10'000, 100'000, 1'000'000};
  std::vector<std::size_t> minimax_sizes{50, 100, 200};
  Score d_ratio = 2;
  int reps = 5;
};

const std::map<std::string, Format> kFormats{
    {"json", Format::kJson}, {"csv", Format::kCsv}, {"table", Format::kTable}};
const std::map<std::string, Method> kMethods{{"naive", Method::kNaive},
                                             {"pigeonhole", Method::kPigeonhole},
                                             {"minimax", Method::kMinimax}};

const char* method_name(Method m) {
  switch (m) {
    case Method::kNaive: return "naive";
    case Method::kPigeonhole: return "pigeonhole";
    case Method::kMinimax: return "minimax";
  }
  return "?";
}

NormalizedScores load_scores(const RunConfig& cfg) {
  if (cfg.scores_inline.empty() == cfg.scores_file.empty()) {
    throw io::InputError("give exactly one of --scores or --scores-file");
  }
  const std::string text = cfg.scores_file.empty()
                               ? cfg.scores_inline
                               : io::read_file(cfg.scores_file);
  const std::vector<Score> raw = io::parse_scores(text);
  return normalize_sequence(raw);
}

// Original 1-based positions of the sorted scores.
Json permutation_json(const NormalizedScores& s) {
  Json perm = Json::array();
  for (std::size_t p : s.permutation) perm.push_back(p + 1);
  return perm;
}

Json scores_json(const ScoreSequence& d) {
  Json arr = Json::array();
  for (Score s : d.scores()) arr.push_back(s);
  return arr;
}

Json matrix_json(const PointMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.rows()) rows.push_back(row);
  return rows;
}

Json report_json(const VerificationReport& r) {
  return Json{{"valid", r.valid()},
              {"zero_diagonal", r.zero_diagonal},
              {"row_sums_match", r.row_sums_match},
              {"pair_totals_in_range", r.pair_totals_in_range},
              {"violations", r.violations}};
}

void print_report_text(std::ostream& os, const VerificationReport& r,
                       const IntervalParams& params) {
  os << "valid: " << (r.valid() ? "yes" : "no") << " (a=" << params.a()
     << ", b=" << params.b() << ")\n";
  os << "  zero diagonal:        " << (r.zero_diagonal ? "ok" : "FAIL") << '\n';
  os << "  row sums match:       " << (r.row_sums_match ? "ok" : "FAIL") << '\n';
  os << "  pair totals in [a,b]: " << (r.pair_totals_in_range ? "ok" : "FAIL")
     << '\n';
  for (const auto& v : r.violations) os << "  - " << v << '\n';
}

// Writes `fields` as JSON, as a two-line CSV, or as aligned "key: value".
void print_record(std::ostream& out, Format format, const Json& fields) {
  switch (format) {
    case Format::kJson:
      out << fields.dump() << '\n';
      return;
    case Format::kCsv: {
      bool first = true;
      for (const auto& [key, value] : fields.items()) {
        out << (first ? "" : ",") << key;
        first = false;
      }
      out << '\n';
      first = true;
      for (const auto& [key, value] : fields.items()) {
        out << (first ? "" : ",");
        if (value.is_array()) {
          std::string joined;
          for (const auto& v : value) joined += (joined.empty() ? "" : " ") + v.dump();
          out << joined;
        } else {
          out << value.dump();
        }
        first = false;
      }
      out << '\n';
      return;
    }
    case Format::kTable:
      for (const auto& [key, value] : fields.items()) {
        out << std::left << std::setw(14) << (key + ":") << value.dump() << '\n';
      }
      return;
  }
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const NormalizedScores s = load_scores(cfg);
  const ExtremalSummary summary = extremal_summary(s.sequence);
  Json fields{{"n", s.sequence.size()},
              {"e", summary.e},
              {"f", summary.f},
              {"g", summary.g},
              {"f_window", Json::array({summary.f_search_lo, summary.f_search_hi})},
              {"scores", scores_json(s.sequence)},
              {"permutation", permutation_json(s)}};
  print_record(out, cfg.format, fields);
  return kExitOk;
}

int cmd_test(const RunConfig& cfg, std::ostream& out) {
  const NormalizedScores s = load_scores(cfg);
  if (!cfg.a || !cfg.b) throw io::InputError("test needs --a and --b");
  const bool ok = interval_test(s.sequence, IntervalParams(*cfg.a, *cfg.b));
  print_record(out, cfg.format, Json{{"realizable", ok}});
  return ok ? kExitOk : kExitNegative;
}

int cmd_reconstruct(const RunConfig& cfg, std::ostream& out,
                    std::ostream& err) {
  const NormalizedScores s = load_scores(cfg);
  const ScoreSequence& d = s.sequence;
  const std::size_t n = d.size();
  std::optional<PointMatrix> matrix;
  std::optional<ExtremalSummary> summary;
  Score a = 0;
  Score b = 0;
  switch (cfg.method) {
    case Method::kNaive:
      matrix = naive_construct(d.scores());
      b = d[n - 2] + d[n - 1];
      break;
    case Method::kPigeonhole:
      matrix = pigeonhole_construct(d);
      b = 2 * bound_e(d);
      break;
    case Method::kMinimax: {
      MiniMaxResult r = mini_max(d);
      summary = r.summary;
      matrix = std::move(r.matrix);
      a = r.summary.g;
      b = r.summary.f;
      break;
    }
  }
  const IntervalParams params(cfg.a.value_or(a), cfg.b.value_or(b));
  const VerificationReport report = verify_realization(*matrix, d, params);
  const MatrixStats stats = matrix_stats(*matrix);

  switch (cfg.format) {
    case Format::kJson: {
      Json doc{{"method", method_name(cfg.method)},
               {"n", n},
               {"scores", scores_json(d)},
               {"permutation", permutation_json(s)}};
      if (summary) {
        doc["e"] = summary->e;
        doc["f"] = summary->f;
        doc["g"] = summary->g;
      }
      doc["a"] = params.a();
      doc["b"] = params.b();
      doc["matrix"] = matrix_json(*matrix);
      doc["stats"] = Json{{"E", stats.max_entry},
                          {"F", stats.max_pair_total},
                          {"G", stats.min_pair_total}};
      doc["report"] = report_json(report);
      out << doc.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << io::format_matrix_csv(*matrix);
      print_report_text(err, report, params);
      break;
    case Format::kTable:
      out << io::format_matrix_table(*matrix);
      out << "E=" << stats.max_entry << " F=" << stats.max_pair_total
          << " G=" << stats.min_pair_total << '\n';
      print_report_text(out, report, params);
      break;
  }
  return report.valid() ? kExitOk : kExitNegative;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const NormalizedScores s = load_scores(cfg);
  const PointMatrix m = io::parse_matrix_csv(io::read_file(cfg.matrix_file));
  const IntervalParams params(cfg.a.value_or(0),
                              cfg.b.value_or(std::numeric_limits<Score>::max()));
  const VerificationReport report = verify_realization(m, s.sequence, params);
  if (cfg.format == Format::kJson) {
    Json doc = report_json(report);
    const MatrixStats stats = matrix_stats(m);
    doc["stats"] = Json{{"E", stats.max_entry},
                        {"F", stats.max_pair_total},
                        {"G", stats.min_pair_total}};
    out << doc.dump() << '\n';
  } else {
    print_report_text(out, report, params);
  }
  return report.valid() ? kExitOk : kExitNegative;
}

std::uint64_t oracle_budget() {
  const char* env = std::getenv(kBudgetEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultOracleBudget;
  const std::vector<Score> parsed = io::parse_scores(env);
  if (parsed.size() != 1 || parsed[0] <= 0) {
    throw io::InputError(std::string(kBudgetEnvVar) +
                         " must be a positive integer");
  }
  return static_cast<std::uint64_t>(parsed[0]);
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const NormalizedScores s = load_scores(cfg);
  const Score cap = cfg.pair_cap.value_or(2 * bound_e(s.sequence));
  const OracleResult r =
      enumerate_extremes(s.sequence, cap, cfg.a_floor, oracle_budget());
  Json frontier = Json::array();
  for (const auto& p : r.frontier) {
    frontier.push_back(Json::array({p.min_total, p.max_total}));
  }
  Json doc{{"n", s.sequence.size()},
           {"scores", scores_json(s.sequence)},
           {"permutation", permutation_json(s)},
           {"pair_cap", cap},
           {"a_floor", cfg.a_floor},
           {"realizable", r.realizable},
           {"count", r.count},
           {"min_F", r.min_F ? Json(*r.min_F) : Json(nullptr)},
           {"max_G", r.max_G ? Json(*r.max_G) : Json(nullptr)},
           {"min_E", r.min_E ? Json(*r.min_E) : Json(nullptr)},
           {"frontier", frontier},
           {"witness", r.witness ? matrix_json(*r.witness) : Json(nullptr)},
           {"states", r.states}};
  if (cfg.format == Format::kJson) {
    out << doc.dump() << '\n';
  } else {
    doc.erase("witness");
    print_record(out, cfg.format, doc);
    if (cfg.format == Format::kTable && r.witness) {
      out << io::format_matrix_table(*r.witness);
    }
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const SweepReport report =
      sweep(cfg.n_max, cfg.d_max, cfg.threads, oracle_budget());
  Json by_length = Json::object();
  for (std::size_t n = 2; n < report.sequences_by_length.size(); ++n) {
    by_length[std::to_string(n)] = report.sequences_by_length[n];
  }
  Json doc{{"n_max", cfg.n_max},
           {"d_max", cfg.d_max},
           {"sequences", report.sequences},
           {"by_length", by_length},
           {"mismatches", report.mismatches}};
  if (cfg.format == Format::kJson) {
    out << doc.dump() << '\n';
  } else {
    out << "sequences: " << report.sequences << '\n'
        << "mismatches: " << report.mismatches.size() << '\n';
    for (const auto& m : report.mismatches) out << "  " << m << '\n';
  }
  return report.mismatches.empty() ? kExitOk : kExitNegative;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  if (cfg.reps < 1) throw io::InputError("--reps must be positive");
  std::mt19937_64 rng(cfg.seed);
  out << "operation,n,d_max,reps,median_seconds\n";
  auto row = [&](const char* op, std::size_t n, Score d_max, double secs) {
    out << op << ',' << n << ',' << d_max << ',' << cfg.reps << ','
        << std::setprecision(6) << std::scientific << secs << '\n';
  };
  for (std::size_t n : cfg.bench_sizes) {
    const Score d_max = std::min<Score>(kMaxScore, cfg.d_ratio * static_cast<Score>(n));
    const ScoreSequence d = bench::random_scores(n, d_max, rng);
    const PrefixTables t = prefix_tables(d);
    const Score f = min_f(d);
    row("interval_test", n, d_max, bench::median_seconds(cfg.reps, [&] {
          bench::keep(interval_test(d, t, IntervalParams(0, f)));
        }));
    row("min_f", n, d_max, bench::median_seconds(cfg.reps, [&] {
          bench::keep(min_f(d));
        }));
  }
  for (std::size_t n : cfg.minimax_sizes) {
    const Score d_max = cfg.d_ratio * static_cast<Score>(n);
    const ScoreSequence d = bench::random_scores(n, d_max, rng);
    row("mini_max", n, d_max, bench::median_seconds(cfg.reps, [&] {
          bench::keep(mini_max(d));
        }));
  }
  return kExitOk;
}

void add_score_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--scores", cfg.scores_inline,
                  "Scores, comma- or whitespace-separated (any order)");
  sub->add_option("--scores-file", cfg.scores_file,
                  "File with comma/whitespace-separated scores")
      ->check(CLI::ExistingFile);
}

void add_format_option(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Score sequences of (a,b,n)-tournaments", "abtour"};
  app.require_subcommand(1, 1);

  auto* bounds = app.add_subcommand("bounds", "Print n, e, f, g");
  add_score_options(bounds, cfg);
  add_format_option(bounds, cfg);

  auto* test = app.add_subcommand("test", "Decide realizability for given a, b");
  add_score_options(test, cfg);
  add_format_option(test, cfg);
  test->add_option("--a", cfg.a, "Minimum points per match")->required();
  test->add_option("--b", cfg.b, "Maximum points per match")->required();

  auto* reconstruct =
      app.add_subcommand("reconstruct", "Build a point matrix for the scores");
  add_score_options(reconstruct, cfg);
  add_format_option(reconstruct, cfg);
  reconstruct->add_option("--method", cfg.method, "Constructor")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  reconstruct->add_option("--a", cfg.a, "Override a for the verification");
  reconstruct->add_option("--b", cfg.b, "Override b for the verification");

  auto* verify = app.add_subcommand("verify", "Check a point matrix file");
  add_score_options(verify, cfg);
  add_format_option(verify, cfg);
  verify->add_option("--matrix", cfg.matrix_file, "CSV point matrix")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--a", cfg.a, "Minimum pair total (default 0)");
  verify->add_option("--b", cfg.b, "Maximum pair total (default unbounded)");

  auto* oracle = app.add_subcommand("oracle", "Enumerate all small realizations");
  add_score_options(oracle, cfg);
  add_format_option(oracle, cfg);
  oracle->add_option("--pair-cap", cfg.pair_cap,
                     "Largest pair total searched (default 2*ceil(d_n/(n-1)))");
  oracle->add_option("--a-floor", cfg.a_floor, "Smallest pair total searched");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Cross-check analysis against enumeration");
  add_format_option(sweep_cmd, cfg);
  sweep_cmd->add_option("--n-max", cfg.n_max, "Largest player count")->required();
  sweep_cmd->add_option("--d-max", cfg.d_max, "Largest score")->required();
  sweep_cmd->add_option("--threads", cfg.threads, "Workers (0 = all cores)");

  auto* bench_cmd = app.add_subcommand("bench", "Time the algorithms (CSV)");
  bench_cmd->add_option("--seed", cfg.seed, "RNG seed");
  bench_cmd->add_option("--sizes", cfg.bench_sizes,
                        "n values for interval_test and min_f")
      ->delimiter(',');
  bench_cmd->add_option("--minimax-sizes", cfg.minimax_sizes,
                        "n values for mini_max")
      ->delimiter(',');
  bench_cmd->add_option("--d-ratio", cfg.d_ratio, "d_max = ratio * n")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--reps", cfg.reps, "Repetitions per measurement");

  std::vector<const char*> argv{"abtour"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "bounds") return cmd_bounds(cfg, out);
    if (cfg.command == "test") return cmd_test(cfg, out);
    if (cfg.command == "reconstruct") return cmd_reconstruct(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "oracle") return cmd_oracle(cfg, out);
    if (cfg.command == "sweep") return cmd_sweep(cfg, out);
    return cmd_bench(cfg, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::kOracleBudgetExceeded ? kExitBudget
                                                        : kExitUsage;
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace abtour::cli
