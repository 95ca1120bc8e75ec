#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "hypercol/codec.h"
#include "hypercol/construction.h"
#include "hypercol/hypercube.h"
#include "hypercol/q3.h"
#include "hypercol/search.h"

namespace hypercol::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kKv };

struct RunConfig {
  std::string subcommand;
  std::string input;
  int n = 0;
  bool has_n = false;
  std::uint64_t seed = 0;
  std::int64_t samples = 100000;
  std::int64_t iterations = 10000;
  std::string variant = "auto";
  std::string format = "text";
  std::string output;
};

// Ordered key=value lines. `kv` prints them verbatim; `text` prints a title and
// aligned "key: value" rows, skipping bulk rows marked kv-only.
class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  void Add(std::string key, std::string value, bool kv_only = false) {
    rows_.push_back({std::move(key), std::move(value), kv_only, false});
  }
  void Add(std::string key, const char* value) { Add(std::move(key), std::string(value)); }
  void Add(std::string key, bool value) { Add(std::move(key), value ? "true" : "false"); }
  void Add(std::string key, std::int64_t value) { Add(std::move(key), std::to_string(value)); }
  void Add(std::string key, int value) { Add(std::move(key), std::to_string(value)); }
  void Add(std::string key, std::uint64_t value) { Add(std::move(key), std::to_string(value)); }
  void Add(std::string key, std::uint32_t value) { Add(std::move(key), std::to_string(value)); }
  // A line printed as-is in both formats.
  void Raw(std::string line) { rows_.push_back({std::move(line), {}, false, true}); }

  void Write(std::ostream& out, Format format) const {
    if (format == Format::kKv) {
      for (const Row& r : rows_) {
        if (r.raw) {
          out << r.key << '\n';
        } else {
          out << r.key << '=' << r.value << '\n';
        }
      }
      return;
    }
    std::size_t width = 0;
    for (const Row& r : rows_) {
      if (!r.raw && !r.kv_only) width = std::max(width, r.key.size());
    }
    out << title_ << '\n';
    for (const Row& r : rows_) {
      if (r.kv_only) continue;
      if (r.raw) {
        out << "  " << r.key << '\n';
      } else {
        out << "  " << std::left << std::setw(static_cast<int>(width)) << r.key << "  "
            << r.value << '\n';
      }
    }
  }

 private:
  struct Row {
    std::string key;
    std::string value;
    bool kv_only;
    bool raw;
  };
  std::string title_;
  std::vector<Row> rows_;
};

std::string Decimal(double x) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(6) << x;
  return ss.str();
}

std::string VariantName(FVariant v) { return v == FVariant::kF1 ? "f1" : "f2"; }

std::optional<FVariant> ParseVariant(const std::string& s) {
  if (s == "f1") return FVariant::kF1;
  if (s == "f2") return FVariant::kF2;
  return std::nullopt;
}

std::string WitnessLine(const Geodesic& g) {
  std::string line = "start=" + std::to_string(g.start) + " dirs=";
  for (std::size_t i = 0; i < g.dirs.size(); ++i) {
    if (i) line += ',';
    line += std::to_string(g.dirs[i]);
  }
  return line;
}

std::int64_t Choose3(std::int64_t m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; }

struct Input {
  EdgeColouring colouring;
  bool generated;
};

Input LoadInput(const RunConfig& cfg, Report& report) {
  if (!cfg.input.empty() && cfg.has_n) {
    throw UsageError("--input and --n are mutually exclusive");
  }
  if (!cfg.input.empty()) {
    Input in{ReadColouringFile(cfg.input), false};
    report.Add("source", "file:" + cfg.input);
    report.Add("n", in.colouring.dimension());
    return in;
  }
  if (!cfg.has_n) throw UsageError("one of --input or --n is required");
  Input in{RandomColouring(cfg.n, cfg.seed), true};
  report.Add("source", "random");
  report.Add("n", cfg.n);
  report.Add("seed", cfg.seed);
  return in;
}

int RunVerifyLemmas(const RunConfig&, Report& report) {
  const LemmaReport two_change = VerifyTwoChangePairForcing();
  const LemmaReport star = VerifyMonochromaticStarGood();
  const LemmaReport patterns = VerifyBadColouringPatterns();
  auto add = [&](const std::string& prefix, const std::string& hits_key, const LemmaReport& r) {
    report.Add(prefix + "_" + hits_key, r.hypothesis_hits);
    report.Add(prefix + "_counterexamples", static_cast<std::int64_t>(r.counterexamples.size()));
    for (Q3Colouring q : r.counterexamples) {
      std::string bits = Serialize(FromQ3(q)).substr(4, 12);
      report.Add(prefix + "_counterexample", bits);
    }
  };
  report.Add("colourings", kQ3Colourings);
  add("two_change_pair", "hypothesis_hits", two_change);
  add("monochromatic_star", "hypothesis_hits", star);
  add("bad_patterns", "bad_colourings", patterns);
  const bool ok = two_change.counterexamples.empty() && star.counterexamples.empty() &&
                  patterns.counterexamples.empty() && two_change.hypothesis_hits > 0;
  report.Add("verified", ok);
  return ok ? kExitOk : kExitViolation;
}

int RunClassify(const RunConfig& cfg, Report& report) {
  const Input in = LoadInput(cfg, report);
  const Q3Colouring q = ToQ3(in.colouring);
  const Classification cls = Classify(q);
  report.Add("classification", cls.good() ? "good" : "bad");
  report.Add("total_changes", cls.total_changes);
  if (cls.good()) {
    for (const Geodesic& g : cls.witness) report.Raw(WitnessLine(g));
  }
  return kExitOk;
}

int RunStats(const RunConfig& cfg, Report& report) {
  const Input in = LoadInput(cfg, report);
  const EdgeColouring& c = in.colouring;
  const ExactStats s = ComputeExactStats(c);
  report.Add("subcubes", s.subcubes);
  report.Add("good_subcubes", s.good_subcubes);
  report.Add("p", FormatFraction(s.p));
  bool ok = true;
  if (s.a && s.b) {
    report.Add("neighbour_pairs", s.neighbour_pairs);
    report.Add("good_good_pairs", s.good_good_pairs);
    report.Add("mixed_pairs", s.mixed_pairs);
    report.Add("a", FormatFraction(*s.a));
    report.Add("b", FormatFraction(*s.b));
    const bool identity = s.p == *s.a + *s.b / 2;
    report.Add("identity_p_eq_a_plus_half_b", identity);
    ok &= identity;
  }
  const int n = c.dimension();
  bool bound = true;
  for (Vertex v = 0; v <= FullMask(n); ++v) {
    int red = 0;
    for (Direction d = 0; d < n; ++d) red += c.colour(v, d) == Colour::kRed;
    bound &= s.good_count_at[v] >= Choose3(red) + Choose3(n - red);
  }
  report.Add("star_bound_holds", bound);
  ok &= bound;
  const auto [lo, hi] = std::minmax_element(s.good_count_at.begin(), s.good_count_at.end());
  report.Add("good_count_min", *lo);
  report.Add("good_count_max", *hi);
  for (Vertex v = 0; v <= FullMask(n); ++v) {
    report.Add("good_count_at_" + std::to_string(v), std::to_string(s.good_count_at[v]), true);
  }
  return ok ? kExitOk : kExitViolation;
}

std::optional<FVariant> VariantOverride(const RunConfig& cfg) {
  if (cfg.variant == "auto") return std::nullopt;
  return ParseVariant(cfg.variant);
}

void AddExpectation(const ConstructionReport& r, Report& report) {
  report.Add("p", FormatFraction(r.stats.p));
  if (r.stats.a && r.stats.b) {
    report.Add("a", FormatFraction(*r.stats.a));
    report.Add("b", FormatFraction(*r.stats.b));
  }
  report.Add("variant_mode", r.chosen_automatically ? "auto" : "override");
  report.Add("chosen", VariantName(r.chosen));
  report.Add("good_good_junctions", r.census.good_good);
  report.Add("good_good_changes_f1", r.census.good_good_changes[0]);
  report.Add("good_good_changes_f2", r.census.good_good_changes[1]);
  report.Add("mixed_junctions", r.census.mixed);
  report.Add("mixed_changes_f1", r.census.mixed_changes[0]);
  report.Add("mixed_changes_f2", r.census.mixed_changes[1]);
  report.Add("k", r.stats.n / 3);
  report.Add("block_mean", FormatFraction(r.expectation.block_mean));
  report.Add("block_mean_decimal", Decimal(ToDouble(r.expectation.block_mean)));
  report.Add("junction_mean", FormatFraction(r.expectation.junction_mean));
  report.Add("junction_mean_decimal", Decimal(ToDouble(r.expectation.junction_mean)));
  report.Add("expectation", FormatFraction(r.expectation.expectation));
  report.Add("expectation_decimal", Decimal(ToDouble(r.expectation.expectation)));
}

int RunExpectation(const RunConfig& cfg, Report& report) {
  const Input in = LoadInput(cfg, report);
  const ConstructionReport r = BuildReport(in.colouring, VariantOverride(cfg));
  AddExpectation(r, report);
  return kExitOk;
}

int RunSimulate(const RunConfig& cfg, Report& report) {
  const Input in = LoadInput(cfg, report);
  const ConstructionReport r = BuildReport(in.colouring, VariantOverride(cfg));
  AddExpectation(r, report);
  // A generated colouring already consumed the seed; sample from a derived stream.
  const std::uint64_t sample_seed = in.generated ? DeriveSeed(cfg.seed, 1) : cfg.seed;
  const MonteCarloResult mc = MonteCarloMean(in.colouring, r.chosen, cfg.samples, sample_seed);
  const double exact = ToDouble(r.expectation.expectation);
  const double deviation = std::abs(mc.mean - exact);
  const bool consistent = deviation <= 4.0 * mc.standard_error + 1e-12;
  report.Add("samples", mc.samples);
  report.Add("sample_seed", sample_seed);
  report.Add("mc_mean", Decimal(mc.mean));
  report.Add("mc_standard_error", Decimal(mc.standard_error));
  report.Add("abs_deviation", Decimal(deviation));
  report.Add("consistent", consistent);
  return consistent ? kExitOk : kExitViolation;
}

int RunMinChanges(const RunConfig& cfg, Report& report) {
  const Input in = LoadInput(cfg, report);
  const MinChangesResult r = MinAntipodalChanges(in.colouring);
  const int half = in.colouring.dimension() / 2;
  report.Add("changes", r.changes);
  report.Add("from", r.from);
  report.Add("to", r.to);
  report.Add("floor_half_n", half);
  report.Add("bound_ok", r.changes <= half);
  report.Raw(WitnessLine(r.witness));
  return r.changes <= half ? kExitOk : kExitViolation;
}

int RunAdversary(const RunConfig& cfg, Report& report) {
  if (!cfg.has_n) throw UsageError("--n is required");
  const AdversaryResult r = AdversarySearch(cfg.n, cfg.seed, cfg.iterations);
  const int half = cfg.n / 2;
  report.Add("n", cfg.n);
  report.Add("seed", cfg.seed);
  report.Add("iterations", cfg.iterations);
  report.Add("value", r.value);
  report.Add("restarts", r.restarts);
  report.Add("floor_half_n", half);
  report.Add("bound_ok", r.value <= half);
  const std::string text = Serialize(r.best);
  report.Add("colouring", text.substr(text.find('\n') + 1, r.best.edge_count()));
  return r.value <= half ? kExitOk : kExitViolation;
}

int RunGen(const RunConfig& cfg, std::ostream& out, Format format) {
  if (!cfg.has_n) throw UsageError("--n is required");
  const EdgeColouring c = RandomColouring(cfg.n, cfg.seed);
  if (cfg.output.empty()) {
    out << Serialize(c);
    return kExitOk;
  }
  WriteColouringFile(cfg.output, c);
  Report report("gen");
  report.Add("command", "gen");
  report.Add("n", cfg.n);
  report.Add("seed", cfg.seed);
  report.Add("output", cfg.output);
  report.Write(out, format);
  return kExitOk;
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Edge 2-colourings of hypercubes: lemma checks, block construction, "
               "minimum colour-change antipodal geodesics",
               "hypercol"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"text", "kv"};
  std::vector<CLI::Option*> n_options;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Colouring file");
    n_options.push_back(sub->add_option("--n", cfg.n, "Dimension of a generated colouring"));
    sub->add_option("--seed", cfg.seed, "Seed for generation (and sampling)");
  };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", cfg.variant, "Bad-cube selector variant")
        ->check(CLI::IsMember({"auto", "f1", "f2"}));
  };

  auto* verify = app.add_subcommand("verify-lemmas", "Exhaustive checks over all Q3 colourings");
  add_format(verify);

  auto* classify = app.add_subcommand("classify", "Good/bad classification of a Q3 colouring");
  add_input(classify);
  add_format(classify);

  auto* stats = app.add_subcommand("stats", "Exact p, a, b and per-vertex good counts");
  add_input(stats);
  add_format(stats);

  auto* expectation = app.add_subcommand("expectation", "Exact expected colour changes");
  add_input(expectation);
  add_variant(expectation);
  add_format(expectation);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo mean against the exact value");
  add_input(simulate);
  add_variant(simulate);
  simulate->add_option("--samples", cfg.samples, "Number of sampled geodesics")
      ->check(CLI::PositiveNumber);
  add_format(simulate);

  auto* min_changes = app.add_subcommand("min-changes", "Minimum over antipodal geodesics");
  add_input(min_changes);
  add_format(min_changes);

  auto* adversary = app.add_subcommand("adversary", "Hill-climb for colourings with large minimum");
  n_options.push_back(adversary->add_option("--n", cfg.n, "Dimension")->required());
  adversary->add_option("--seed", cfg.seed, "Seed");
  adversary->add_option("--iterations", cfg.iterations, "Hill-climbing steps")
      ->check(CLI::PositiveNumber);
  add_format(adversary);

  auto* gen = app.add_subcommand("gen", "Write a random colouring");
  n_options.push_back(gen->add_option("--n", cfg.n, "Dimension")->required());
  gen->add_option("--seed", cfg.seed, "Seed");
  gen->add_option("--output", cfg.output, "Write to this file instead of stdout");
  add_format(gen);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // A bare subcommand-less call also lands here.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (const CLI::Option* opt : n_options) cfg.has_n |= opt->count() > 0;

  CLI::App* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  const Format format = cfg.format == "kv" ? Format::kKv : Format::kText;

  try {
    if (cfg.subcommand == "gen") return RunGen(cfg, out, format);
    Report report(cfg.subcommand);
    report.Add("command", cfg.subcommand);
    int code = kExitOk;
    if (cfg.subcommand == "verify-lemmas") {
      code = RunVerifyLemmas(cfg, report);
    } else if (cfg.subcommand == "classify") {
      code = RunClassify(cfg, report);
    } else if (cfg.subcommand == "stats") {
      code = RunStats(cfg, report);
    } else if (cfg.subcommand == "expectation") {
      code = RunExpectation(cfg, report);
    } else if (cfg.subcommand == "simulate") {
      code = RunSimulate(cfg, report);
    } else if (cfg.subcommand == "min-changes") {
      code = RunMinChanges(cfg, report);
    } else if (cfg.subcommand == "adversary") {
      code = RunAdversary(cfg, report);
    }
    report.Write(out, format);
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace hypercol::cli
