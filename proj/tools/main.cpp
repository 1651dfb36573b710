#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gridcycles/cache.hpp"
#include "gridcycles/closedforms.hpp"
#include "gridcycles/equivalence.hpp"
#include "gridcycles/errors.hpp"
#include "gridcycles/oeis.hpp"
#include "gridcycles/oracle.hpp"
#include "gridcycles/report.hpp"
#include "gridcycles/verify.hpp"
#include "gridcycles/words.hpp"

namespace gc = gridcycles;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitNetwork = 4;

struct CommonOpts {
  std::string format = "json";
  int budget_max_n = 11;
  int shards = 4;
  std::string cache_dir;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool cacheable) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  cmd->add_option("--budget-max-n", opts.budget_max_n,
                  "Largest n the enumeration oracle will accept");
  cmd->add_option("--shards", opts.shards,
                  "Parallel shards for oracle scans (never changes results)")
      ->check(CLI::PositiveNumber);
  if (cacheable) {
    cmd->add_option("--cache-dir", opts.cache_dir,
                    "Directory for the result cache (off when unset)")
        ->envname("GRIDCYCLES_CACHE_DIR");
  }
}

gc::OracleBudget budget_of(const CommonOpts& opts) {
  gc::OracleBudget budget;
  budget.max_n = opts.budget_max_n;
  budget.parallel_shards = opts.shards;
  return budget;
}

std::string join_longs(const std::vector<long>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

nlohmann::json record_row(const gc::VerificationRecord& record) {
  nlohmann::json row;
  row["claim"] = record.claim;
  row["sigma"] = record.sigma;
  row["n"] = record.n;
  row["pos"] = record.pos ? nlohmann::json(*record.pos) : nlohmann::json();
  row["eval"] =
      record.eval ? nlohmann::json(join_longs(*record.eval)) : nlohmann::json();
  row["left"] = record.left.str();
  row["right"] = record.right.str();
  row["match"] = record.match();
  row["known_discrepancy"] = record.known_discrepancy;
  row["note"] = record.note;
  row["method"] = "cross-check";
  return row;
}

const std::vector<std::string> kRecordColumns = {
    "claim", "sigma", "n",     "pos",
    "eval",  "left",  "right", "match",
    "known_discrepancy", "note"};

// Exit code implied by an already-rendered document; used identically for
// fresh and cached results.
int exit_code_for(const std::string& command, const nlohmann::json& document) {
  const nlohmann::json& payload = document.at("payload");
  if (command == "count") {
    if (payload.value("verdict", "") == "mismatch" &&
        !payload.value("known_discrepancy", false)) {
      return kExitVerificationFailure;
    }
    return kExitOk;
  }
  if (command == "conjecture") {
    for (const auto& row : payload.at("rows")) {
      if (!row.value("match", true)) return kExitVerificationFailure;
    }
  }
  return kExitOk;
}

int run_cacheable(const CommonOpts& opts, const std::string& command,
                  const nlohmann::json& parameters,
                  const std::function<gc::Report()>& build) {
  const gc::OutputFormat format = gc::parse_format(opts.format);
  gc::Cache cache;
  if (!opts.cache_dir.empty()) cache = gc::Cache(opts.cache_dir);

  nlohmann::json document;
  std::string canonical;
  if (cache.enabled()) {
    if (auto hit = cache.load(command, parameters)) {
      canonical = *hit;
      document = nlohmann::json::parse(canonical);
    }
  }
  if (document.is_null()) {
    gc::Report report = build();
    document = report.document();
    canonical = document.dump(2) + "\n";
    if (cache.enabled()) cache.store(command, parameters, canonical);
  }
  if (format == gc::OutputFormat::json) {
    std::cout << canonical;
  } else {
    std::cout << gc::render_document(document, format);
  }
  return exit_code_for(command, document);
}

// ---- count ----------------------------------------------------------------

struct CountArgs {
  std::string sigma;
  int n = 0;
  std::string method = "both";
  CommonOpts common;
};

int run_count(const CountArgs& args) {
  const gc::Signature sigma = gc::Signature::parse(args.sigma);
  const std::optional<int> index = sigma.table_index();
  const bool wants_formula = args.method != "oracle";
  if (wants_formula && !index) {
    throw std::invalid_argument(
        "count: the formula method covers only the eight length-3 "
        "signatures; use --method oracle for " + sigma.str());
  }
  nlohmann::json parameters = {
      {"sigma", sigma.str()}, {"n", args.n}, {"method", args.method}};

  return run_cacheable(args.common, "count", parameters, [&] {
    gc::Report report;
    report.command = "count";
    report.parameters = parameters;
    report.columns = {"sigma", "n", "method", "value"};

    std::optional<gc::ExactInt> formula_value;
    std::optional<gc::ExactInt> oracle_value;
    if (args.method != "oracle") {
      formula_value = gc::class_count_formula(*index, args.n);
      report.rows.push_back({{"sigma", sigma.str()},
                             {"n", args.n},
                             {"method", "formula"},
                             {"value", formula_value->str()}});
    }
    if (args.method != "formula") {
      oracle_value =
          gc::count_cyclic_in_class(sigma, args.n, budget_of(args.common));
      report.rows.push_back({{"sigma", sigma.str()},
                             {"n", args.n},
                             {"method", "oracle"},
                             {"value", oracle_value->str()}});
    }
    if (index && *index <= 2) {
      report.extras["known_discrepancy"] = true;
      report.extras["note"] =
          std::string("the printed closed form counts n-cycles with exactly "
                      "two ") +
          (*index == 1 ? "descents" : "ascents") +
          ", not the class; see `verify --target c12_report`";
    }
    if (formula_value && oracle_value) {
      report.extras["verdict"] =
          *formula_value == *oracle_value ? "match" : "mismatch";
    }
    return report;
  });
}

// ---- sequence -------------------------------------------------------------

struct SequenceArgs {
  std::string sigma;
  int n_max = 0;
  std::string method = "auto";
  CommonOpts common;
};

int run_sequence(const SequenceArgs& args) {
  const gc::Signature sigma = gc::Signature::parse(args.sigma);
  const std::optional<int> index = sigma.table_index();
  if (args.n_max < 3) {
    throw std::invalid_argument("sequence: --n-max must be >= 3");
  }
  if (args.method == "formula" && !index) {
    throw std::invalid_argument(
        "sequence: the formula method covers only the eight length-3 "
        "signatures; use --method oracle for " + sigma.str());
  }
  const bool use_formula =
      args.method == "formula" || (args.method == "auto" && index && *index >= 3);
  nlohmann::json parameters = {{"sigma", sigma.str()},
                               {"n_max", args.n_max},
                               {"method", args.method}};

  return run_cacheable(args.common, "sequence", parameters, [&] {
    gc::Report report;
    report.command = "sequence";
    report.parameters = parameters;
    report.columns = {"n", "value", "method"};
    for (int n = 3; n <= args.n_max; ++n) {
      gc::ExactInt value =
          use_formula
              ? gc::class_count_formula(*index, n)
              : gc::count_cyclic_in_class(sigma, n, budget_of(args.common));
      report.rows.push_back({{"n", n},
                             {"value", value.str()},
                             {"method", use_formula ? "formula" : "oracle"}});
    }
    if (use_formula && *index <= 2) {
      report.extras["note"] =
          std::string("printed-form values: these count n-cycles with "
                      "exactly two ") +
          (*index == 1 ? "descents" : "ascents") + ", not the class";
    }
    return report;
  });
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string target = "all";
  int n_max = 8;
  CommonOpts common;
};

int run_verify_cmd(const VerifyArgs& args) {
  const gc::VerifyTarget target = gc::parse_verify_target(args.target);
  const gc::VerifySummary summary =
      gc::run_verify(target, args.n_max, budget_of(args.common));

  gc::Report report;
  report.command = "verify";
  report.parameters = {{"target", gc::verify_target_name(target)},
                       {"n_max", args.n_max}};
  report.columns = kRecordColumns;
  for (const auto& record : summary.records) {
    report.rows.push_back(record_row(record));
  }
  report.extras["complete"] = summary.complete;
  report.extras["passed"] = summary.passed();
  if (!summary.complete) report.extras["stop_reason"] = summary.stop_reason;

  std::cout << report.render(gc::parse_format(args.common.format));
  if (!summary.passed()) return kExitVerificationFailure;
  if (!summary.complete) return kExitBudget;
  return kExitOk;
}

// ---- classes --------------------------------------------------------------

struct ClassesArgs {
  int n_max = 9;
  std::string method = "oracle";
  CommonOpts common;
};

int run_classes(const ClassesArgs& args) {
  nlohmann::json parameters = {{"n_max", args.n_max}, {"counter", args.method}};
  return run_cacheable(args.common, "classes", parameters, [&] {
    std::vector<gc::Signature> signatures;
    for (int index = 1; index <= 8; ++index) {
      signatures.push_back(gc::Signature::from_index(index));
    }
    const gc::CounterKind counter = args.method == "formula"
                                        ? gc::CounterKind::formula
                                        : gc::CounterKind::oracle;
    const gc::EquivalenceReport result = gc::classify(
        signatures, args.n_max, counter, budget_of(args.common));

    gc::Report report;
    report.command = "classes";
    report.parameters = parameters;
    report.columns = {"sigma", "counts", "method"};
    for (size_t s = 0; s < signatures.size(); ++s) {
      std::string counts;
      for (size_t t = 0; t < result.counts[s].size(); ++t) {
        if (t > 0) counts.push_back(',');
        counts += result.counts[s][t].str();
      }
      report.rows.push_back({{"sigma", signatures[s].str()},
                             {"counts", counts},
                             {"method", args.method}});
    }
    auto classes_json = [&](const std::vector<std::vector<int>>& classes) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& members : classes) {
        nlohmann::json group = nlohmann::json::array();
        for (int m : members) {
          group.push_back(signatures[static_cast<size_t>(m)].str());
        }
        out.push_back(group);
      }
      return out;
    };
    report.extras["n_min"] = result.n_min;
    report.extras["n_max"] = result.n_max;
    report.extras["full_classes"] = classes_json(result.full_classes);
    report.extras["weak_classes"] = classes_json(result.weak_classes);
    nlohmann::json disagreements = nlohmann::json::array();
    for (const auto& pair : result.disagreements) {
      disagreements.push_back(
          {{"a", signatures[static_cast<size_t>(pair.a)].str()},
           {"b", signatures[static_cast<size_t>(pair.b)].str()},
           {"first_n", pair.first_n ? nlohmann::json(*pair.first_n)
                                    : nlohmann::json()}});
    }
    report.extras["first_disagreements"] = disagreements;
    return report;
  });
}

// ---- conjecture -----------------------------------------------------------

struct ConjectureArgs {
  std::string which;
  int k_max = 4;
  int n_max = 9;
  CommonOpts common;
};

int run_conjecture(const ConjectureArgs& args) {
  nlohmann::json parameters = {
      {"which", args.which}, {"k_max", args.k_max}, {"n_max", args.n_max}};
  return run_cacheable(args.common, "conjecture", parameters, [&] {
    std::vector<gc::VerificationRecord> records =
        args.which == "complement"
            ? gc::conjecture_complement(args.k_max, args.n_max,
                                        budget_of(args.common))
            : gc::conjecture_alternating(args.k_max, args.n_max,
                                         budget_of(args.common));
    gc::Report report;
    report.command = "conjecture";
    report.parameters = parameters;
    report.columns = kRecordColumns;
    long counterexamples = 0;
    for (const auto& record : records) {
      if (!record.match()) ++counterexamples;
      report.rows.push_back(record_row(record));
    }
    report.extras["counterexamples"] = counterexamples;
    return report;
  });
}

// ---- oeis -----------------------------------------------------------------

struct OeisArgs {
  std::string terms;
  bool enable_network = false;
  CommonOpts common;
};

int run_oeis(const OeisArgs& args) {
  std::vector<std::string> terms;
  size_t start = 0;
  while (start <= args.terms.size() && !args.terms.empty()) {
    size_t comma = args.terms.find(',', start);
    std::string token = args.terms.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token.empty() ||
        token.find_first_not_of("0123456789-") != std::string::npos ||
        token.find('-', 1) != std::string::npos) {
      throw std::invalid_argument("oeis: bad term \"" + token + "\"");
    }
    terms.push_back(token);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }

  const gc::OeisResult result = gc::oeis_lookup(terms, args.enable_network);

  gc::Report report;
  report.command = "oeis";
  report.parameters = {{"terms", terms},
                       {"network_enabled", args.enable_network}};
  report.columns = {"id", "name"};
  for (const auto& hit : result.hits) {
    report.rows.push_back(
        {{"id", hit.id}, {"name", hit.name}, {"method", "network"}});
  }
  report.extras["status"] = result.status;
  if (!result.error.empty()) report.extras["error"] = result.error;
  if (!result.raw_body.empty()) report.extras["raw_body"] = result.raw_body;

  std::cout << report.render(gc::parse_format(args.common.format));
  return result.status == "error" ? kExitNetwork : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of cyclic permutations in monotone grid classes"};
  app.require_subcommand(1);

  CountArgs count_args;
  CLI::App* count = app.add_subcommand("count", "Count one (sigma, n) class");
  count->add_option("--sigma", count_args.sigma,
                    "Signature literal (\"+-+\") or table index (\"s3\")")
      ->required();
  count->add_option("--n", count_args.n, "Permutation length")->required();
  count->add_option("--method", count_args.method, "formula, oracle, or both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));
  add_common(count, count_args.common, true);

  SequenceArgs sequence_args;
  CLI::App* sequence =
      app.add_subcommand("sequence", "Emit c(n) for n = 3..n_max");
  sequence->add_option("--sigma", sequence_args.sigma,
                       "Signature literal or table index")
      ->required();
  sequence->add_option("--n-max", sequence_args.n_max, "Largest n")->required();
  sequence->add_option("--method", sequence_args.method,
                       "auto, formula, or oracle")
      ->check(CLI::IsMember({"auto", "formula", "oracle"}));
  add_common(sequence, sequence_args.common, true);

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "Cross-check formulas against enumeration");
  verify->add_option("--target", verify_args.target,
                     "bijection, refined, lemmas, c3..c8, c12_report, or all")
      ->check(CLI::IsMember(
          {"bijection", "refined", "lemmas", "c3..c8", "c12_report", "all"}));
  verify->add_option("--n-max", verify_args.n_max,
                     "Largest n for the oracle-backed checks");
  add_common(verify, verify_args.common, false);

  ClassesArgs classes_args;
  CLI::App* classes =
      app.add_subcommand("classes", "Equivalence classes of the eight signatures");
  classes->add_option("--n-max", classes_args.n_max,
                      "Largest n in the compared sequences");
  classes->add_option("--method", classes_args.method, "oracle or formula")
      ->check(CLI::IsMember({"oracle", "formula"}));
  add_common(classes, classes_args.common, true);

  ConjectureArgs conjecture_args;
  CLI::App* conjecture =
      app.add_subcommand("conjecture", "Probe the open conjectures");
  conjecture
      ->add_option("--which", conjecture_args.which,
                   "complement or alternating")
      ->required()
      ->check(CLI::IsMember({"complement", "alternating"}));
  conjecture->add_option("--k-max", conjecture_args.k_max,
                         "Largest signature length");
  conjecture->add_option("--n-max", conjecture_args.n_max, "Largest n");
  add_common(conjecture, conjecture_args.common, true);

  OeisArgs oeis_args;
  CLI::App* oeis = app.add_subcommand("oeis", "Look terms up in the OEIS");
  oeis->add_option("--terms", oeis_args.terms,
                   "Comma-separated integer terms (at least 4)")
      ->required();
  oeis->add_flag("--enable-network", oeis_args.enable_network,
                 "Allow the HTTP query (off by default)");
  add_common(oeis, oeis_args.common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(count_args);
    if (sequence->parsed()) return run_sequence(sequence_args);
    if (verify->parsed()) return run_verify_cmd(verify_args);
    if (classes->parsed()) return run_classes(classes_args);
    if (conjecture->parsed()) return run_conjecture(conjecture_args);
    if (oeis->parsed()) return run_oeis(oeis_args);
  } catch (const gc::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const gc::network_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNetwork;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
