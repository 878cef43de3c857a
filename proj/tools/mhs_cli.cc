// Command line front end for the minimal hitting set library.
//
// Exit codes:
//   0  success
//   1  usage, parse, or validation error
//   2  timeout (enumerate --timeout)
//   3  memory exhausted
//   4  mismatch (verify, or a cross-validation mismatch in bench)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <new>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mhs/bench.h"
#include "mhs/enumerate.h"
#include "mhs/errors.h"
#include "mhs/generators.h"
#include "mhs/io.h"
#include "mhs/oracle.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitMemory = 3;
constexpr int kExitMismatch = 4;

struct EnumerateArgs {
  std::string input;
  std::string format;
  std::string algorithm;
  std::optional<std::size_t> cutoff;
  std::size_t threads = 1;
  bool count_only = false;
  std::string output;
  std::optional<double> timeout;
  double rank_fraction = 1.0;
  std::optional<std::size_t> max_results;
};

struct VerifyArgs {
  std::string input;
  std::string format;
  std::string algorithm;
  std::optional<std::size_t> cutoff;
  double rank_fraction = 1.0;
  std::optional<std::size_t> max_results;
};

struct BenchArgs {
  std::string config;
  std::string out;
};

mhs::FileFormat InputFormat(const std::string& path, const std::string& name) {
  if (name.empty()) return mhs::FormatFromPath(path);
  const auto format = mhs::ParseFormat(name);
  if (!format) throw mhs::ValidationError("unknown format '" + name + "'; use json or dat");
  return *format;
}

mhs::Algorithm RequireAlgorithm(const std::string& name) {
  const auto algorithm = mhs::ParseAlgorithm(name);
  if (!algorithm) {
    throw mhs::ValidationError("unknown algorithm '" + name +
                               "'; valid names: " + mhs::AlgorithmNameList());
  }
  return *algorithm;
}

void StartWatchdog(double seconds) {
  std::thread([seconds] {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    std::fputs("timeout\n", stderr);
    std::fflush(stderr);
    std::_Exit(kExitTimeout);
  }).detach();
}

int RunEnumerate(const EnumerateArgs& args) {
  const mhs::Algorithm algorithm = RequireAlgorithm(args.algorithm);
  if (args.timeout) {
    if (!(*args.timeout > 0.0)) throw mhs::ValidationError("--timeout must be positive");
    StartWatchdog(*args.timeout);
  }
  const mhs::SetFamily family = mhs::ReadFamily(args.input, InputFormat(args.input, args.format));

  mhs::EnumerationRequest request;
  request.algorithm = algorithm;
  request.cutoff = args.cutoff;
  request.threads = args.threads;
  request.mode = args.count_only ? mhs::OutputMode::kCountOnly : mhs::OutputMode::kList;
  request.rank_fraction = args.rank_fraction;
  request.max_results = args.max_results;

  const auto start = std::chrono::steady_clock::now();
  const mhs::EnumerationOutcome outcome = mhs::Enumerate(family, request);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "count " << outcome.count << "\ntime " << seconds << "s\n";

  if (args.count_only) return kExitOk;
  if (args.output.empty()) {
    std::cout << mhs::FormatCollection(outcome.collection, mhs::FileFormat::kJson);
  } else {
    mhs::WriteCollection(args.output, mhs::FormatFromPath(args.output), outcome.collection);
  }
  return kExitOk;
}

int RunVerify(const VerifyArgs& args) {
  const mhs::Algorithm algorithm = RequireAlgorithm(args.algorithm);
  const mhs::SetFamily family = mhs::ReadFamily(args.input, InputFormat(args.input, args.format));
  if (family.universe_size() > mhs::kDefaultOracleLimit) {
    throw mhs::ValidationError("universe of " + std::to_string(family.universe_size()) +
                               " elements exceeds the oracle limit of " +
                               std::to_string(mhs::kDefaultOracleLimit));
  }
  mhs::EnumerationRequest request;
  request.algorithm = algorithm;
  request.cutoff = args.cutoff;
  request.rank_fraction = args.rank_fraction;
  request.max_results = args.max_results;
  mhs::MhsCollection actual = mhs::Enumerate(family, request).collection;
  mhs::MhsCollection expected = mhs::BruteForceMhs(family, args.cutoff);
  actual.Canonicalize();
  expected.Canonicalize();

  std::vector<mhs::ElementSet> missing;
  std::vector<mhs::ElementSet> unexpected;
  const auto less = [](const mhs::ElementSet& a, const mhs::ElementSet& b) {
    return mhs::CanonicalLess(a, b);
  };
  std::set_difference(expected.sets.begin(), expected.sets.end(), actual.sets.begin(),
                      actual.sets.end(), std::back_inserter(missing), less);
  std::set_difference(actual.sets.begin(), actual.sets.end(), expected.sets.begin(),
                      expected.sets.end(), std::back_inserter(unexpected), less);
  if (missing.empty() && unexpected.empty()) {
    std::cout << "match: " << actual.sets.size() << " minimal hitting sets\n";
    return kExitOk;
  }
  std::cout << "mismatch: " << args.algorithm << " returned " << actual.sets.size()
            << " sets, oracle " << expected.sets.size() << "\n";
  if (!unexpected.empty()) {
    std::cout << "witness " << unexpected.front().ToString() << " is not a minimal hitting set\n";
  } else {
    std::cout << "witness " << missing.front().ToString() << " is missing\n";
  }
  return kExitMismatch;
}

int RunBench(const BenchArgs& args) {
  const std::filesystem::path config_path = args.config;
  const mhs::BenchmarkConfig config =
      mhs::ParseBenchmarkConfig(mhs::ReadTextFile(config_path), config_path.parent_path());
  const std::filesystem::path out = args.out;
  std::filesystem::create_directories(out);

  const mhs::BenchmarkResult result = mhs::RunBenchmark(config, &std::cerr);
  const auto verdicts = mhs::CrossValidate(result.records, result.outputs);
  mhs::WriteTextFile(out / "records.csv", mhs::RecordsCsv(result.records));
  mhs::WriteTextFile(out / "tables.txt", mhs::EmitTables(result.records, mhs::TableFormat::kText));
  mhs::WriteTextFile(out / "tables.csv", mhs::EmitTables(result.records, mhs::TableFormat::kCsv));
  mhs::WriteTextFile(out / "crossval.txt", mhs::CrossValidationReport(verdicts));

  const bool mismatch = std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) {
    return v.agreement == mhs::Agreement::kMismatch;
  });
  return mismatch ? kExitMismatch : kExitOk;
}

int RunGenerate(const std::vector<std::string>& recipe) {
  std::cout << mhs::FormatFamily(mhs::GenerateFromArgs(recipe), mhs::FileFormat::kJson);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal hitting set enumeration"};
  app.require_subcommand(1);

  EnumerateArgs enumerate_args;
  CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate minimal hitting sets");
  enumerate->add_option("--input", enumerate_args.input, "Input family")->required();
  enumerate->add_option("--format", enumerate_args.format, "json or dat (default: by extension)");
  enumerate->add_option("--algorithm", enumerate_args.algorithm, "Algorithm name")->required();
  enumerate->add_option("--cutoff", enumerate_args.cutoff, "Largest cardinality to report");
  enumerate->add_option("--threads", enumerate_args.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--count-only", enumerate_args.count_only, "Report the count only");
  enumerate->add_option("--output", enumerate_args.output,
                        "Output file (.dat for dat, json otherwise; default stdout)");
  enumerate->add_option("--timeout", enumerate_args.timeout, "Wall-clock limit in seconds");
  enumerate->add_option("--rank-fraction", enumerate_args.rank_fraction,
                        "staccato: fraction of ranked elements explored");
  enumerate->add_option("--max-results", enumerate_args.max_results,
                        "staccato: stop after this many sets");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Compare an algorithm with the oracle");
  verify->add_option("--input", verify_args.input, "Input family")->required();
  verify->add_option("--format", verify_args.format, "json or dat (default: by extension)");
  verify->add_option("--algorithm", verify_args.algorithm, "Algorithm name")->required();
  verify->add_option("--cutoff", verify_args.cutoff, "Largest cardinality to report");
  verify->add_option("--rank-fraction", verify_args.rank_fraction,
                     "staccato: fraction of ranked elements explored");
  verify->add_option("--max-results", verify_args.max_results,
                     "staccato: stop after this many sets");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark configuration");
  bench->add_option("--config", bench_args.config, "JSON configuration")->required();
  bench->add_option("--out", bench_args.out, "Output directory")->required();

  std::vector<std::string> recipe;
  CLI::App* generate = app.add_subcommand(
      "generate", "Print a family: matching N | random M N MIN MAX SEED");
  generate->add_option("recipe", recipe, "Generator and its arguments")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate->parsed()) return RunEnumerate(enumerate_args);
    if (verify->parsed()) return RunVerify(verify_args);
    if (bench->parsed()) return RunBench(bench_args);
    return RunGenerate(recipe);
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kExitMemory;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
