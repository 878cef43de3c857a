#ifndef MHS_BENCH_H_
#define MHS_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhs/io.h"
#include "mhs/set_family.h"

namespace mhs {

enum class CellStatus { kOk, kTimeout, kMemoryExhausted, kError };

// "ok", "timeout", "memory-exhausted", "error".
std::string_view CellStatusName(CellStatus status);

struct DatasetSpec {
  std::string id;
  // Exactly one of path / generator is set.
  std::optional<std::filesystem::path> path;
  FileFormat format = FileFormat::kJson;
  std::vector<std::string> generator;
};

struct BenchmarkConfig {
  std::vector<DatasetSpec> datasets;
  std::vector<std::string> algorithms;
  std::vector<Cutoff> cutoffs{std::nullopt};
  std::vector<std::size_t> thread_counts{1};
  double timeout_seconds = 3600.0;
  std::size_t repetitions = 3;
  // Address-space limit applied to each child process.
  std::optional<std::size_t> memory_limit_mb;
  // Collections up to this size are shipped back for cross-validation
  // witnesses; larger ones are compared by fingerprint only.
  std::size_t retain_limit = 100000;
  // Run several cells at once. Timings then compete for cores.
  bool parallel_cells = false;
};

// Throws ValidationError unless repetitions is odd and timeout positive.
void ValidateConfig(const BenchmarkConfig& config);

// JSON config:
//   {"datasets": [{"id": "m10", "generate": "matching 10"},
//                 {"id": "acc", "path": "accident.dat", "format": "dat"}],
//    "algorithms": ["mmcs", "rs"], "cutoffs": [null, 5], "threads": [1, 2],
//    "timeout": 3600, "repetitions": 3, "memory_limit_mb": 8192,
//    "retain_limit": 100000, "parallel_cells": false}
// Relative dataset paths resolve against `base_dir`.
BenchmarkConfig ParseBenchmarkConfig(std::string_view json_text,
                                     const std::filesystem::path& base_dir = {});

struct BenchmarkRecord {
  std::string dataset;
  std::string algorithm;
  Cutoff cutoff;
  std::size_t threads = 1;
  CellStatus status = CellStatus::kOk;
  // Present iff status is ok.
  std::optional<double> median_seconds;
  std::optional<std::uint64_t> mhs_count;
  std::string message;
};

// Order-independent digest of a collection's canonical form.
struct CollectionFingerprint {
  std::uint64_t count = 0;
  std::uint64_t hash = 0;
  friend bool operator==(const CollectionFingerprint&, const CollectionFingerprint&) = default;
};

// `sets` need not be sorted.
CollectionFingerprint Fingerprint(std::vector<ElementSet> sets);

struct RetainedOutput {
  std::string dataset;
  std::string algorithm;
  Cutoff cutoff;
  std::size_t threads = 1;
  CollectionFingerprint fingerprint;
  // Canonically sorted members when the collection was small enough.
  std::optional<std::vector<ElementSet>> sets;
};

struct BenchmarkResult {
  std::vector<BenchmarkRecord> records;
  std::vector<RetainedOutput> outputs;
};

// Runs every (dataset, algorithm, cutoff, threads) cell. Algorithms without
// cutoff support get no cutoff cells; single-threaded algorithms get one
// cell per cutoff at threads = 1. A failing cell never stops the sweep.
BenchmarkResult RunBenchmark(const BenchmarkConfig& config, std::ostream* progress = nullptr);

// Result of one isolated child run.
struct ChildRun {
  CellStatus status = CellStatus::kError;
  // Wall time from fork to reap.
  double seconds = 0.0;
  CollectionFingerprint fingerprint;
  std::optional<std::vector<ElementSet>> sets;
  std::string message;
};

// Forks, runs `work` in the child, and waits at most `timeout_seconds`.
// std::bad_alloc in the child, or the child being killed by the kernel,
// reports kMemoryExhausted.
ChildRun RunIsolated(const std::function<MhsCollection()>& work, double timeout_seconds,
                     std::optional<std::size_t> memory_limit_mb = std::nullopt,
                     std::size_t retain_limit = 0);

// Median of an odd-sized sample.
double Median(std::vector<double> samples);

enum class Agreement { kAgree, kMismatch, kInsufficientData };

struct CrossValidationVerdict {
  std::string dataset;
  Cutoff cutoff;
  Agreement agreement = Agreement::kInsufficientData;
  // Labels "algorithm@threads" of the compared runs on mismatch.
  std::string first;
  std::string second;
  // A set in exactly one of the two collections, when both were retained.
  std::optional<ElementSet> witness;
  std::string detail;
};

// Compares all retained outputs of ok cells sharing a dataset and cutoff.
std::vector<CrossValidationVerdict> CrossValidate(const std::vector<BenchmarkRecord>& records,
                                                  const std::vector<RetainedOutput>& outputs);

enum class TableFormat { kText, kCsv };

// One table per (cutoff, threads) slice: rows are algorithms, columns
// datasets. Rows are ordered by the number of failed cells, then by the
// total median time of the others. Failed cells read TIMEOUT, MEMORY, or
// ERROR; times have two decimals.
std::string EmitTables(const std::vector<BenchmarkRecord>& records, TableFormat format);

// dataset,algorithm,cutoff,threads,status,median_seconds,mhs_count
std::string RecordsCsv(const std::vector<BenchmarkRecord>& records);

std::string CrossValidationReport(const std::vector<CrossValidationVerdict>& verdicts);

}  // namespace mhs

#endif  // MHS_BENCH_H_
