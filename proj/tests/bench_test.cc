#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "gtest/gtest.h"
#include "mhs/bench.h"
#include "mhs/errors.h"
#include "mhs/generators.h"
#include "test_util.h"

namespace mhs {
namespace {

using ::mhs::testing::Family;

MhsCollection Collection(std::size_t m, const testing::Lists& sets) {
  MhsCollection c;
  c.universe_size = m;
  for (const auto& s : sets) c.sets.push_back(ElementSet(m, s));
  return c;
}

BenchmarkConfig SmallConfig() {
  BenchmarkConfig config;
  config.datasets = {DatasetSpec{.id = "m4", .generator = {"matching", "4"}},
                     DatasetSpec{.id = "m10", .generator = {"matching", "10"}}};
  config.algorithms = {"berge", "mmcs"};
  config.timeout_seconds = 60;
  return config;
}

BenchmarkRecord Record(std::string dataset, std::string algorithm, CellStatus status,
                       std::optional<double> seconds) {
  BenchmarkRecord r;
  r.dataset = std::move(dataset);
  r.algorithm = std::move(algorithm);
  r.status = status;
  r.median_seconds = seconds;
  if (seconds) r.mhs_count = 1;
  return r;
}

TEST(MedianTest, OddSamples) {
  EXPECT_DOUBLE_EQ(Median({1.0, 9.0, 2.0}), 2.0);
  EXPECT_DOUBLE_EQ(Median({4.0}), 4.0);
  EXPECT_THROW(Median({1.0, 2.0}), ValidationError);
  EXPECT_THROW(Median({}), ValidationError);
}

TEST(ConfigTest, Validation) {
  BenchmarkConfig config = SmallConfig();
  EXPECT_NO_THROW(ValidateConfig(config));
  config.repetitions = 2;
  EXPECT_THROW(ValidateConfig(config), ValidationError);
  config.repetitions = 3;
  config.timeout_seconds = 0;
  EXPECT_THROW(ValidateConfig(config), ValidationError);
}

TEST(ConfigTest, ParsesJson) {
  const BenchmarkConfig config = ParseBenchmarkConfig(
      R"({"datasets": [{"id": "m10", "generate": "matching 10"},
                       {"id": "acc", "path": "acc.dat"}],
          "algorithms": ["mmcs", "rs"], "cutoffs": [null, 5], "threads": [1, 2],
          "timeout": 12.5, "repetitions": 5, "memory_limit_mb": 512})",
      "/data");
  ASSERT_EQ(config.datasets.size(), 2u);
  EXPECT_EQ(config.datasets[0].generator, (std::vector<std::string>{"matching", "10"}));
  EXPECT_EQ(config.datasets[1].path, std::filesystem::path("/data/acc.dat"));
  EXPECT_EQ(config.datasets[1].format, FileFormat::kDat);
  EXPECT_EQ(config.cutoffs, (std::vector<Cutoff>{std::nullopt, 5}));
  EXPECT_EQ(config.thread_counts, (std::vector<std::size_t>{1, 2}));
  EXPECT_DOUBLE_EQ(config.timeout_seconds, 12.5);
  EXPECT_EQ(config.repetitions, 5u);
  EXPECT_EQ(config.memory_limit_mb, 512u);
  EXPECT_THROW(ParseBenchmarkConfig(R"({"datasets": []})"), ParseError);
  EXPECT_THROW(ParseBenchmarkConfig(R"({"datasets": [], "algorithms": [], "repetitions": 4})"),
               ValidationError);
}

TEST(RunIsolatedTest, ReturnsFingerprintAndSets) {
  const ChildRun run = RunIsolated([] { return Collection(4, {{3}, {1, 2}}); }, 30, std::nullopt, 10);
  ASSERT_EQ(run.status, CellStatus::kOk);
  EXPECT_EQ(run.fingerprint.count, 2u);
  EXPECT_EQ(run.fingerprint, Fingerprint(Collection(4, {{1, 2}, {3}}).sets));
  ASSERT_TRUE(run.sets.has_value());
  EXPECT_EQ(testing::Canonical(*run.sets), (testing::Lists{{1, 2}, {3}}));
}

TEST(RunIsolatedTest, LargeOutputIsNotRetained) {
  const ChildRun run = RunIsolated(
      [] {
        MhsCollection c;
        c.universe_size = 20;
        for (Element e = 0; e < 20; ++e) c.sets.push_back(ElementSet(20, {e}));
        return c;
      },
      30, std::nullopt, 5);
  ASSERT_EQ(run.status, CellStatus::kOk);
  EXPECT_EQ(run.fingerprint.count, 20u);
  EXPECT_FALSE(run.sets.has_value());
}

TEST(RunIsolatedTest, Timeout) {
  const ChildRun run = RunIsolated(
      [] {
        std::this_thread::sleep_for(std::chrono::seconds(30));
        return MhsCollection{};
      },
      0.05);
  EXPECT_EQ(run.status, CellStatus::kTimeout);
}

TEST(RunIsolatedTest, MemoryExhaustion) {
  const ChildRun run = RunIsolated(
      [] {
        std::vector<std::vector<char>> hog;
        for (;;) hog.emplace_back(std::size_t{64} << 20, 'x');
        return MhsCollection{};
      },
      30, 256);
  EXPECT_EQ(run.status, CellStatus::kMemoryExhausted);
}

TEST(RunIsolatedTest, ErrorsAreReported) {
  const ChildRun run = RunIsolated([]() -> MhsCollection { throw ValidationError("bad input"); }, 30);
  EXPECT_EQ(run.status, CellStatus::kError);
  EXPECT_EQ(run.message, "bad input");

  const ChildRun crash = RunIsolated([]() -> MhsCollection { std::abort(); }, 30);
  EXPECT_EQ(crash.status, CellStatus::kError);
}

TEST(RunBenchmarkTest, MediansAndCounts) {
  std::ostringstream progress;
  const BenchmarkResult result = RunBenchmark(SmallConfig(), &progress);
  ASSERT_EQ(result.records.size(), 4u);
  for (const BenchmarkRecord& r : result.records) {
    EXPECT_EQ(r.status, CellStatus::kOk) << r.message;
    ASSERT_TRUE(r.median_seconds.has_value());
    EXPECT_GE(*r.median_seconds, 0.0);
    EXPECT_EQ(r.mhs_count, r.dataset == "m4" ? 16u : 1024u);
  }
  EXPECT_FALSE(progress.str().empty());
  for (const CrossValidationVerdict& v : CrossValidate(result.records, result.outputs)) {
    EXPECT_EQ(v.agreement, Agreement::kAgree) << v.dataset;
  }
}

TEST(RunBenchmarkTest, FailuresDoNotStopTheSweep) {
  BenchmarkConfig config = SmallConfig();
  config.datasets.push_back(DatasetSpec{.id = "missing", .path = "/nonexistent/x.json"});
  config.datasets.push_back(DatasetSpec{.id = "m22", .generator = {"matching", "22"}});
  config.algorithms = {"mmcs", "nosuch"};
  config.timeout_seconds = 0.001;
  config.repetitions = 1;
  const BenchmarkResult result = RunBenchmark(config);
  ASSERT_EQ(result.records.size(), 8u);
  for (const BenchmarkRecord& r : result.records) {
    if (r.algorithm == "nosuch" || r.dataset == "missing") {
      EXPECT_EQ(r.status, CellStatus::kError);
    } else if (r.dataset == "m22") {
      EXPECT_EQ(r.status, CellStatus::kTimeout);
      EXPECT_FALSE(r.median_seconds.has_value());
      EXPECT_FALSE(r.mhs_count.has_value());
    }
  }
}

TEST(RunBenchmarkTest, SweepsCutoffsAndThreads) {
  BenchmarkConfig config = SmallConfig();
  config.algorithms = {"berge", "mmcs", "fullcover"};
  config.cutoffs = {std::nullopt, 4};
  config.thread_counts = {1, 2};
  config.repetitions = 1;
  config.parallel_cells = true;
  const BenchmarkResult result = RunBenchmark(config);
  // Per dataset: berge 2 cutoffs, mmcs 2x2, fullcover 2 thread counts.
  EXPECT_EQ(result.records.size(), 2u * (2 + 4 + 2));
  for (const BenchmarkRecord& r : result.records) EXPECT_EQ(r.status, CellStatus::kOk);
}

TEST(CrossValidateTest, DetectsCorruption) {
  std::vector<BenchmarkRecord> records = {Record("d", "berge", CellStatus::kOk, 1.0),
                                          Record("d", "mmcs", CellStatus::kOk, 1.0)};
  const MhsCollection good = Collection(4, {{1, 2}, {3}});
  const MhsCollection bad = Collection(4, {{1, 2}, {2, 3}});
  std::vector<RetainedOutput> outputs = {
      {"d", "berge", std::nullopt, 1, Fingerprint(good.sets), good.sets},
      {"d", "mmcs", std::nullopt, 1, Fingerprint(bad.sets), bad.sets}};
  const auto verdicts = CrossValidate(records, outputs);
  ASSERT_EQ(verdicts.size(), 1u);
  EXPECT_EQ(verdicts[0].agreement, Agreement::kMismatch);
  EXPECT_EQ(verdicts[0].first, "berge@1");
  EXPECT_EQ(verdicts[0].second, "mmcs@1");
  ASSERT_TRUE(verdicts[0].witness.has_value());
  EXPECT_EQ(verdicts[0].witness->elements(), (std::vector<Element>{2, 3}));
  EXPECT_NE(CrossValidationReport(verdicts).find("MISMATCH berge@1 vs mmcs@1"), std::string::npos);

  outputs.pop_back();
  EXPECT_EQ(CrossValidate(records, outputs)[0].agreement, Agreement::kInsufficientData);
}

TEST(EmitTablesTest, Grid) {
  const std::vector<BenchmarkRecord> records = {
      Record("d1", "slow", CellStatus::kOk, 2.5), Record("d2", "slow", CellStatus::kOk, 1.0),
      Record("d1", "fast", CellStatus::kOk, 0.125), Record("d2", "fast", CellStatus::kOk, 0.5)};
  EXPECT_EQ(EmitTables(records, TableFormat::kText),
            "# cutoff=none threads=1\n"
            "algorithm  d1    d2\n"
            "fast       0.12  0.50\n"
            "slow       2.50  1.00\n");
  EXPECT_EQ(EmitTables(records, TableFormat::kCsv),
            "# cutoff=none threads=1\n"
            "algorithm,d1,d2\n"
            "fast,0.12,0.50\n"
            "slow,2.50,1.00\n");
}

TEST(EmitTablesTest, FailureMarkers) {
  const std::vector<BenchmarkRecord> records = {
      Record("d1", "a", CellStatus::kTimeout, std::nullopt),
      Record("d2", "a", CellStatus::kMemoryExhausted, std::nullopt),
      Record("d1", "b", CellStatus::kOk, 9.0)};
  EXPECT_EQ(EmitTables(records, TableFormat::kCsv),
            "# cutoff=none threads=1\n"
            "algorithm,d1,d2\n"
            "b,9.00,-\n"
            "a,TIMEOUT,MEMORY\n");
}

TEST(EmitTablesTest, EmptyRecords) {
  EXPECT_EQ(EmitTables({}, TableFormat::kText), "algorithm\n");
}

TEST(RecordsCsvTest, Format) {
  std::vector<BenchmarkRecord> records = {Record("d", "mmcs", CellStatus::kOk, 0.5),
                                          Record("d", "rs", CellStatus::kTimeout, std::nullopt)};
  records[1].cutoff = 5;
  records[1].threads = 4;
  EXPECT_EQ(RecordsCsv(records),
            "dataset,algorithm,cutoff,threads,status,median_seconds,mhs_count\n"
            "d,mmcs,none,1,ok,0.500000,1\n"
            "d,rs,5,4,timeout,,\n");
}

}  // namespace
}  // namespace mhs
