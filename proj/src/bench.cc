#include "mhs/bench.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <new>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mhs/enumerate.h"
#include "mhs/errors.h"
#include "mhs/generators.h"

namespace mhs {

namespace {

using Clock = std::chrono::steady_clock;
using Json = nlohmann::json;

constexpr int kExitMemory = 3;

std::string CutoffText(const Cutoff& cutoff) {
  return cutoff ? std::to_string(*cutoff) : "none";
}

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string word; in >> word;) out.push_back(word);
  return out;
}

void WriteAll(int fd, std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      return;
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

[[noreturn]] void ChildMain(int fd, const std::function<MhsCollection()>& work,
                            std::optional<std::size_t> memory_limit_mb,
                            std::size_t retain_limit) {
  if (memory_limit_mb) {
    const rlim_t bytes = static_cast<rlim_t>(*memory_limit_mb) * 1024 * 1024;
    const rlimit limit{bytes, bytes};
    ::setrlimit(RLIMIT_AS, &limit);
  }
  int code = 0;
  std::string payload;
  try {
    MhsCollection collection = work();
    SortCanonical(collection.sets);
    const CollectionFingerprint fp = Fingerprint(collection.sets);
    payload = "ok " + std::to_string(fp.count) + " " + std::to_string(fp.hash) + " " +
              std::to_string(collection.universe_size) + "\n";
    if (fp.count <= retain_limit) {
      payload += FormatCollection(collection, FileFormat::kDat);
    }
  } catch (const std::bad_alloc&) {
    code = kExitMemory;
    payload = "memory\n";
  } catch (const std::exception& e) {
    code = 1;
    payload = std::string("error ") + e.what() + "\n";
  }
  WriteAll(fd, payload);
  ::close(fd);
  ::_exit(code);
}

// One forked run whose output is collected through a pipe.
class Child {
 public:
  Child(const std::function<MhsCollection()>& work, double timeout_seconds,
        std::optional<std::size_t> memory_limit_mb, std::size_t retain_limit) {
    int fds[2];
    if (::pipe(fds) != 0) throw Error("pipe failed");
    std::fflush(nullptr);
    start_ = Clock::now();
    deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(timeout_seconds));
    pid_ = ::fork();
    if (pid_ < 0) {
      ::close(fds[0]);
      ::close(fds[1]);
      throw Error("fork failed");
    }
    if (pid_ == 0) {
      ::close(fds[0]);
      ChildMain(fds[1], work, memory_limit_mb, retain_limit);
    }
    ::close(fds[1]);
    fd_ = fds[0];
    ::fcntl(fd_, F_SETFL, ::fcntl(fd_, F_GETFL) | O_NONBLOCK);
  }

  Child(const Child&) = delete;
  Child& operator=(const Child&) = delete;

  ~Child() {
    if (fd_ >= 0) ::close(fd_);
    if (!reaped_) {
      ::kill(pid_, SIGKILL);
      ::waitpid(pid_, nullptr, 0);
    }
  }

  int fd() const { return fd_; }
  Clock::time_point deadline() const { return deadline_; }
  bool eof() const { return eof_; }

  // Drains readable output; sets eof() when the child closed the pipe.
  void Pump() {
    char chunk[65536];
    while (true) {
      const ssize_t n = ::read(fd_, chunk, sizeof chunk);
      if (n > 0) {
        buffer_.append(chunk, static_cast<std::size_t>(n));
      } else if (n == 0) {
        eof_ = true;
        return;
      } else if (errno == EINTR) {
        continue;
      } else {
        return;
      }
    }
  }

  ChildRun Finish(bool timed_out) {
    if (timed_out) ::kill(pid_, SIGKILL);
    int status = 0;
    while (::waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
    }
    reaped_ = true;
    ChildRun run;
    run.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    if (timed_out) {
      run.status = CellStatus::kTimeout;
      return run;
    }
    if (WIFSIGNALED(status)) {
      const int sig = WTERMSIG(status);
      run.status = sig == SIGKILL ? CellStatus::kMemoryExhausted : CellStatus::kError;
      run.message = "child terminated by signal " + std::to_string(sig);
      return run;
    }
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code == kExitMemory) {
      run.status = CellStatus::kMemoryExhausted;
      return run;
    }
    const std::size_t eol = buffer_.find('\n');
    const std::string header = buffer_.substr(0, eol);
    if (code != 0 || header.rfind("ok ", 0) != 0) {
      run.status = CellStatus::kError;
      run.message = header.rfind("error ", 0) == 0 ? header.substr(6)
                                                    : "child exited with code " +
                                                          std::to_string(code);
      return run;
    }
    std::istringstream in(header.substr(3));
    std::size_t universe = 0;
    in >> run.fingerprint.count >> run.fingerprint.hash >> universe;
    const std::string body = eol == std::string::npos ? "" : buffer_.substr(eol + 1);
    if (run.fingerprint.count == 0 || !body.empty()) {
      std::vector<ElementSet> sets;
      std::istringstream lines(body);
      for (std::string line; std::getline(lines, line);) {
        ElementSet s(universe);
        std::istringstream tokens(line);
        for (Element e; tokens >> e;) s.insert(e);
        sets.push_back(std::move(s));
      }
      run.sets = std::move(sets);
    }
    run.status = CellStatus::kOk;
    return run;
  }

 private:
  pid_t pid_ = -1;
  int fd_ = -1;
  bool eof_ = false;
  bool reaped_ = false;
  Clock::time_point start_;
  Clock::time_point deadline_;
  std::string buffer_;
};

struct Cell {
  std::size_t dataset;
  std::string algorithm;
  Cutoff cutoff;
  std::size_t threads;
};

// Progress of one cell through its repetitions.
struct Slot {
  std::size_t cell = 0;
  std::vector<double> times;
  std::optional<ChildRun> first;
  std::unique_ptr<Child> child;
};

}  // namespace

std::string_view CellStatusName(CellStatus status) {
  switch (status) {
    case CellStatus::kOk:
      return "ok";
    case CellStatus::kTimeout:
      return "timeout";
    case CellStatus::kMemoryExhausted:
      return "memory-exhausted";
    case CellStatus::kError:
      return "error";
  }
  return "error";
}

void ValidateConfig(const BenchmarkConfig& config) {
  if (config.repetitions == 0 || config.repetitions % 2 == 0) {
    throw ValidationError("repetitions must be odd");
  }
  if (!(config.timeout_seconds > 0.0)) throw ValidationError("timeout must be positive");
  for (std::size_t t : config.thread_counts) {
    if (t == 0) throw ValidationError("thread counts must be at least 1");
  }
}

BenchmarkConfig ParseBenchmarkConfig(std::string_view json_text,
                                     const std::filesystem::path& base_dir) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("config: top level must be an object");
  BenchmarkConfig config;
  try {
    for (const Json& d : doc.at("datasets")) {
      DatasetSpec spec;
      spec.id = d.at("id").get<std::string>();
      if (d.contains("path")) {
        std::filesystem::path p = d.at("path").get<std::string>();
        spec.path = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
        spec.format = FormatFromPath(*spec.path);
        if (d.contains("format")) {
          const auto f = ParseFormat(d.at("format").get<std::string>());
          if (!f) throw ParseError("config: dataset " + spec.id + ": unknown format");
          spec.format = *f;
        }
      } else if (d.contains("generate")) {
        spec.generator = SplitWords(d.at("generate").get<std::string>());
      } else {
        throw ParseError("config: dataset " + spec.id + " needs \"path\" or \"generate\"");
      }
      config.datasets.push_back(std::move(spec));
    }
    config.algorithms = doc.at("algorithms").get<std::vector<std::string>>();
    if (doc.contains("cutoffs")) {
      config.cutoffs.clear();
      for (const Json& c : doc.at("cutoffs")) {
        config.cutoffs.push_back(c.is_null() ? Cutoff{} : Cutoff{c.get<std::size_t>()});
      }
    }
    if (doc.contains("threads")) {
      config.thread_counts = doc.at("threads").get<std::vector<std::size_t>>();
    }
    config.timeout_seconds = doc.value("timeout", config.timeout_seconds);
    config.repetitions = doc.value("repetitions", config.repetitions);
    if (doc.contains("memory_limit_mb") && !doc.at("memory_limit_mb").is_null()) {
      config.memory_limit_mb = doc.at("memory_limit_mb").get<std::size_t>();
    }
    config.retain_limit = doc.value("retain_limit", config.retain_limit);
    config.parallel_cells = doc.value("parallel_cells", config.parallel_cells);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  ValidateConfig(config);
  return config;
}

CollectionFingerprint Fingerprint(std::vector<ElementSet> sets) {
  SortCanonical(sets);
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  for (const ElementSet& s : sets) {
    s.for_each([&](Element e) { mix(std::uint64_t{e} + 1); });
    mix(0);
  }
  return CollectionFingerprint{sets.size(), h};
}

ChildRun RunIsolated(const std::function<MhsCollection()>& work, double timeout_seconds,
                     std::optional<std::size_t> memory_limit_mb, std::size_t retain_limit) {
  Child child(work, timeout_seconds, memory_limit_mb, retain_limit);
  while (true) {
    child.Pump();
    if (child.eof()) return child.Finish(false);
    const auto now = Clock::now();
    if (now >= child.deadline()) return child.Finish(true);
    const auto wait =
        std::chrono::duration_cast<std::chrono::milliseconds>(child.deadline() - now).count();
    pollfd pfd{child.fd(), POLLIN, 0};
    ::poll(&pfd, 1, static_cast<int>(std::clamp<long long>(wait + 1, 1, 1000)));
  }
}

double Median(std::vector<double> samples) {
  if (samples.empty() || samples.size() % 2 == 0) {
    throw ValidationError("median needs an odd, nonempty sample");
  }
  const auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
  std::nth_element(samples.begin(), mid, samples.end());
  return *mid;
}

BenchmarkResult RunBenchmark(const BenchmarkConfig& config, std::ostream* progress) {
  ValidateConfig(config);
  BenchmarkResult result;

  std::vector<std::optional<SetFamily>> families;
  std::vector<std::string> load_errors;
  for (const DatasetSpec& spec : config.datasets) {
    try {
      families.emplace_back(spec.path ? ReadFamily(*spec.path, spec.format)
                                      : GenerateFromArgs(spec.generator));
      load_errors.emplace_back();
    } catch (const std::exception& e) {
      families.emplace_back(std::nullopt);
      load_errors.emplace_back(e.what());
    }
  }

  std::vector<Cell> cells;
  for (std::size_t d = 0; d < config.datasets.size(); ++d) {
    for (const std::string& name : config.algorithms) {
      const std::optional<Algorithm> algorithm = ParseAlgorithm(name);
      for (const Cutoff& cutoff : config.cutoffs) {
        if (algorithm && cutoff && !SupportsCutoff(*algorithm)) continue;
        if (algorithm && !SupportsThreads(*algorithm)) {
          cells.push_back(Cell{d, name, cutoff, 1});
          continue;
        }
        for (std::size_t t : config.thread_counts) cells.push_back(Cell{d, name, cutoff, t});
      }
    }
  }
  result.records.resize(cells.size());

  auto record_for = [&](const Cell& cell) {
    BenchmarkRecord r;
    r.dataset = config.datasets[cell.dataset].id;
    r.algorithm = cell.algorithm;
    r.cutoff = cell.cutoff;
    r.threads = cell.threads;
    return r;
  };
  auto report = [&](const BenchmarkRecord& r) {
    if (!progress) return;
    *progress << r.dataset << ' ' << r.algorithm << " cutoff=" << CutoffText(r.cutoff)
              << " threads=" << r.threads << ": " << CellStatusName(r.status);
    if (r.median_seconds) *progress << ' ' << *r.median_seconds << "s";
    if (r.mhs_count) *progress << " count=" << *r.mhs_count;
    if (!r.message.empty()) *progress << " (" << r.message << ')';
    *progress << '\n';
  };

  auto launch = [&](Slot& slot) {
    const Cell& cell = cells[slot.cell];
    const SetFamily& family = *families[cell.dataset];
    EnumerationRequest request;
    request.algorithm = *ParseAlgorithm(cell.algorithm);
    request.cutoff = cell.cutoff;
    request.threads = cell.threads;
    const std::size_t retain = slot.first ? 0 : config.retain_limit;
    slot.child = std::make_unique<Child>(
        [&family, request] { return Enumerate(family, request).collection; },
        config.timeout_seconds, config.memory_limit_mb, retain);
  };

  // Returns true when the cell is finished and its record written.
  auto absorb = [&](Slot& slot, ChildRun run) {
    const Cell& cell = cells[slot.cell];
    BenchmarkRecord& record = result.records[slot.cell];
    record = record_for(cell);
    if (run.status != CellStatus::kOk) {
      record.status = slot.first ? CellStatus::kError : run.status;
      record.message = slot.first ? "repetition " + std::to_string(slot.times.size() + 1) +
                                        " ended with " + std::string(CellStatusName(run.status))
                                  : run.message;
      report(record);
      return true;
    }
    if (slot.first && !(run.fingerprint == slot.first->fingerprint)) {
      record.status = CellStatus::kError;
      record.message = "repetitions disagree on the result";
      report(record);
      return true;
    }
    slot.times.push_back(run.seconds);
    if (!slot.first) slot.first = std::move(run);
    if (slot.times.size() < config.repetitions) return false;
    record.status = CellStatus::kOk;
    record.median_seconds = Median(slot.times);
    record.mhs_count = slot.first->fingerprint.count;
    result.outputs.push_back(RetainedOutput{record.dataset, record.algorithm, record.cutoff,
                                            record.threads, slot.first->fingerprint,
                                            std::move(slot.first->sets)});
    report(record);
    return true;
  };

  const std::size_t concurrency =
      config.parallel_cells ? std::max(1U, std::thread::hardware_concurrency()) : 1;
  std::vector<Slot> active;
  std::size_t next_cell = 0;
  while (next_cell < cells.size() || !active.empty()) {
    while (active.size() < concurrency && next_cell < cells.size()) {
      const std::size_t index = next_cell++;
      const Cell& cell = cells[index];
      if (!families[cell.dataset] || !ParseAlgorithm(cell.algorithm)) {
        BenchmarkRecord& record = result.records[index];
        record = record_for(cell);
        record.status = CellStatus::kError;
        record.message = !families[cell.dataset]
                             ? "cannot load dataset: " + load_errors[cell.dataset]
                             : "unknown algorithm; valid names: " + AlgorithmNameList();
        report(record);
        continue;
      }
      Slot slot;
      slot.cell = index;
      launch(slot);
      active.push_back(std::move(slot));
    }
    if (active.empty()) break;

    std::vector<pollfd> pfds;
    auto earliest = active.front().child->deadline();
    for (const Slot& slot : active) {
      pfds.push_back(pollfd{slot.child->fd(), POLLIN, 0});
      earliest = std::min(earliest, slot.child->deadline());
    }
    const auto wait = std::chrono::duration_cast<std::chrono::milliseconds>(
                          earliest - Clock::now())
                          .count();
    ::poll(pfds.data(), pfds.size(), static_cast<int>(std::clamp<long long>(wait + 1, 1, 1000)));

    for (std::size_t i = 0; i < active.size();) {
      Slot& slot = active[i];
      slot.child->Pump();
      std::optional<ChildRun> run;
      if (slot.child->eof()) {
        run = slot.child->Finish(false);
      } else if (Clock::now() >= slot.child->deadline()) {
        run = slot.child->Finish(true);
      }
      if (!run) {
        ++i;
        continue;
      }
      slot.child.reset();
      if (absorb(slot, std::move(*run))) {
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        launch(slot);
        ++i;
      }
    }
  }
  return result;
}

std::vector<CrossValidationVerdict> CrossValidate(const std::vector<BenchmarkRecord>& records,
                                                  const std::vector<RetainedOutput>& outputs) {
  auto ok_cell = [&](const RetainedOutput& o) {
    return std::any_of(records.begin(), records.end(), [&](const BenchmarkRecord& r) {
      return r.status == CellStatus::kOk && r.dataset == o.dataset &&
             r.algorithm == o.algorithm && r.cutoff == o.cutoff && r.threads == o.threads;
    });
  };
  auto label = [](const RetainedOutput& o) {
    return o.algorithm + "@" + std::to_string(o.threads);
  };

  // Groups in order of first appearance.
  std::vector<std::pair<std::string, Cutoff>> keys;
  std::map<std::pair<std::string, std::string>, std::vector<const RetainedOutput*>> groups;
  for (const RetainedOutput& o : outputs) {
    const std::pair<std::string, Cutoff> key{o.dataset, o.cutoff};
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    if (ok_cell(o)) groups[{o.dataset, CutoffText(o.cutoff)}].push_back(&o);
  }
  for (const BenchmarkRecord& r : records) {
    const std::pair<std::string, Cutoff> key{r.dataset, r.cutoff};
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
  }

  std::vector<CrossValidationVerdict> verdicts;
  for (const auto& [dataset, cutoff] : keys) {
    CrossValidationVerdict v;
    v.dataset = dataset;
    v.cutoff = cutoff;
    const auto it = groups.find({dataset, CutoffText(cutoff)});
    if (it == groups.end() || it->second.size() < 2) {
      v.agreement = Agreement::kInsufficientData;
      v.detail = "fewer than two completed runs";
      verdicts.push_back(std::move(v));
      continue;
    }
    const std::vector<const RetainedOutput*>& group = it->second;
    v.agreement = Agreement::kAgree;
    const RetainedOutput& base = *group.front();
    for (std::size_t i = 1; i < group.size(); ++i) {
      const RetainedOutput& other = *group[i];
      if (other.fingerprint == base.fingerprint) continue;
      v.agreement = Agreement::kMismatch;
      v.first = label(base);
      v.second = label(other);
      v.detail = "counts " + std::to_string(base.fingerprint.count) + " vs " +
                 std::to_string(other.fingerprint.count);
      if (base.sets && other.sets) {
        std::vector<std::vector<Element>> a, b;
        for (const ElementSet& s : *base.sets) a.push_back(s.elements());
        for (const ElementSet& s : *other.sets) b.push_back(s.elements());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::vector<std::vector<Element>> diff;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(diff));
        if (!diff.empty()) {
          std::size_t m = 0;
          for (Element e : diff.front()) m = std::max<std::size_t>(m, e + 1);
          if (!base.sets->empty()) m = std::max(m, base.sets->front().universe_size());
          v.witness = ElementSet(m, diff.front());
        }
      }
      break;
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

namespace {

std::string CellText(const BenchmarkRecord& r) {
  switch (r.status) {
    case CellStatus::kOk: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", r.median_seconds.value_or(0.0));
      return buf;
    }
    case CellStatus::kTimeout:
      return "TIMEOUT";
    case CellStatus::kMemoryExhausted:
      return "MEMORY";
    case CellStatus::kError:
      return "ERROR";
  }
  return "ERROR";
}

void AppendRow(std::string& out, const std::vector<std::string>& cells,
               const std::vector<std::size_t>& widths, TableFormat format) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (format == TableFormat::kCsv) {
      if (i > 0) out += ',';
      out += cells[i];
    } else {
      if (i > 0) out += "  ";
      out += cells[i];
      if (i + 1 < cells.size()) out.append(widths[i] - cells[i].size(), ' ');
    }
  }
  out += '\n';
}

}  // namespace

std::string EmitTables(const std::vector<BenchmarkRecord>& records, TableFormat format) {
  std::vector<std::string> datasets;
  std::vector<std::pair<Cutoff, std::size_t>> slices;
  for (const BenchmarkRecord& r : records) {
    if (std::find(datasets.begin(), datasets.end(), r.dataset) == datasets.end()) {
      datasets.push_back(r.dataset);
    }
    const std::pair<Cutoff, std::size_t> slice{r.cutoff, r.threads};
    if (std::find(slices.begin(), slices.end(), slice) == slices.end()) slices.push_back(slice);
  }
  if (slices.empty()) return "algorithm\n";

  std::string out;
  for (const auto& [cutoff, threads] : slices) {
    std::vector<std::string> algorithms;
    std::map<std::pair<std::string, std::string>, const BenchmarkRecord*> grid;
    for (const BenchmarkRecord& r : records) {
      if (r.cutoff != cutoff || r.threads != threads) continue;
      if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end()) {
        algorithms.push_back(r.algorithm);
      }
      grid[{r.algorithm, r.dataset}] = &r;
    }
    struct Row {
      std::string algorithm;
      std::size_t failures = 0;
      double total = 0.0;
    };
    std::vector<Row> rows;
    for (const std::string& a : algorithms) {
      Row row{a};
      for (const std::string& d : datasets) {
        const auto it = grid.find({a, d});
        if (it == grid.end()) continue;
        if (it->second->status == CellStatus::kOk) {
          row.total += it->second->median_seconds.value_or(0.0);
        } else {
          ++row.failures;
        }
      }
      rows.push_back(row);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
      return x.failures != y.failures ? x.failures < y.failures : x.total < y.total;
    });

    std::vector<std::vector<std::string>> table;
    std::vector<std::string> header{"algorithm"};
    header.insert(header.end(), datasets.begin(), datasets.end());
    table.push_back(header);
    for (const Row& row : rows) {
      std::vector<std::string> line{row.algorithm};
      for (const std::string& d : datasets) {
        const auto it = grid.find({row.algorithm, d});
        line.push_back(it == grid.end() ? "-" : CellText(*it->second));
      }
      table.push_back(std::move(line));
    }
    std::vector<std::size_t> widths(header.size(), 0);
    for (const auto& line : table) {
      for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());
    }

    if (!out.empty()) out += '\n';
    out += "# cutoff=" + CutoffText(cutoff) + " threads=" + std::to_string(threads) + "\n";
    for (const auto& line : table) AppendRow(out, line, widths, format);
  }
  return out;
}

std::string RecordsCsv(const std::vector<BenchmarkRecord>& records) {
  std::string out = "dataset,algorithm,cutoff,threads,status,median_seconds,mhs_count\n";
  for (const BenchmarkRecord& r : records) {
    out += r.dataset + ',' + r.algorithm + ',' + CutoffText(r.cutoff) + ',' +
           std::to_string(r.threads) + ',' + std::string(CellStatusName(r.status)) + ',';
    if (r.median_seconds) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", *r.median_seconds);
      out += buf;
    }
    out += ',';
    if (r.mhs_count) out += std::to_string(*r.mhs_count);
    out += '\n';
  }
  return out;
}

std::string CrossValidationReport(const std::vector<CrossValidationVerdict>& verdicts) {
  std::string out;
  for (const CrossValidationVerdict& v : verdicts) {
    out += v.dataset + " cutoff=" + CutoffText(v.cutoff) + ": ";
    switch (v.agreement) {
      case Agreement::kAgree:
        out += "agree";
        break;
      case Agreement::kInsufficientData:
        out += "insufficient data";
        break;
      case Agreement::kMismatch:
        out += "MISMATCH " + v.first + " vs " + v.second + " (" + v.detail + ")";
        if (v.witness) out += " witness " + v.witness->ToString();
        break;
    }
    out += '\n';
  }
  return out;
}

}  // namespace mhs
