#include "mhs/buildup.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mhs/work_stealing_pool.h"

namespace mhs {

namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Read-only view of a family shared by all workers.
struct Incidence {
  explicit Incidence(const SetFamily& family)
      : family(family), occurrences(family.universe_size()) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      family[j].for_each([&](Element e) { occurrences[e].push_back(j); });
    }
  }

  const SetFamily& family;
  // Set indices containing each element, ascending.
  std::vector<std::vector<std::size_t>> occurrences;
};

// Hit counts for a growing element set. For a set hit exactly once,
// owner_sum is the hitting element; crit counts the sets each element hits
// alone.
class CandidateState {
 public:
  explicit CandidateState(const Incidence& incidence)
      : incidence_(incidence),
        hits_(incidence.family.size(), 0),
        owner_sum_(incidence.family.size(), 0),
        crit_(incidence.family.universe_size(), 0),
        uncovered_(incidence.family.size()) {}

  void Add(Element e) {
    for (std::size_t j : incidence_.occurrences[e]) {
      if (hits_[j] == 0) {
        ++crit_[e];
        --uncovered_;
      } else if (hits_[j] == 1) {
        --crit_[owner_sum_[j]];
      }
      ++hits_[j];
      owner_sum_[j] += e;
    }
    current_.push_back(e);
  }

  void RemoveLast() {
    const Element e = current_.back();
    current_.pop_back();
    for (std::size_t j : incidence_.occurrences[e]) {
      --hits_[j];
      owner_sum_[j] -= e;
      if (hits_[j] == 0) {
        --crit_[e];
        ++uncovered_;
      } else if (hits_[j] == 1) {
        ++crit_[owner_sum_[j]];
      }
    }
  }

  // Every element of the current set is critical.
  bool Minimal() const {
    return std::all_of(current_.begin(), current_.end(),
                       [&](Element f) { return crit_[f] > 0; });
  }

  // Every element except the newest has a critical set with index < limit.
  bool CriticalBefore(std::size_t limit) const {
    for (std::size_t i = 0; i + 1 < current_.size(); ++i) {
      const Element f = current_[i];
      bool found = false;
      for (std::size_t j : incidence_.occurrences[f]) {
        if (j >= limit) break;
        if (hits_[j] == 1) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  void Verify() const {
    const SetFamily& family = incidence_.family;
    ElementSet current(family.universe_size(), current_);
    std::size_t uncovered = 0;
    std::vector<std::size_t> crit(family.universe_size(), 0);
    for (std::size_t j = 0; j < family.size(); ++j) {
      const std::size_t hits = family[j].intersection_count(current);
      if (hits != hits_[j]) throw std::logic_error("hit count drift");
      if (hits == 0) ++uncovered;
      if (hits == 1) ++crit[(family[j] & current).find_first()];
    }
    if (uncovered != uncovered_) throw std::logic_error("uncovered count drift");
    for (Element f : current_) {
      if (crit[f] != crit_[f]) throw std::logic_error("critical count drift");
      if (crit[f] == 0) throw std::logic_error("minimality condition violated");
    }
  }

  std::size_t hits(std::size_t j) const { return hits_[j]; }
  std::size_t uncovered() const { return uncovered_; }
  const std::vector<Element>& current() const { return current_; }

  ElementSet CurrentSet() const {
    return ElementSet(incidence_.family.universe_size(), current_);
  }

 private:
  const Incidence& incidence_;
  std::vector<std::size_t> hits_;
  std::vector<Element> owner_sum_;
  std::vector<std::size_t> crit_;
  std::size_t uncovered_;
  std::vector<Element> current_;
};

bool EmitDegenerate(const SetFamily& family, const Cutoff& cutoff, MhsSink& sink) {
  if (family.contains_empty_set()) return true;
  if (family.empty()) {
    if (WithinCutoff(0, cutoff)) sink.Emit(ElementSet(family.universe_size()));
    return true;
  }
  return false;
}

class MmcsSearch {
 public:
  MmcsSearch(const Incidence& incidence, const BacktrackOptions& options, MhsSink& sink)
      : incidence_(incidence), options_(options), sink_(sink) {}

  void Start(WorkStealingPool& pool) {
    Schedule(pool, {}, ElementSet::Full(incidence_.family.universe_size()));
  }

  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  void Schedule(WorkStealingPool& pool, std::vector<Element> current, ElementSet cand) {
    pool.Spawn([this, current = std::move(current), cand = std::move(cand)](
                   WorkStealingPool& p) mutable {
      CandidateState state(incidence_);
      for (Element e : current) state.Add(e);
      std::uint64_t local_nodes = 0;
      Recurse(p, state, cand, local_nodes);
      nodes_.fetch_add(local_nodes, std::memory_order_relaxed);
    });
  }

  void Recurse(WorkStealingPool& pool, CandidateState& state, ElementSet& cand,
               std::uint64_t& local_nodes) {
    ++local_nodes;
    if (options_.check_invariants) state.Verify();
    if (state.uncovered() == 0) {
      sink_.Emit(state.CurrentSet());
      return;
    }
    if (!WithinCutoff(state.current().size() + 1, options_.cutoff)) return;

    const SetFamily& family = incidence_.family;
    std::size_t chosen = family.size();
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (state.hits(j) != 0) continue;
      const std::size_t width = family[j].intersection_count(cand);
      if (width < best) {
        best = width;
        chosen = j;
        if (width == 0) return;
      }
    }

    const ElementSet branch = family[chosen] & cand;
    cand -= branch;
    const bool spawn = pool.workers() > 1 && state.current().size() < options_.spawn_depth;
    branch.for_each([&](Element e) {
      state.Add(e);
      if (state.Minimal()) {
        if (spawn) {
          Schedule(pool, state.current(), cand);
        } else {
          Recurse(pool, state, cand, local_nodes);
        }
      }
      state.RemoveLast();
      cand.insert(e);
    });
  }

  const Incidence& incidence_;
  const BacktrackOptions& options_;
  MhsSink& sink_;
  std::atomic<std::uint64_t> nodes_{0};
};

class RsSearch {
 public:
  RsSearch(const Incidence& incidence, const BacktrackOptions& options, MhsSink& sink)
      : incidence_(incidence), options_(options), sink_(sink) {}

  void Start(WorkStealingPool& pool) { Schedule(pool, {}, 0); }

  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  void Schedule(WorkStealingPool& pool, std::vector<Element> current, std::size_t from) {
    pool.Spawn([this, current = std::move(current), from](WorkStealingPool& p) {
      CandidateState state(incidence_);
      for (Element e : current) state.Add(e);
      std::uint64_t local_nodes = 0;
      Recurse(p, state, from, local_nodes);
      nodes_.fetch_add(local_nodes, std::memory_order_relaxed);
    });
  }

  // Sets with index < from are hit and the current set is minimal for them.
  void Recurse(WorkStealingPool& pool, CandidateState& state, std::size_t from,
               std::uint64_t& local_nodes) {
    ++local_nodes;
    if (options_.check_invariants) state.Verify();
    const SetFamily& family = incidence_.family;
    std::size_t next = from;
    while (next < family.size() && state.hits(next) != 0) ++next;
    if (next == family.size()) {
      sink_.Emit(state.CurrentSet());
      return;
    }
    if (!WithinCutoff(state.current().size() + 1, options_.cutoff)) return;

    const bool spawn = pool.workers() > 1 && state.current().size() < options_.spawn_depth;
    family[next].for_each([&](Element e) {
      state.Add(e);
      if (state.CriticalBefore(next)) {
        if (spawn) {
          Schedule(pool, state.current(), next + 1);
        } else {
          Recurse(pool, state, next + 1, local_nodes);
        }
      }
      state.RemoveLast();
    });
  }

  const Incidence& incidence_;
  const BacktrackOptions& options_;
  MhsSink& sink_;
  std::atomic<std::uint64_t> nodes_{0};
};

template <typename Search>
RunStats RunSearch(const SetFamily& family, const BacktrackOptions& options, MhsSink& sink) {
  const auto start = Clock::now();
  RunStats stats;
  if (!EmitDegenerate(family, options.cutoff, sink)) {
    const Incidence incidence(family);
    Search search(incidence, options, sink);
    WorkStealingPool pool(options.workers);
    search.Start(pool);
    pool.Run();
    stats.nodes = search.nodes();
  }
  stats.seconds = SecondsSince(start);
  return stats;
}

template <typename Search>
EnumerationOutcome Outcome(const SetFamily& family, const BacktrackOptions& options) {
  EnumerationOutcome out;
  out.collection.source_fingerprint = family.fingerprint();
  out.collection.universe_size = family.universe_size();
  out.collection.complete = !options.cutoff.has_value();
  out.collection.unhittable = family.contains_empty_set();
  if (options.mode == OutputMode::kCountOnly) {
    CountingSink sink;
    out.stats = RunSearch<Search>(family, options, sink);
    out.count = sink.count();
  } else {
    CollectingSink sink;
    out.stats = RunSearch<Search>(family, options, sink);
    out.collection.sets = sink.Take();
    out.collection.Canonicalize();
    out.count = out.collection.size();
  }
  out.status = out.collection.unhittable ? RunStatus::kUnhittable
               : options.cutoff          ? RunStatus::kTruncated
                                         : RunStatus::kComplete;
  return out;
}

}  // namespace

RunStats MmcsToSink(const SetFamily& family, const BacktrackOptions& options, MhsSink& sink) {
  return RunSearch<MmcsSearch>(family, options, sink);
}

RunStats RsToSink(const SetFamily& family, const BacktrackOptions& options, MhsSink& sink) {
  return RunSearch<RsSearch>(family, options, sink);
}

EnumerationOutcome Mmcs(const SetFamily& family, const BacktrackOptions& options) {
  return Outcome<MmcsSearch>(family, options);
}

EnumerationOutcome Rs(const SetFamily& family, const BacktrackOptions& options) {
  return Outcome<RsSearch>(family, options);
}

MhsCollection MtMiner(const SetFamily& family, const Cutoff& cutoff) {
  if (auto degenerate = DegenerateResult(family, cutoff)) {
    if (!WithinCutoff(0, cutoff)) degenerate->sets.clear();
    return *degenerate;
  }
  const std::size_t m = family.universe_size();
  const std::size_t n = family.size();

  struct Candidate {
    std::vector<Element> elements;
    ElementSet covered;
    std::size_t covered_count;
  };

  MhsCollection out;
  out.source_fingerprint = family.fingerprint();
  out.universe_size = m;
  out.complete = !cutoff.has_value();
  if (!WithinCutoff(1, cutoff)) return out;

  std::vector<Candidate> level;
  std::vector<ElementSet> covered_by(m, ElementSet(n));
  for (std::size_t j = 0; j < n; ++j) {
    family[j].for_each([&](Element e) { covered_by[e].insert(static_cast<Element>(j)); });
  }
  for (Element e = 0; e < m; ++e) {
    const std::size_t hit = covered_by[e].count();
    if (hit == 0) continue;
    if (hit == n) {
      out.sets.push_back(ElementSet(m, {e}));
    } else {
      level.push_back(Candidate{{e}, covered_by[e], hit});
    }
  }

  for (std::size_t size = 1; !level.empty() && WithinCutoff(size + 1, cutoff); ++size) {
    std::sort(level.begin(), level.end(), [](const Candidate& a, const Candidate& b) {
      return a.elements < b.elements;
    });
    std::unordered_map<ElementSet, std::size_t> live;
    live.reserve(level.size());
    for (const Candidate& c : level) {
      live.emplace(ElementSet(m, c.elements), c.covered_count);
    }

    std::vector<Candidate> next;
    for (std::size_t lo = 0; lo < level.size();) {
      // Run of candidates sharing their first size-1 elements.
      std::size_t hi = lo + 1;
      while (hi < level.size() &&
             std::equal(level[lo].elements.begin(), level[lo].elements.end() - 1,
                        level[hi].elements.begin())) {
        ++hi;
      }
      for (std::size_t a = lo; a < hi; ++a) {
        for (std::size_t b = a + 1; b < hi; ++b) {
          Candidate c{level[a].elements, level[a].covered | level[b].covered, 0};
          c.elements.push_back(level[b].elements.back());
          c.covered_count = c.covered.count();
          ElementSet as_set(m, c.elements);
          bool every_element_critical = true;
          for (Element e : c.elements) {
            as_set.erase(e);
            const auto it = live.find(as_set);
            as_set.insert(e);
            if (it == live.end() || it->second >= c.covered_count) {
              every_element_critical = false;
              break;
            }
          }
          if (!every_element_critical) continue;
          if (c.covered_count == n) {
            out.sets.push_back(std::move(as_set));
          } else {
            next.push_back(std::move(c));
          }
        }
      }
      lo = hi;
    }
    level = std::move(next);
  }
  out.Canonicalize();
  return out;
}

}  // namespace mhs
