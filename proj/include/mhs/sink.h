#ifndef MHS_SINK_H_
#define MHS_SINK_H_

#include <atomic>
#include <cstdint>
#include <mutex>
#include <vector>

#include "mhs/element_set.h"

namespace mhs {

// Receives minimal hitting sets as an enumerator finds them. Implementations
// must accept concurrent Emit() calls from several workers.
class MhsSink {
 public:
  virtual ~MhsSink() = default;
  virtual void Emit(const ElementSet& mhs) = 0;
};

// Stores every emitted set.
class CollectingSink : public MhsSink {
 public:
  void Emit(const ElementSet& mhs) override {
    std::lock_guard<std::mutex> lock(mu_);
    sets_.push_back(mhs);
  }
  std::vector<ElementSet> Take() {
    std::lock_guard<std::mutex> lock(mu_);
    return std::move(sets_);
  }

 private:
  std::mutex mu_;
  std::vector<ElementSet> sets_;
};

// Counts emissions without retaining them.
class CountingSink : public MhsSink {
 public:
  void Emit(const ElementSet&) override { count_.fetch_add(1, std::memory_order_relaxed); }
  std::uint64_t count() const { return count_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> count_{0};
};

}  // namespace mhs

#endif  // MHS_SINK_H_
