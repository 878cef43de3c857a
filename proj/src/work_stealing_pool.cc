#include "mhs/work_stealing_pool.h"

#include <chrono>
#include <thread>

#include "mhs/errors.h"

namespace mhs {

namespace {
// The pool and worker index running on this thread, if any.
thread_local const WorkStealingPool* tls_pool = nullptr;
thread_local std::size_t tls_worker = 0;
}  // namespace

WorkStealingPool::WorkStealingPool(std::size_t workers) {
  if (workers == 0) throw ValidationError("worker count must be at least 1");
  queues_.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) queues_.push_back(std::make_unique<Queue>());
}

void WorkStealingPool::Spawn(Task task) {
  pending_.fetch_add(1, std::memory_order_acq_rel);
  // Tasks spawned before Run() are dealt round-robin; afterwards the
  // spawning worker keeps them.
  const std::size_t target = tls_pool == this
                                 ? tls_worker
                                 : next_queue_.fetch_add(1) % queues_.size();
  Queue& q = *queues_[target];
  std::lock_guard<std::mutex> lock(q.mu);
  q.tasks.push_back(std::move(task));
}

bool WorkStealingPool::PopLocal(std::size_t self, Task& out) {
  Queue& q = *queues_[self];
  std::lock_guard<std::mutex> lock(q.mu);
  if (q.tasks.empty()) return false;
  out = std::move(q.tasks.back());
  q.tasks.pop_back();
  return true;
}

bool WorkStealingPool::Steal(std::size_t self, Task& out) {
  for (std::size_t k = 1; k < queues_.size(); ++k) {
    Queue& q = *queues_[(self + k) % queues_.size()];
    std::lock_guard<std::mutex> lock(q.mu);
    if (q.tasks.empty()) continue;
    out = std::move(q.tasks.front());
    q.tasks.pop_front();
    return true;
  }
  return false;
}

void WorkStealingPool::WorkerLoop(std::size_t self) {
  const WorkStealingPool* saved_pool = tls_pool;
  const std::size_t saved = tls_worker;
  tls_pool = this;
  tls_worker = self;
  Task task;
  std::size_t idle_spins = 0;
  while (pending_.load(std::memory_order_acquire) > 0) {
    if (PopLocal(self, task) || Steal(self, task)) {
      idle_spins = 0;
      if (!failed_.load(std::memory_order_relaxed)) {
        try {
          task(*this);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu_);
          if (!error_) error_ = std::current_exception();
          failed_.store(true);
        }
      }
      task = nullptr;
      pending_.fetch_sub(1, std::memory_order_acq_rel);
    } else if (++idle_spins < 64) {
      std::this_thread::yield();
    } else {
      std::this_thread::sleep_for(std::chrono::microseconds(50));
    }
  }
  tls_pool = saved_pool;
  tls_worker = saved;
}

void WorkStealingPool::Run() {
  std::vector<std::thread> threads;
  threads.reserve(queues_.size() - 1);
  for (std::size_t i = 1; i < queues_.size(); ++i) {
    threads.emplace_back([this, i] { WorkerLoop(i); });
  }
  WorkerLoop(0);
  for (std::thread& t : threads) t.join();
  if (error_) std::rethrow_exception(error_);
}

}  // namespace mhs
