#ifndef MHS_WORK_STEALING_POOL_H_
#define MHS_WORK_STEALING_POOL_H_

#include <atomic>
#include <cstddef>
#include <deque>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

namespace mhs {

// Runs a dynamic tree of tasks on a fixed set of workers. Each worker owns a
// deque: it pushes and pops at the back and idle workers steal from the
// front of other deques. Run() returns once every task, including tasks
// spawned by tasks, has finished. With one worker everything runs on the
// calling thread.
class WorkStealingPool {
 public:
  using Task = std::function<void(WorkStealingPool&)>;

  explicit WorkStealingPool(std::size_t workers);

  // Schedules a task. Callable from inside a running task or before Run().
  void Spawn(Task task);

  // Blocks until all tasks are done. Rethrows the first task exception.
  void Run();

  std::size_t workers() const { return queues_.size(); }

 private:
  struct Queue {
    std::mutex mu;
    std::deque<Task> tasks;
  };

  bool PopLocal(std::size_t self, Task& out);
  bool Steal(std::size_t self, Task& out);
  void WorkerLoop(std::size_t self);

  std::vector<std::unique_ptr<Queue>> queues_;
  std::atomic<std::size_t> pending_{0};
  std::atomic<std::size_t> next_queue_{0};
  std::mutex error_mu_;
  std::exception_ptr error_;
  std::atomic<bool> failed_{false};
};

}  // namespace mhs

#endif  // MHS_WORK_STEALING_POOL_H_
