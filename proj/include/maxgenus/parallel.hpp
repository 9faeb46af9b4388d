#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "maxgenus/errors.hpp"

namespace maxgenus {

// Cooperative wall-clock limit; a default-constructed deadline never expires.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.active_ = true;
    d.at_ = std::chrono::steady_clock::now() + budget;
    return d;
  }
  bool expired() const { return active_ && std::chrono::steady_clock::now() >= at_; }
  void check() const {
    if (expired()) throw Timeout();
  }

 private:
  bool active_ = false;
  std::chrono::steady_clock::time_point at_{};
};

// Runs fn(i) for i in [0, count) on up to `jobs` threads.  Indices are handed
// out dynamically; the first exception thrown by any task is rethrown after
// all workers stop.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      if (failed.load()) return;
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
      }
    }
  };
  std::vector<std::thread> threads;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  threads.reserve(n);
  for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace maxgenus
