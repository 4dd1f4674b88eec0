#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace yblab {

// Thread cap: min(hardware, YB_LAB_THREADS if set).
inline unsigned thread_limit() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("YB_LAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
  }
  return hw;
}

// Work-stealing loop over [0, n); fn(i) must only write to slot i of any
// shared output so results are deterministic regardless of scheduling.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned nt = thread_limit();
  if (nt <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::atomic<bool> failed{false};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!failed.exchange(true)) err = std::current_exception();
        return;
      }
    }
  };
  for (unsigned t = 0; t < std::min<std::size_t>(nt, n); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed) std::rethrow_exception(err);
}

}  // namespace yblab
