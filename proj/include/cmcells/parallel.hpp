#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cmcells {

/// Worker count after applying the CM_CELLS_MAX_PARALLEL cap. A request of 0
/// means "hardware concurrency".
inline unsigned effective_workers(unsigned requested) {
  unsigned workers = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char* cap = std::getenv("CM_CELLS_MAX_PARALLEL")) {
    char* end = nullptr;
    long value = std::strtol(cap, &end, 10);
    if (end != cap && value >= 1) workers = std::min<unsigned>(workers, static_cast<unsigned>(value));
  }
  return std::max(1u, workers);
}

/// out[i] = fn(i) for i < count, evaluated on up to `workers` threads.
/// Results land by index, so the output never depends on scheduling. The
/// first exception thrown by any task is rethrown.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned workers, Fn fn) {
  std::vector<Result> out(count);
  workers = std::min<unsigned>(effective_workers(workers), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace cmcells
