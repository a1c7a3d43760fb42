#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace meyniel {

/// Worker count from MEYNIEL_JOBS, else the hardware concurrency.
inline int default_parallelism() {
  if (const char* env = std::getenv("MEYNIEL_JOBS")) {
    int jobs = std::atoi(env);
    if (jobs > 0) return jobs;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, total) into fixed-size chunks, evaluates work(first, last) on a
/// pool of `jobs` threads and returns the chunk results in index order, so
/// the merged output does not depend on scheduling.
template <class Work>
auto map_chunks(std::uint64_t total, std::uint64_t chunk, int jobs, Work work)
    -> std::vector<decltype(work(std::uint64_t{}, std::uint64_t{}))> {
  using Result = decltype(work(std::uint64_t{}, std::uint64_t{}));
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<Result> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::uint64_t c = next++; c < chunks; c = next++) {
        const std::uint64_t first = c * chunk;
        results[c] = work(first, std::min(total, first + chunk));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };

  const int width = static_cast<int>(std::min<std::uint64_t>(std::max(jobs, 1), std::max<std::uint64_t>(chunks, 1)));
  std::vector<std::thread> pool;
  for (int i = 1; i < width; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace meyniel
