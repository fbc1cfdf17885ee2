#ifndef DEPTH2_SRC_PARALLEL_HPP
#define DEPTH2_SRC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace depth2::detail {

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Lowest index in [0, total) satisfying pred. Chunks are claimed in
/// increasing order and skipped once a lower hit is known, so the answer
/// does not depend on the worker count.
template <typename Pred>
std::optional<std::uint64_t> parallel_first(std::uint64_t total, unsigned workers, Pred pred) {
  constexpr std::uint64_t kChunk = 4096;
  workers = resolve_workers(workers);
  if (workers == 1 || total <= kChunk) {
    for (std::uint64_t i = 0; i < total; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> best{total};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    try {
      for (;;) {
        const std::uint64_t start = next_chunk.fetch_add(kChunk);
        if (start >= total || start >= best.load()) return;
        const std::uint64_t end = std::min(total, start + kChunk);
        for (std::uint64_t i = start; i < end; ++i) {
          if (pred(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      const std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  const auto n = static_cast<unsigned>(std::min<std::uint64_t>(workers, (total + kChunk - 1) / kChunk));
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  if (best.load() == total) return std::nullopt;
  return best.load();
}

/// Runs body(i) for every i in [0, total) across the workers.
template <typename Body>
void parallel_for(std::size_t total, unsigned workers, Body body) {
  workers = resolve_workers(workers);
  if (workers == 1 || total < 2) {
    for (std::size_t i = 0; i < total; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    try {
      for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) body(i);
    } catch (...) {
      const std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  const auto n = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace depth2::detail

#endif  // DEPTH2_SRC_PARALLEL_HPP
