#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace confgroup {

/**
 * Runs task(0), task(1), ... task(count-1) on `threads` workers and returns
 * the hit with the smallest index, so the answer does not depend on the
 * schedule. task(i) returns std::optional<R>. Tasks above the best index
 * found so far are skipped.
 */
template <typename Task>
auto first_hit(std::size_t count, unsigned threads, Task&& task)
    -> std::optional<std::pair<std::size_t, typename std::invoke_result_t<Task&, std::size_t>::value_type>> {
  using R = typename std::invoke_result_t<Task&, std::size_t>::value_type;
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto r = task(i)) return std::make_pair(i, std::move(*r));
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex lock;
  std::optional<R> best_result;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load()) return;
      auto r = task(i);
      if (!r) continue;
      std::lock_guard guard(lock);
      if (i < best.load()) {
        best.store(i);
        best_result = std::move(r);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::min<std::size_t>(threads, count);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (!best_result) return std::nullopt;
  return std::make_pair(best.load(), std::move(*best_result));
}

}  // namespace confgroup
