#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace orthocount::geometry {

template <typename Result>
std::vector<Result> partitioned(int n, int j, int jobs,
                                const std::function<Result(const std::vector<PivotPattern>&)>& work) {
  std::vector<PivotPattern> all = pivot_patterns(n, j);
  const std::size_t slices = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                                     std::max<std::size_t>(all.size(), 1));
  // Round-robin keeps the slices similar in size: early patterns have the
  // most free entries.
  std::vector<std::vector<PivotPattern>> parts(slices);
  for (std::size_t idx = 0; idx < all.size(); ++idx) parts[idx % slices].push_back(std::move(all[idx]));

  std::vector<Result> results(slices);
  if (slices == 1) {
    results[0] = work(parts[0]);
    return results;
  }
  std::vector<std::exception_ptr> errors(slices);
  std::vector<std::thread> threads;
  threads.reserve(slices);
  for (std::size_t t = 0; t < slices; ++t) {
    threads.emplace_back([&, t] {
      try {
        results[t] = work(parts[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

/// out[t] = work(t) for t < count on up to `jobs` threads; slots are filled by
/// index so the result does not depend on scheduling.
template <typename Result, typename Work>
std::vector<Result> parallel_map(std::size_t count, int jobs, Work&& work) {
  std::vector<Result> out(count);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
  if (workers <= 1) {
    for (std::size_t t = 0; t < count; ++t) out[t] = work(t);
    return out;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t t = cursor++; t < count; t = cursor++) out[t] = work(t);
      } catch (...) {
        errors[w] = std::current_exception();
        cursor = count;
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace orthocount::geometry
