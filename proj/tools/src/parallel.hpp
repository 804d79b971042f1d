#ifndef ROOTBOUND_CLI_PARALLEL_HPP
#define ROOTBOUND_CLI_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <future>
#include <thread>
#include <vector>

namespace rootbound::cli::detail {

// Applies fn to 0..count-1 on a small worker pool. Results land at their
// index, so the output never depends on scheduling.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> results(count);
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> pending;
  pending.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pending.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
    }));
  std::exception_ptr first_error;
  for (auto& f : pending) {
    try {
      f.get();
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace rootbound::cli::detail

#endif  // ROOTBOUND_CLI_PARALLEL_HPP
