#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace corpusqc {

inline unsigned default_parallelism() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Applies fn to every element; results keep input order regardless of which
// worker produced them. The first exception thrown by any worker is rethrown.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& inputs, Fn&& fn, unsigned threads)
    -> std::vector<std::invoke_result_t<Fn&, const In&>> {
  using Out = std::invoke_result_t<Fn&, const In&>;
  std::vector<Out> out(inputs.size());
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), inputs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) out[i] = fn(inputs[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= inputs.size()) return;
      try {
        out[i] = fn(inputs[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(inputs.size());
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

// Streams `inputs` through fn in fixed-size batches, handing each result to
// sink in input order. Peak memory is bounded by one batch of results.
template <class In, class Fn, class Sink>
void batched_map(const std::vector<In>& inputs, std::size_t batch, unsigned threads, Fn&& fn,
                 Sink&& sink) {
  batch = std::max<std::size_t>(1, batch);
  std::vector<In> chunk;
  for (std::size_t start = 0; start < inputs.size(); start += batch) {
    const std::size_t stop = std::min(inputs.size(), start + batch);
    chunk.assign(inputs.begin() + static_cast<std::ptrdiff_t>(start),
                 inputs.begin() + static_cast<std::ptrdiff_t>(stop));
    auto results = parallel_map(chunk, fn, threads);
    for (auto& r : results) sink(std::move(r));
  }
}

}  // namespace corpusqc
