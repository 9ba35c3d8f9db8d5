#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace repchain::detail {

inline unsigned resolve_threads(unsigned requested, std::uint64_t work) {
  unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(work, 1)));
}

/// Runs body(begin, end) over contiguous chunks of [0, n) and returns the
/// per-chunk results in chunk order.
template <class Result, class Body>
std::vector<Result> parallel_chunks(std::uint64_t n, unsigned threads, Body body) {
  const unsigned t = resolve_threads(threads, n);
  std::vector<Result> results(t);
  if (t == 1) {
    results[0] = body(std::uint64_t{0}, n);
    return results;
  }
  std::vector<std::exception_ptr> errors(t);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned w = 0; w < t; ++w) {
    const std::uint64_t begin = n * w / t;
    const std::uint64_t end = n * (w + 1) / t;
    pool.emplace_back([&, w, begin, end] {
      try {
        results[w] = body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

/// Counts indices i in [0, n) for which pred(i) holds.
template <class Pred>
std::uint64_t parallel_count(std::uint64_t n, unsigned threads, Pred pred) {
  const auto parts = parallel_chunks<std::uint64_t>(n, threads, [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t c = 0;
    for (std::uint64_t i = b; i < e; ++i) c += pred(i) ? 1 : 0;
    return c;
  });
  std::uint64_t total = 0;
  for (auto c : parts) total += c;
  return total;
}

/// out[i] = fn(i), evaluated in parallel.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn fn) {
  std::vector<T> out(n);
  parallel_chunks<char>(n, threads, [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) out[i] = fn(i);
    return char{};
  });
  return out;
}

}  // namespace repchain::detail
