#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hqp::detail {

// Number of chunks [0, count) is split into for a requested worker count.
// Depends only on count and jobs, never on scheduling.
inline int chunk_count(std::uint64_t count, int jobs) {
  if (jobs < 1) jobs = 1;
  const std::uint64_t limit = count == 0 ? 1 : count;
  return static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), limit));
}

// Runs fn(chunk, begin, end) over contiguous chunks of [0, count).  Chunk
// boundaries are a pure function of count and jobs, so merging per-chunk
// results in chunk order yields output independent of the worker count.
// Exceptions from workers are rethrown (first chunk wins).
template <typename Fn>
void for_each_chunk(std::uint64_t count, int jobs, Fn&& fn) {
  const int chunks = chunk_count(count, jobs);
  if (chunks <= 1) {
    fn(0, std::uint64_t{0}, count);
    return;
  }
  const std::uint64_t step = count / static_cast<std::uint64_t>(chunks);
  const std::uint64_t extra = count % static_cast<std::uint64_t>(chunks);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(chunks));
  std::uint64_t begin = 0;
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t end =
        begin + step + (static_cast<std::uint64_t>(c) < extra ? 1 : 0);
    pool.emplace_back([&fn, &errors, c, begin, end] {
      try {
        fn(c, begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(c)] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hqp::detail
