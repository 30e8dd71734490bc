#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hpk {

// Worker count: explicit value if positive, else HPK_JOBS, else hardware concurrency.
inline int resolve_jobs(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HPK_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs body(chunk, begin, end) over [0, n) split into contiguous chunks, one per worker.
// Chunk boundaries depend only on n and the chunk count, never on timing.
template <typename Body>
void parallel_chunks(size_t n, int chunks, Body&& body) {
  chunks = std::max(1, std::min<int>(chunks, static_cast<int>(std::max<size_t>(n, 1))));
  if (chunks == 1) {
    body(0, size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(chunks);
  for (int c = 0; c < chunks; ++c) {
    const size_t b = n * c / chunks, e = n * (c + 1) / chunks;
    pool.emplace_back([&, c, b, e] {
      try {
        body(c, b, e);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hpk
