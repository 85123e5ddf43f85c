#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ddlab {

/// Worker count: `requested` if nonzero, else hardware concurrency; always
/// capped by the DDLAB_THREADS environment variable when it is set.
inline unsigned resolve_threads(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DDLAB_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // unparsable: ignored
    }
  }
  return std::max(1u, n);
}

/// Runs body(task) for task in [0, tasks) on up to `threads` workers. The
/// first exception thrown by any task is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t tasks, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(threads, tasks);
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) body(t);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t t = w; t < tasks; t += workers) body(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ddlab
