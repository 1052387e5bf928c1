#ifndef GUARD_GILT_PARALLEL_H
#define GUARD_GILT_PARALLEL_H

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gilt
{

// Calls f(i) for i in [0, n) on up to `threads` threads. Callers write
// results into slot i, so output never depends on scheduling. The exception
// from the smallest failing index is rethrown.
template<typename F>
void parallel_for(std::size_t n, unsigned threads, F &&f)
{
  if (threads <= 1u || n <= 1u) {
    for (std::size_t i = 0; i < n; ++i)
      f(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);

  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1u)) < n;) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  unsigned const count = threads < n ? threads : static_cast<unsigned>(n);
  for (unsigned t = 1; t < count; ++t)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();

  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace gilt

#endif // GUARD_GILT_PARALLEL_H
