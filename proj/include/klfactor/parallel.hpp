#ifndef KLFACTOR_PARALLEL_HPP
#define KLFACTOR_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace klfactor {

// Worker count: hardware concurrency capped by KLFACTOR_THREADS.
inline unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("KLFACTOR_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return hw;
}

// Static block partition of [0, count); f(index) must only touch
// index-owned state so results are schedule-independent.
template <class F>
void parallel_for(std::size_t count, F&& f) {
  unsigned workers = thread_budget();
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += workers) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace klfactor

#endif
