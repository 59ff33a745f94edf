#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace genusone {

// Evaluates f(0..n-1) on up to `workers` threads; results are stored by index
// so the output does not depend on scheduling.
template <class F>
auto parallel_map(std::size_t n, int workers, F&& f) -> std::vector<decltype(f(std::size_t{0}))> {
  using T = decltype(f(std::size_t{0}));
  std::vector<T> out(n);
  const int w = std::max(1, std::min<int>(workers, static_cast<int>(n)));
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (int t = 0; t < w; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          out[i] = f(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace genusone
