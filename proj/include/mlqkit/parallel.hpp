#pragma once

#include <tbb/global_control.h>
#include <tbb/parallel_for.h>

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace mlqkit {

// Worker cap from MLQKIT_THREADS, falling back to the hardware count.
inline int thread_limit() {
  if (const char* env = std::getenv("MLQKIT_THREADS")) {
    try {
      int k = std::stoi(env);
      if (k >= 1) return k;
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// out[k] = fn(k) for k < count. Results land by index, so aggregation order
// does not depend on scheduling.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> out(count);
  int workers = thread_limit();
  if (workers <= 1 || count < 64) {
    for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  tbb::global_control cap(tbb::global_control::max_allowed_parallelism, static_cast<std::size_t>(workers));
  tbb::parallel_for(std::size_t{0}, count, [&](std::size_t k) { out[k] = fn(k); });
  return out;
}

}  // namespace mlqkit
