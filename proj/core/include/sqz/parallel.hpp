#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace sqz {

// Static block partition over [0, n): thread t handles one contiguous range,
// so results land in preallocated slots and the output is independent of
// scheduling. Rethrows the first worker exception.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(nt);
  std::size_t chunk = n / nt, rem = n % nt;
  std::size_t begin = 0;
  for (std::size_t t = 0; t < nt; ++t) {
    std::size_t end = begin + chunk + (t < rem ? 1 : 0);
    pool.emplace_back([&, t, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace sqz
