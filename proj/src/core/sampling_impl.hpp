#pragma once

#include <algorithm>
#include <exception>
#include <thread>

namespace pforge {

template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn)
{
  std::vector<T> out(count);
  unsigned workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers)
            out[i] = fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

}  // namespace pforge
