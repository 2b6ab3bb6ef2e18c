#pragma once

#include "rational.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace pforge {

struct PointSamplerConfig {
  std::uint64_t seed = 42;
  std::uint32_t samples = 64;
  std::uint64_t coord_bound = 1000;

  // Throws Error(InvalidArgument) unless samples >= 1 and coord_bound >= 1.
  void validate() const;
};

// Deterministic integer-point generator. Sample k of a run depends only on
// (seed, stream, k), so loops can be split across threads freely.
class PointSampler {
public:
  PointSampler(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  // Vector of `n` integers uniform in [-bound, bound] for sample index k.
  Vector point(std::uint64_t k, std::size_t n, std::uint64_t bound) const;
  // Nonzero integer / positive integer pair, both in [-bound, bound].
  Rational scalar(std::uint64_t k, std::uint64_t salt, std::uint64_t bound) const;

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Increasing coord_bound schedule 10, 100, ... capped at `bound`.
std::vector<std::uint64_t> bound_schedule(std::uint64_t bound);

// Worker count from PFORGE_THREADS (0 or unset = hardware concurrency).
unsigned worker_count();

// Runs fn(i) for i in [0, count) and stores results in index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn);

}  // namespace pforge

#include "sampling_impl.hpp"
