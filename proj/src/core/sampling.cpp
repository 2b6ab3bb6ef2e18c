#include "sampling.hpp"

#include "errors.hpp"

#include <cstdlib>
#include <string>

namespace pforge {

void PointSamplerConfig::validate() const
{
  if (samples < 1)
    throw Error(ErrorCode::InvalidArgument, "samples must be >= 1");
  if (coord_bound < 1)
    throw Error(ErrorCode::InvalidArgument, "coord_bound must be >= 1");
}

std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

// Uniform integer in [-bound, bound] by rejection, independent of the
// standard library's distribution implementation.
long long draw(std::uint64_t& state, std::uint64_t bound)
{
  const std::uint64_t span = 2 * bound + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  for (;;) {
    state = splitmix64(state);
    if (state < limit)
      return static_cast<long long>(state % span) - static_cast<long long>(bound);
  }
}

}  // namespace

Vector PointSampler::point(std::uint64_t k, std::size_t n, std::uint64_t bound) const
{
  std::uint64_t state = splitmix64(seed_ ^ splitmix64(stream_ * 0x100000001b3ULL + k));
  Vector v(n);
  for (auto& x : v)
    x = Rational(static_cast<long>(draw(state, bound)));
  return v;
}

Rational PointSampler::scalar(std::uint64_t k, std::uint64_t salt, std::uint64_t bound) const
{
  std::uint64_t state = splitmix64(seed_ ^ splitmix64((stream_ + 0x51ed27) * 0x100000001b3ULL + k) ^ salt);
  long long num = 0;
  while (num == 0)
    num = draw(state, bound);
  long long den = 0;
  while (den <= 0)
    den = draw(state, bound);
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

std::vector<std::uint64_t> bound_schedule(std::uint64_t bound)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 10; b < bound; b *= 10)
    out.push_back(b);
  out.push_back(bound);
  return out;
}

unsigned worker_count()
{
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PFORGE_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0)
        return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return hw;
}

}  // namespace pforge
