#include "hyperop/rng.hpp"

namespace hyperop {

std::uint64_t splitmix64Mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed),
      stream_(stream),
      key_(splitmix64Mix(seed ^ splitmix64Mix(stream + 0x632BE59BD9B4E019ull))) {}

std::uint64_t CounterRng::next() {
  ++counter_;
  return splitmix64Mix(key_ + counter_ * 0x9E3779B97F4A7C15ull);
}

double CounterRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

bool CounterRng::draw(double p) { return uniform() < p; }

}  // namespace hyperop
