#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace hyperop {

/// Source of independent Bernoulli trials. Samplers take one of these so the
/// same code runs on a seeded generator or on the exhaustive outcome
/// enumerator below.
class BernoulliSource {
 public:
  virtual ~BernoulliSource() = default;
  virtual bool draw(double p) = 0;
};

/// Counter-based generator: output n is SplitMix64's finaliser applied to
/// key(seed, stream) + (n + 1) * 0x9E3779B97F4A7C15. Uses integer arithmetic
/// only, so streams are bit-identical across platforms and independent of
/// thread scheduling. Meets UniformRandomBitGenerator.
class CounterRng final : public BernoulliSource {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next(); }

  std::uint64_t next();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// One uniform is consumed per call regardless of p.
  bool draw(double p) override;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64Mix(std::uint64_t x);

/// Runs `run(source)` once per distinct sequence of Bernoulli outcomes and
/// returns every (result, probability) pair. Branches of probability zero
/// are pruned. Exponential in the number of draws; for small exact checks.
template <typename Run>
auto enumerateOutcomes(Run&& run) {
  using Result = decltype(run(std::declval<BernoulliSource&>()));

  class Scripted final : public BernoulliSource {
   public:
    explicit Scripted(std::vector<bool> prefix) : prefix_(std::move(prefix)) {}
    bool draw(double p) override {
      bool outcome;
      if (pos_ < prefix_.size()) {
        outcome = prefix_[pos_];
      } else {
        // Take the first feasible branch now, remember the other one.
        outcome = !(p < 1.0);
        if (p > 0.0 && p < 1.0) {
          auto alt = prefix_;
          alt.resize(pos_);
          alt.push_back(true);
          pending.push_back(std::move(alt));
        }
        prefix_.push_back(outcome);
      }
      weight *= outcome ? p : 1.0 - p;
      ++pos_;
      return outcome;
    }
    double weight = 1.0;
    std::vector<std::vector<bool>> pending;

   private:
    std::vector<bool> prefix_;
    std::size_t pos_ = 0;
  };

  std::vector<std::pair<Result, double>> out;
  std::vector<std::vector<bool>> stack{{}};
  while (!stack.empty()) {
    Scripted coin(std::move(stack.back()));
    stack.pop_back();
    Result r = run(static_cast<BernoulliSource&>(coin));
    for (auto& p : coin.pending) stack.push_back(std::move(p));
    if (coin.weight > 0.0) out.emplace_back(std::move(r), coin.weight);
  }
  return out;
}

}  // namespace hyperop
