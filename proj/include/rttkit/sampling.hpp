#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rttkit/scalar.hpp"

namespace rttkit {

/// Seeded source of random rationals. Integer draws are derived from the raw
/// mt19937_64 stream (not std distributions) so a seed gives the same points
/// on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, int bound = 40);

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// p/q with |p| <= bound, 1 <= q <= bound.
  Scalar rational();
  Scalar nonzero();
  /// A draw x with x - a outside {m c : |m| <= depth} for every a in `avoid`.
  Scalar generic(const std::vector<Scalar>& avoid, const Scalar& c, int depth);
  /// `count` draws that avoid `avoid` and each other in the same sense.
  std::vector<Scalar> generic_set(std::size_t count, std::vector<Scalar> avoid, const Scalar& c,
                                  int depth);
  /// Independent child stream; used to give every case its own sampler.
  Sampler fork();

  int bound() const { return bound_; }

 private:
  std::mt19937_64 rng_;
  int bound_;
};

/// True if x - a = m c for some a in `points` and integer |m| <= depth.
bool collides(const Scalar& x, const std::vector<Scalar>& points, const Scalar& c, int depth);

}  // namespace rttkit
