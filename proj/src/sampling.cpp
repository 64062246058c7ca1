#include "rttkit/sampling.hpp"

#include "rttkit/errors.hpp"

namespace rttkit {

Sampler::Sampler(std::uint64_t seed, int bound) : rng_(seed), bound_(bound) {
  if (bound < 2) throw DomainError("Sampler: bound must be at least 2");
}

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("Sampler::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_() % span);
}

Scalar Sampler::rational() {
  const auto p = uniform(-bound_, bound_);
  const auto q = uniform(1, bound_);
  return make_scalar(p, q);
}

Scalar Sampler::nonzero() {
  for (;;) {
    Scalar x = rational();
    if (x != 0) return x;
  }
}

Scalar Sampler::generic(const std::vector<Scalar>& avoid, const Scalar& c, int depth) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Scalar x = rational();
    if (!collides(x, avoid, c, depth)) return x;
  }
  throw GenericityError("Sampler: could not find a generic point; raise the bound");
}

std::vector<Scalar> Sampler::generic_set(std::size_t count, std::vector<Scalar> avoid,
                                         const Scalar& c, int depth) {
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < count; ++k) {
    Scalar x = generic(avoid, c, depth);
    avoid.push_back(x);
    out.push_back(std::move(x));
  }
  return out;
}

Sampler Sampler::fork() { return Sampler(rng_(), bound_); }

bool collides(const Scalar& x, const std::vector<Scalar>& points, const Scalar& c, int depth) {
  for (const auto& a : points) {
    const Scalar d = x - a;
    if (c == 0) {
      if (d == 0) return true;
      continue;
    }
    const Scalar m = d / c;
    if (m.get_den() == 1 && abs(m) <= depth) return true;
  }
  return false;
}

}  // namespace rttkit
