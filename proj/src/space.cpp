#include "rttkit/space.hpp"

#include <string>

#include "rttkit/errors.hpp"

namespace rttkit {

SpaceShape::SpaceShape(int n_, int l_) : n(n_), l(l_), dim(1) {
  if (n < 2) throw DomainError("SpaceShape: N must be at least 2");
  if (l < 1) throw DomainError("SpaceShape: L must be at least 1");
  for (int a = 0; a < l; ++a) {
    dim *= static_cast<std::size_t>(n);
    if (dim > kMaxDim)
      throw DomainError("SpaceShape: dimension " + std::to_string(n) + "^" + std::to_string(l) +
                        " exceeds the supported bound");
  }
}

std::size_t SpaceShape::stride(int site) const {
  if (site < 1 || site > l) throw IndexError("site " + std::to_string(site) + " out of range");
  std::size_t s = 1;
  for (int a = 1; a < site; ++a) s *= static_cast<std::size_t>(n);
  return s;
}

int SpaceShape::color(std::size_t index, int site) const {
  return static_cast<int>((index / stride(site)) % static_cast<std::size_t>(n)) + 1;
}

std::size_t SpaceShape::with_color(std::size_t index, int site, int col) const {
  if (col < 1 || col > n) throw IndexError("color " + std::to_string(col) + " out of range");
  const std::size_t s = stride(site);
  const std::size_t old = (index / s) % static_cast<std::size_t>(n);
  return index - old * s + static_cast<std::size_t>(col - 1) * s;
}

}  // namespace rttkit
