#pragma once

#include <cstddef>

namespace rttkit {

/// H = (C^N)^{⊗L}. A basis index is read as a base-N digit string with site 1
/// as the least significant digit; digit value k-1 encodes color k.
struct SpaceShape {
  int n = 2;
  int l = 1;
  std::size_t dim = 2;

  SpaceShape() = default;
  /// Throws DomainError unless n >= 2, l >= 1 and the dimension is at desk scale.
  SpaceShape(int n, int l);

  std::size_t stride(int site) const;
  /// Color (1..N) of `site` (1..L) in the basis state `index`.
  int color(std::size_t index, int site) const;
  std::size_t with_color(std::size_t index, int site, int color) const;

  bool operator==(const SpaceShape& other) const { return n == other.n && l == other.l; }
  bool operator!=(const SpaceShape& other) const { return !(*this == other); }
};

/// Largest dimension accepted by SpaceShape.
inline constexpr std::size_t kMaxDim = 4096;

}  // namespace rttkit
