#include "rttkit/monodromy.hpp"

#include "rttkit/errors.hpp"

namespace rttkit {

const SparseOperator& OperatorMatrix::at(int i, int j) const {
  if (i < 1 || i > n || j < 1 || j > n) throw IndexError("OperatorMatrix: index out of range");
  return data[static_cast<std::size_t>((i - 1) * n + (j - 1))];
}

SparseOperator& OperatorMatrix::at(int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw IndexError("OperatorMatrix: index out of range");
  return data[static_cast<std::size_t>((i - 1) * n + (j - 1))];
}

SparseOperator MonodromySource::entry(int i, int j, const Scalar& u) const {
  check_indices(i, j);
  return matrix(u)->at(i, j);
}

Scalar MonodromySource::alpha(int i, const Scalar& u) const {
  if (i < 1 || i >= n()) throw IndexError("alpha: index out of range");
  const Scalar den = lambda(i + 1, u);
  if (den == 0) throw GenericityError("alpha: lambda_{i+1} vanishes at " + to_string(u));
  return lambda(i, u) / den;
}

SparseOperator MonodromySource::zero_mode(int, int) const {
  throw DomainError("zero modes unavailable: " + describe() + " is not normalized to T(u) -> I");
}

void MonodromySource::check_indices(int i, int j) const {
  if (i < 1 || i > n() || j < 1 || j > n())
    throw IndexError("monodromy index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range");
}

}  // namespace rttkit
