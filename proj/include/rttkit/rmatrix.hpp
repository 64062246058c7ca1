#pragma once

#include <utility>
#include <vector>

#include "rttkit/scalar.hpp"
#include "rttkit/sparse.hpp"

namespace rttkit {

/// g(u,v) = c/(u-v). Throws PoleError at u = v.
Scalar g_scalar(const Scalar& u, const Scalar& v, const Scalar& c);
/// f(u,v) = 1 + g(u,v) = (u-v+c)/(u-v).
Scalar f_scalar(const Scalar& u, const Scalar& v, const Scalar& c);
/// h(u,v) = f(u,v)/g(u,v) = (u-v+c)/c.
Scalar h_scalar(const Scalar& u, const Scalar& v, const Scalar& c);

/// ∏_{a∈A} ∏_{b∈B} f(a,b); 1 if either set is empty.
/// A pole reports the offending pair.
Scalar product_f(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Scalar& c);
Scalar product_g(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Scalar& c);
Scalar product_h(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Scalar& c);

/// Transposition P_ab of tensor factors a and b of (C^N)^{⊗L}.
SparseOperator permutation_operator(SpaceShape shape, int a, int b);

/// R_ab(u,v) = I + g(u,v) P_ab acting on factors a, b of `shape`.
SparseOperator r_operator(SpaceShape shape, int a, int b, const Scalar& u, const Scalar& v,
                          const Scalar& c);

/// R(u,v) on C^N ⊗ C^N.
SparseOperator r_matrix(int n, const Scalar& u, const Scalar& v, const Scalar& c);

/// R_12(u,v) R_13(u,w) R_23(v,w) == R_23(v,w) R_13(u,w) R_12(u,v) on (C^N)^{⊗3}.
bool yang_baxter_holds(int n, const Scalar& u, const Scalar& v, const Scalar& w, const Scalar& c);

}  // namespace rttkit
