#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rttkit/monodromy.hpp"
#include "rttkit/qdet.hpp"
#include "rttkit/verdict.hpp"

namespace rttkit {

/// Gauss coordinates of T(u) = F·D·E at one point. F is unit upper triangular
/// with entry (i,j) = F_ji, E is unit lower triangular with entry (j,i) = E_ij
/// (i < j), D = diag(k_1, …, k_N). Accessors are 1-based.
struct GaussFrame {
  Scalar u;
  int n = 0;
  SpaceShape shape;
  std::map<std::pair<int, int>, SparseOperator> f;  // key (j, i), i < j
  std::map<std::pair<int, int>, SparseOperator> e;  // key (i, j), i < j
  std::vector<SparseOperator> k;
  std::vector<SparseOperator> k_inv;

  const SparseOperator& F(int j, int i) const;
  const SparseOperator& E(int i, int j) const;
  const SparseOperator& K(int i) const;
  const SparseOperator& Kinv(int i) const;
};

/// Coordinates of F(u)^{-1} and E(u)^{-1}: F^{-1} has entry (i,j) = F̃_ji and
/// E^{-1} has entry (j,i) = Ẽ_ij.
struct TildeFrame {
  Scalar u;
  int n = 0;
  SpaceShape shape;
  std::map<std::pair<int, int>, SparseOperator> f;  // key (j, i)
  std::map<std::pair<int, int>, SparseOperator> e;  // key (i, j)

  const SparseOperator& F(int j, int i) const;
  const SparseOperator& E(int i, int j) const;
};

/// Corner elimination starting from k_N = T_NN. Throws SingularError when a
/// pivot k_m(u) is not invertible.
GaussFrame gauss_decompose(const MonodromySource& source, const Scalar& u);

/// Alternating chain sums for F̃_ji and Ẽ_ij.
TildeFrame tilde_coordinates(const GaussFrame& frame);

/// Assembled operator matrices.
OperatorMatrix f_matrix(const GaussFrame& frame);
OperatorMatrix d_matrix(const GaussFrame& frame);
OperatorMatrix e_matrix(const GaussFrame& frame);
OperatorMatrix f_inverse_matrix(const TildeFrame& tilde);
OperatorMatrix e_inverse_matrix(const TildeFrame& tilde);
OperatorMatrix matrix_product(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix reconstruct(const GaussFrame& frame);
bool is_identity(const OperatorMatrix& m);

/// Reconstruction F·D·E = T, vacuum annihilation by E, k_i eigenvalues, and
/// exact inverse assembly of the tilde coordinates.
CheckList verify_gauss_frame(const MonodromySource& source, const Scalar& u);

/// u^{-1} coefficients: F_ji[0] = T_ij[0], E_ij[0] = T_ji[0], k_i[0] = T_ii[0].
struct GaussZeroModes {
  int n = 0;
  std::map<std::pair<int, int>, SparseOperator> f;  // key (j, i)
  std::map<std::pair<int, int>, SparseOperator> e;  // key (i, j)
  std::vector<SparseOperator> k;

  const SparseOperator& F(int j, int i) const;
  const SparseOperator& E(int i, int j) const;
};

/// Throws DomainError for sources without zero modes (e.g. twisted chains).
GaussZeroModes gauss_zero_modes(const MonodromySource& source);

/// Multiple-commutator presentations of F_ji, F̃_ji, E_ij, Ẽ_ij for all i < j,
/// the single-step relations for F (anchors "ap6", "ap7", "ap8"), and
/// [k_i(u)^{-1}, F_{i+1,i}[0]] = c k_i(u)^{-1} F_{i+1,i}(u).
/// `swap_order` reverses every commutator (negative control).
CheckList verify_multiple_commutators(const MonodromySource& source, const Scalar& u,
                                      bool swap_order = false);

/// Exchange relations between Gauss coordinates at two points ("ap1"–"ap5"),
/// plus their v = u - c specializations ("b4", "b5").
CheckList verify_gauss_exchange_relations(const MonodromySource& source, const Scalar& u,
                                          const Scalar& v);

/// Hat frame from the base coordinates at shifted points:
/// F̂_ji(u) = F̃_{N+1-i,N+1-j}(u-(N-j+1)c), Ê_ij(u) = Ẽ_{N+1-j,N+1-i}(u-(N-j+1)c),
/// k̂_j(u) = k_{N+1-j}(u-(N-j)c)^{-1} ∏_{ℓ=1}^{N-j} k_ℓ(u-ℓc) k_ℓ(u-(ℓ-1)c)^{-1}
/// (factors multiplied in the written order).
GaussFrame hat_gauss_via_formula(const MonodromySource& base, const Scalar& u);

/// Entrywise comparison of hat_gauss_via_formula with the decomposition of
/// T̂, plus the vacuum eigenvalues of k̂_j against λ̂_j.
CheckList verify_hat_gauss(const HattedSource& hatted, const Scalar& u);

/// T̂ induction relations: the normal-ordered corner ("b1", "b7"), and the
/// zero-mode relations "b8" and "b12" when the base has zero modes.
CheckList verify_induction_relations(const HattedSource& hatted, const Scalar& u);

}  // namespace rttkit
