#ifndef WEYLGP_SYZYGY_HPP
#define WEYLGP_SYZYGY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "weylgp/janet.hpp"
#include "weylgp/opmatrix.hpp"

namespace weylgp {

/// Scalar base ordering used inside kernel and membership computations when
/// none is supplied: unit-weight degrevlex.
MonomialOrdering default_scalar_ordering(const Presentation& pres);

/// Rows generate { w in R^(1xa) | w A = 0 } for A in R^(axb). Computed from a
/// Janet basis of the rows of (A | I_a) under a component ordering that
/// eliminates the first b components; kept elements are those vanishing on
/// the first block. Generators are autoreduced and content-stripped.
OperatorMatrix left_kernel(const OperatorMatrix& A,
                           std::optional<MonomialOrdering> scalar_base = std::nullopt);

/// Columns generate { v | A v = 0 }, realized as theta(left_kernel(theta(A))).
OperatorMatrix right_kernel(const OperatorMatrix& A,
                            std::optional<MonomialOrdering> scalar_base = std::nullopt);

/// Janet basis of the row module of a matrix (zero rows are skipped); empty
/// when the matrix has no nonzero row.
std::optional<JanetBasis> row_module_basis(const OperatorMatrix& A,
                                           std::optional<MonomialOrdering> scalar_base =
                                               std::nullopt);

/// Every row of `candidates` lies in the row module of `A`.
bool row_module_contains(const OperatorMatrix& A, const OperatorMatrix& candidates);
bool row_module_equivalent(const OperatorMatrix& A, const OperatorMatrix& B);
/// Column modules compared through the involution.
bool column_module_contains(const OperatorMatrix& A, const OperatorMatrix& candidates);
bool column_module_equivalent(const OperatorMatrix& A, const OperatorMatrix& B);

struct ParametrizationResult {
    OperatorMatrix B;       // right nullspace of A
    OperatorMatrix Aprime;  // left nullspace of B
    bool parametrizable = false;
    /// Reduction traces of the rows of Aprime modulo the Janet basis of the
    /// row module of A; all remainders vanish iff parametrizable.
    std::vector<ReduceResult> certificate;
    std::optional<JanetBasis> row_basis;
};

/// Decides parametrizability of sol(A): B parametrizes the largest
/// parametrizable subbehavior sol(Aprime); sol(A) itself is parametrizable
/// iff the rows of Aprime lie in the row module of A.
ParametrizationResult parametrize(const OperatorMatrix& A);

/// Parametrization of the intersection of the images of B1 and B2: C is the
/// right nullspace of (B1 B2), split as (C1; C2); returns P = B1 C1 together
/// with C. The identity B1 C1 = -B2 C2 holds exactly.
std::pair<OperatorMatrix, OperatorMatrix> intersect_parametrizations(const OperatorMatrix& B1,
                                                                     const OperatorMatrix& B2);

}  // namespace weylgp

#endif
