#ifndef WEYLGP_JANET_HPP
#define WEYLGP_JANET_HPP

#include <string>
#include <vector>

#include "weylgp/orepoly.hpp"

namespace weylgp {

/// Multiplicative-variable flags of one monomial, indexed by epsilon
/// position: 0..d-1 the partials, d..d+r-1 the generators.
using VarMask = std::vector<bool>;

/// Janet partition for a finite monomial set, computed per component on the
/// epsilon exponent vectors with prefix matching. Aligned with the input.
std::vector<VarMask> multiplicative_variables(const std::vector<OreMonomial>& monomials);

/// True iff u lies in the involutive cone of m under the given mask.
bool cone_contains(const OreMonomial& m, const VarMask& mask, const OreMonomial& u);

/// Index of the involutive divisor of u in M, or -1. Throws if two cones
/// overlap on u (the division must be disjoint).
int involutive_divisor(const std::vector<OreMonomial>& monomials,
                       const std::vector<VarMask>& masks, const OreMonomial& u);

/// True iff u is an ordinary multiple of some element of M (same component).
bool in_monomial_ideal(const std::vector<OreMonomial>& monomials, const OreMonomial& u);

/// The unique smallest Janet complete superset of M.
std::vector<OreMonomial> janet_completion(std::vector<OreMonomial> monomials,
                                          const MonomialOrdering& ord);

bool is_janet_complete(const std::vector<OreMonomial>& monomials);

/// Janet basis of a left ideal of R or a submodule of R^(1xq): elements with
/// pairwise distinct leading monomials whose cones are disjoint and cover the
/// leading monomial ideal; every non-multiplicative prolongation reduces to
/// zero. Optionally carries certificates expressing each element as a left
/// combination of the original generators.
class JanetBasis {
  public:
    JanetBasis(std::vector<OrePoly> elements, std::vector<VarMask> multiplicative,
               MonomialOrdering ordering, std::vector<std::vector<OrePoly>> certificates = {});

    const std::vector<OrePoly>& elements() const { return elements_; }
    const std::vector<VarMask>& multiplicative() const { return multiplicative_; }
    const MonomialOrdering& ordering() const { return ordering_; }
    bool has_certificates() const { return !certificates_.empty(); }
    /// certificates()[k][i]: scalar multiplier of input generator i in basis
    /// element k.
    const std::vector<std::vector<OrePoly>>& certificates() const { return certificates_; }

    std::size_t size() const { return elements_.size(); }
    std::vector<OreMonomial> leading_monomials() const;

    /// Multiplicative variables of one element by display name.
    std::vector<std::string> multiplicative_names(std::size_t index) const;

  private:
    std::vector<OrePoly> elements_;
    std::vector<VarMask> multiplicative_;
    MonomialOrdering ordering_;
    std::vector<std::vector<OrePoly>> certificates_;
};

struct ReduceResult {
    OrePoly remainder;
    /// Scalar quotients aligned with the basis: p = sum q_k * g_k + remainder.
    std::vector<OrePoly> quotients;
};

/// Full involutive normal form: the remainder has no monomial in the cones of
/// the basis, and every division step uses the unique involutive divisor.
ReduceResult janet_reduce(const OrePoly& p, const JanetBasis& basis);

bool is_member(const OrePoly& p, const JanetBasis& basis);

struct JanetOptions {
    bool with_certificates = true;
};

/// Computes a Janet basis for the left ideal (or submodule) generated by the
/// given nonzero elements: preliminary pairwise head reduction, Janet
/// completion, and reduction of non-multiplicative prolongations until all of
/// them vanish. The leading monomial ideal grows strictly at every
/// augmentation step.
JanetBasis janet_basis(const std::vector<OrePoly>& generators, const MonomialOrdering& ord,
                       const JanetOptions& options = {});

}  // namespace weylgp

#endif
