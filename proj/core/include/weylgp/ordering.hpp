#ifndef WEYLGP_ORDERING_HPP
#define WEYLGP_ORDERING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "weylgp/presentation.hpp"
#include "weylgp/rational.hpp"

namespace weylgp {

/// Monomial of the operator ring R = K<d_1..d_d> or of a free module R^(1xq):
/// f_1^a1 .. f_r^ar d_1^b1 .. d_d^bd e_component. Components are 1-based and
/// equal to 1 for ring elements.
struct OreMonomial {
    Exponents alpha;  // generator exponents, length r
    Exponents beta;   // partial exponents, length d
    std::uint32_t component = 1;

    bool operator==(const OreMonomial& other) const = default;

    bool is_unit() const;
    std::uint32_t alpha_degree() const;
    std::uint32_t beta_degree() const;

    /// Commutative product: adds exponents, keeps the right factor's component.
    OreMonomial times(const OreMonomial& other) const;

    /// Componentwise divisibility within the same component.
    bool divides(const OreMonomial& other) const;

    /// The bijection into Z^(d+r): (beta_1..beta_d, alpha_1..alpha_r).
    Exponents epsilon() const;
};

/// Structural ordering for canonical containers, independent of any monomial
/// ordering (component, then beta, then alpha, lexicographic).
struct OreMonomialLess {
    bool operator()(const OreMonomial& a, const OreMonomial& b) const;
};

/// Total monomial ordering on Mon(R) or Mon(R^(1xq)). Scalar kinds:
/// weighted degree-reverse-lexicographic and partial-eliminating. Module
/// kinds wrap a base ordering term-over-position, position-over-term, or
/// eliminating the first `split` components.
class MonomialOrdering {
  public:
    enum class Kind { WDegRevLex, ElimPartials, Top, Pot, ElimComponents };

    struct Impl;

    /// Weights are listed (f_1..f_r, d_1..d_d) and must be positive.
    static MonomialOrdering wdegrevlex(std::vector<Rational> weights);
    static MonomialOrdering unit_degrevlex(std::size_t r, std::size_t d);
    static MonomialOrdering elim_partials();
    static MonomialOrdering top(MonomialOrdering base);
    static MonomialOrdering pot(MonomialOrdering base);
    static MonomialOrdering elim_components(std::size_t split, MonomialOrdering first,
                                            MonomialOrdering second);

    Kind kind() const;
    /// -1, 0, +1 for a < b, a = b, a > b.
    int compare(const OreMonomial& a, const OreMonomial& b) const;

    bool is_scalar() const;
    /// Scalar orderings reachable through module wrappers (for the leading
    /// monomial assumption check).
    std::vector<MonomialOrdering> scalar_parts() const;

    std::string describe() const;

    bool same_as(const MonomialOrdering& other) const { return impl_ == other.impl_; }

  private:
    explicit MonomialOrdering(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// True iff the leading monomial of d_j f_i ( = f_i d_j + g_{i,j} ) is
/// f_i d_j for every pair (i, j), verified by direct comparison.
bool check_assumption(const Presentation& pres, const MonomialOrdering& ord);

/// As check_assumption, reporting the first violated pair (1-based) if any.
bool check_assumption(const Presentation& pres, const MonomialOrdering& ord,
                      std::size_t& bad_i, std::size_t& bad_j);

}  // namespace weylgp

#endif
