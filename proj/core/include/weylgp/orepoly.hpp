#ifndef WEYLGP_OREPOLY_HPP
#define WEYLGP_OREPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weylgp/ordering.hpp"
#include "weylgp/presentation.hpp"

namespace weylgp {

/// Element of R = K<d_1..d_d> (rank 1) or of the free left module R^(1xq)
/// (rank q) in normal form: a finite sum of monomials f^alpha d^beta e_k with
/// exact rational coefficients. Terms are kept ordered by the active monomial
/// ordering, greatest first, so the leading term is the first entry. No zero
/// coefficients are stored.
class OrePoly {
  public:
    struct TermGreater {
        MonomialOrdering ord;
        bool operator()(const OreMonomial& a, const OreMonomial& b) const {
            return ord.compare(a, b) > 0;
        }
    };
    using TermMap = std::map<OreMonomial, Rational, TermGreater>;

    OrePoly(PresentationPtr pres, MonomialOrdering ord, std::uint32_t rank = 1);

    static OrePoly zero(PresentationPtr pres, MonomialOrdering ord, std::uint32_t rank = 1);
    static OrePoly constant(PresentationPtr pres, MonomialOrdering ord, const Rational& c);
    static OrePoly monomial(PresentationPtr pres, MonomialOrdering ord, OreMonomial m,
                            const Rational& c, std::uint32_t rank = 1);
    /// The operator d_j (0-based index).
    static OrePoly partial(PresentationPtr pres, MonomialOrdering ord, std::size_t j);
    /// The multiplication operator f_i (0-based index).
    static OrePoly generator(PresentationPtr pres, MonomialOrdering ord, std::size_t i);
    /// Embeds a coefficient polynomial as a multiplication operator.
    static OrePoly from_coeff(PresentationPtr pres, MonomialOrdering ord, const CommPoly& p);

    const PresentationPtr& presentation() const { return pres_; }
    const MonomialOrdering& ordering() const { return ord_; }
    std::uint32_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Greatest monomial with its coefficient. Throws on the zero element.
    std::pair<OreMonomial, Rational> leading_term() const;
    const OreMonomial& leading_monomial() const;

    std::uint32_t max_beta_degree() const;
    std::uint32_t max_alpha_degree() const;

    void add_term(const OreMonomial& m, const Rational& c);

    OrePoly operator-() const;
    OrePoly operator+(const OrePoly& other) const;
    OrePoly operator-(const OrePoly& other) const;
    OrePoly operator*(const Rational& scalar) const;

    /// Exact noncommutative product. The left factor must be scalar; the
    /// right factor may be scalar or a module element. Partials are commuted
    /// leftward past coefficients with d_j a = a d_j + delta_j(a).
    OrePoly multiply(const OrePoly& other) const;

    /// The involution theta with theta(d_j) = -d_j and theta fixing K;
    /// reverses products. Scalar elements only.
    OrePoly theta() const;

    /// Same terms re-sorted under a different active ordering.
    OrePoly with_ordering(const MonomialOrdering& ord) const;

    /// Ordering-independent structural equality.
    bool equals(const OrePoly& other) const;

    /// Divides by the rational content and fixes the sign so that the leading
    /// coefficient is positive. Zero stays zero.
    OrePoly normalized() const;

    /// Scalar slice of one component (returned with component 1, rank 1).
    OrePoly component_part(std::uint32_t component) const;
    /// Scalar element re-embedded at the given component of a rank-q module.
    OrePoly embedded(std::uint32_t component, std::uint32_t rank) const;
    /// Module element with all components shifted by the given offset.
    OrePoly shifted_components(std::int64_t offset, std::uint32_t new_rank) const;

    std::string to_string() const;

  private:
    PresentationPtr pres_;
    MonomialOrdering ord_;
    std::uint32_t rank_;
    TermMap terms_;

    void check_same_space(const OrePoly& other) const;
    /// d_j * this, computed by one leftward commutation pass.
    OrePoly partial_left(std::size_t j) const;
};

inline OrePoly operator*(const Rational& scalar, const OrePoly& p) { return p * scalar; }

namespace detail {
/// Count of single-partial commutation rewrites, a termination witness for
/// multiply; reset freely from tests.
extern thread_local unsigned long long commutation_steps;
}  // namespace detail

}  // namespace weylgp

#endif
