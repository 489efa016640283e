#ifndef WEYLGP_COMMPOLY_HPP
#define WEYLGP_COMMPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylgp/rational.hpp"

namespace weylgp {

/// Exponent vector of a commutative monomial in the generators F_1..F_r.
using Exponents = std::vector<std::uint32_t>;

/// Commutative polynomial in F_1..F_r with exact rational coefficients.
/// Zero coefficients are never stored; all exponent vectors have length r.
class CommPoly {
  public:
    CommPoly() : nvars_(0) {}
    explicit CommPoly(std::size_t nvars) : nvars_(nvars) {}
    CommPoly(std::size_t nvars, const Rational& constant);

    static CommPoly variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);
    static CommPoly monomial(Exponents exps, const Rational& coeff);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    Rational coeff(const Exponents& exps) const;
    void add_term(const Exponents& exps, const Rational& coeff);

    std::uint32_t total_degree() const;
    std::uint32_t degree_in(std::size_t index) const;

    CommPoly operator-() const;
    CommPoly operator+(const CommPoly& other) const;
    CommPoly operator-(const CommPoly& other) const;
    CommPoly operator*(const CommPoly& other) const;
    CommPoly operator*(const Rational& scalar) const;
    bool operator==(const CommPoly& other) const;
    bool operator!=(const CommPoly& other) const { return !(*this == other); }

    /// Formal partial derivative d/dF_index.
    CommPoly partial(std::size_t index) const;

    double eval(const std::vector<double>& values) const;

    std::string to_string(const std::vector<std::string>& names) const;

  private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;

    void check_compatible(const CommPoly& other) const;
};

inline CommPoly operator*(const Rational& scalar, const CommPoly& p) { return p * scalar; }

}  // namespace weylgp

#endif
