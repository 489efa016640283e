#ifndef WEYLGP_SYMEXPR_HPP
#define WEYLGP_SYMEXPR_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylgp/rational.hpp"

namespace weylgp {

/// Variable block of an expression: unprimed arguments x or primed arguments x'.
enum class VarBlock { X = 0, Xp = 1 };

/// Immutable symbolic scalar expression over the coordinate variables of both
/// argument blocks. Construction runs light normalization (constant folding,
/// sum/product flattening, x^0 -> 1, merged exp factors); equality of
/// expressions is always decided numerically by callers, never syntactically.
class SymExpr {
  public:
    enum class Kind { Num, Pi, Var, Add, Mul, Pow, Exp, Sin, Cos, Sqrt, Abs, Sign };

    struct Node;

    SymExpr() : SymExpr(num(0)) {}

    static SymExpr num(const Rational& value);
    static SymExpr num(long value) { return num(Rational(value)); }
    static SymExpr pi();
    static SymExpr var(VarBlock block, std::size_t index);

    static SymExpr add(std::vector<SymExpr> children);
    static SymExpr mul(std::vector<SymExpr> children);
    static SymExpr pow(SymExpr base, long exponent);
    static SymExpr exp(SymExpr arg);
    static SymExpr sin(SymExpr arg);
    static SymExpr cos(SymExpr arg);
    static SymExpr sqrt(SymExpr arg);
    static SymExpr abs(SymExpr arg);
    static SymExpr sign(SymExpr arg);

    SymExpr operator+(const SymExpr& other) const { return add({*this, other}); }
    SymExpr operator-(const SymExpr& other) const;
    SymExpr operator*(const SymExpr& other) const { return mul({*this, other}); }
    SymExpr operator-() const;

    Kind kind() const;
    bool is_zero() const;
    bool is_one() const;

    /// True if the tree contains a sqrt, abs or sign node (smoothness at
    /// zeros of their arguments is not guaranteed).
    bool non_smooth() const;

    /// Partial derivative with respect to the given coordinate of a block.
    SymExpr diff(VarBlock block, std::size_t index) const;

    /// Rewrites every variable into the given block.
    SymExpr with_block(VarBlock block) const;
    /// Exchanges the two blocks (x <-> x').
    SymExpr swap_blocks() const;

    /// Evaluation cache shared across expressions with common subtrees.
    struct EvalContext {
        std::vector<double> x;
        std::vector<double> xp;
        std::unordered_map<const Node*, double> memo;
        void reset(const std::vector<double>& px, const std::vector<double>& pxp);
    };

    double eval(EvalContext& ctx) const;
    double eval(const std::vector<double>& x, const std::vector<double>& xp = {}) const;

    std::string to_string(const std::vector<std::string>& coord_names = {}) const;

    const Node* raw() const { return node_.get(); }

  private:
    explicit SymExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

}  // namespace weylgp

#endif
