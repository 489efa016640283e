#include "weylgp/symexpr.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace weylgp {

struct SymExpr::Node {
    Kind kind;
    Rational value;            // Num
    VarBlock block = VarBlock::X;  // Var
    std::size_t index = 0;         // Var
    long ipower = 0;               // Pow
    std::vector<SymExpr> children;
};

SymExpr SymExpr::num(const Rational& value) {
    Node n;
    n.kind = Kind::Num;
    n.value = value;
    return SymExpr(std::make_shared<const Node>(std::move(n)));
}

SymExpr SymExpr::pi() {
    Node n;
    n.kind = Kind::Pi;
    return SymExpr(std::make_shared<const Node>(std::move(n)));
}

SymExpr SymExpr::var(VarBlock block, std::size_t index) {
    Node n;
    n.kind = Kind::Var;
    n.block = block;
    n.index = index;
    return SymExpr(std::make_shared<const Node>(std::move(n)));
}

SymExpr::Kind SymExpr::kind() const { return node_->kind; }

bool SymExpr::is_zero() const { return node_->kind == Kind::Num && node_->value == 0; }
bool SymExpr::is_one() const { return node_->kind == Kind::Num && node_->value == 1; }

SymExpr SymExpr::add(std::vector<SymExpr> children) {
    std::vector<SymExpr> flat;
    Rational constant(0);
    for (auto& c : children) {
        if (c.node_->kind == Kind::Add) {
            for (const auto& g : c.node_->children) {
                if (g.node_->kind == Kind::Num)
                    constant += g.node_->value;
                else
                    flat.push_back(g);
            }
        } else if (c.node_->kind == Kind::Num) {
            constant += c.node_->value;
        } else {
            flat.push_back(std::move(c));
        }
    }
    if (constant != 0) flat.push_back(num(constant));
    if (flat.empty()) return num(0);
    if (flat.size() == 1) return flat.front();
    Node n;
    n.kind = Kind::Add;
    n.children = std::move(flat);
    return SymExpr(std::make_shared<const Node>(std::move(n)));
}

SymExpr SymExpr::mul(std::vector<SymExpr> children) {
    std::vector<SymExpr> flat;
    std::vector<SymExpr> exp_args;
    Rational constant(1);
    for (auto& c : children) {
        if (c.node_->kind == Kind::Mul) {
            for (const auto& g : c.node_->children) {
                if (g.node_->kind == Kind::Num)
                    constant *= g.node_->value;
                else if (g.node_->kind == Kind::Exp)
                    exp_args.push_back(g.node_->children.front());
                else
                    flat.push_back(g);
            }
        } else if (c.node_->kind == Kind::Num) {
            constant *= c.node_->value;
        } else if (c.node_->kind == Kind::Exp) {
            exp_args.push_back(c.node_->children.front());
        } else {
            flat.push_back(std::move(c));
        }
    }
    if (constant == 0) return num(0);
    if (!exp_args.empty()) flat.push_back(exp(add(std::move(exp_args))));
    if (constant != 1) flat.insert(flat.begin(), num(constant));
    if (flat.empty()) return num(1);
    if (flat.size() == 1) return flat.front();
    Node n;
    n.kind = Kind::Mul;
    n.children = std::move(flat);
    return SymExpr(std::make_shared<const Node>(std::move(n)));
}

SymExpr SymExpr::pow(SymExpr base, long exponent) {
    if (exponent == 0) return num(1);
    if (exponent == 1) return base;
    if (base.node_->kind == Kind::Num) {
        const Rational& v = base.node_->value;
        if (v == 0 && exponent < 0) throw std::domain_error("zero base with negative power");
        Rational result(1);
        Rational b = exponent > 0 ? v : Rational(1) / v;
        for (long k = 0; k < std::labs(exponent); ++k) result *= b;
        return num(result);
    }
    if (base.node_->kind == Kind::Pow)
        return pow(base.node_->children.front(), base.node_->ipower * exponent);
    if (base.node_->kind == Kind::Exp)
        return exp(mul({num(exponent), base.node_->children.front()}));
    Node n;
    n.kind = Kind::Pow;
    n.ipower = exponent;
    n.children = {std::move(base)};
    return SymExpr(std::make_shared<const Node>(std::move(n)));
}

SymExpr SymExpr::exp(SymExpr arg) {
    if (arg.is_zero()) return num(1);
    Node n;
    n.kind = Kind::Exp;
    n.children = {std::move(arg)};
    return SymExpr(std::make_shared<const Node>(std::move(n)));
}

SymExpr SymExpr::sin(SymExpr arg) {
    if (arg.is_zero()) return num(0);
    Node n;
    n.kind = Kind::Sin;
    n.children = {std::move(arg)};
    return SymExpr(std::make_shared<const Node>(std::move(n)));
}

SymExpr SymExpr::cos(SymExpr arg) {
    if (arg.is_zero()) return num(1);
    Node n;
    n.kind = Kind::Cos;
    n.children = {std::move(arg)};
    return SymExpr(std::make_shared<const Node>(std::move(n)));
}

SymExpr SymExpr::sqrt(SymExpr arg) {
    Node n;
    n.kind = Kind::Sqrt;
    n.children = {std::move(arg)};
    return SymExpr(std::make_shared<const Node>(std::move(n)));
}

SymExpr SymExpr::abs(SymExpr arg) {
    Node n;
    n.kind = Kind::Abs;
    n.children = {std::move(arg)};
    return SymExpr(std::make_shared<const Node>(std::move(n)));
}

SymExpr SymExpr::sign(SymExpr arg) {
    Node n;
    n.kind = Kind::Sign;
    n.children = {std::move(arg)};
    return SymExpr(std::make_shared<const Node>(std::move(n)));
}

SymExpr SymExpr::operator-(const SymExpr& other) const {
    return add({*this, mul({num(-1), other})});
}

SymExpr SymExpr::operator-() const { return mul({num(-1), *this}); }

bool SymExpr::non_smooth() const {
    switch (node_->kind) {
        case Kind::Sqrt:
        case Kind::Abs:
        case Kind::Sign:
            return true;
        default:
            for (const auto& c : node_->children)
                if (c.non_smooth()) return true;
            return false;
    }
}

SymExpr SymExpr::diff(VarBlock block, std::size_t index) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Num:
        case Kind::Pi:
        case Kind::Sign:
            return num(0);
        case Kind::Var:
            return (n.block == block && n.index == index) ? num(1) : num(0);
        case Kind::Add: {
            std::vector<SymExpr> parts;
            parts.reserve(n.children.size());
            for (const auto& c : n.children) parts.push_back(c.diff(block, index));
            return add(std::move(parts));
        }
        case Kind::Mul: {
            std::vector<SymExpr> parts;
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                std::vector<SymExpr> factors;
                factors.reserve(n.children.size());
                for (std::size_t j = 0; j < n.children.size(); ++j)
                    factors.push_back(i == j ? n.children[j].diff(block, index) : n.children[j]);
                parts.push_back(mul(std::move(factors)));
            }
            return add(std::move(parts));
        }
        case Kind::Pow: {
            const SymExpr& base = n.children.front();
            return mul({num(n.ipower), pow(base, n.ipower - 1), base.diff(block, index)});
        }
        case Kind::Exp:
            return mul({*this, n.children.front().diff(block, index)});
        case Kind::Sin:
            return mul({cos(n.children.front()), n.children.front().diff(block, index)});
        case Kind::Cos:
            return mul({num(-1), sin(n.children.front()), n.children.front().diff(block, index)});
        case Kind::Sqrt:
            return mul({num(Rational(1, 2)), pow(*this, -1), n.children.front().diff(block, index)});
        case Kind::Abs:
            return mul({sign(n.children.front()), n.children.front().diff(block, index)});
    }
    throw std::logic_error("unhandled expression kind");
}

SymExpr SymExpr::with_block(VarBlock block) const {
    const Node& n = *node_;
    if (n.kind == Kind::Var) {
        if (n.block == block) return *this;
        return var(block, n.index);
    }
    if (n.children.empty()) return *this;
    std::vector<SymExpr> mapped;
    mapped.reserve(n.children.size());
    bool changed = false;
    for (const auto& c : n.children) {
        mapped.push_back(c.with_block(block));
        changed = changed || mapped.back().node_ != c.node_;
    }
    if (!changed) return *this;
    Node copy;
    copy.kind = n.kind;
    copy.value = n.value;
    copy.block = n.block;
    copy.index = n.index;
    copy.ipower = n.ipower;
    copy.children = std::move(mapped);
    return SymExpr(std::make_shared<const Node>(std::move(copy)));
}

SymExpr SymExpr::swap_blocks() const {
    const Node& n = *node_;
    if (n.kind == Kind::Var)
        return var(n.block == VarBlock::X ? VarBlock::Xp : VarBlock::X, n.index);
    if (n.children.empty()) return *this;
    std::vector<SymExpr> mapped;
    mapped.reserve(n.children.size());
    for (const auto& c : n.children) mapped.push_back(c.swap_blocks());
    Node copy;
    copy.kind = n.kind;
    copy.value = n.value;
    copy.block = n.block;
    copy.index = n.index;
    copy.ipower = n.ipower;
    copy.children = std::move(mapped);
    return SymExpr(std::make_shared<const Node>(std::move(copy)));
}

void SymExpr::EvalContext::reset(const std::vector<double>& px, const std::vector<double>& pxp) {
    x = px;
    xp = pxp;
    memo.clear();
}

double SymExpr::eval(EvalContext& ctx) const {
    const Node* n = node_.get();
    auto it = ctx.memo.find(n);
    if (it != ctx.memo.end()) return it->second;
    double result = 0.0;
    switch (n->kind) {
        case Kind::Num:
            result = to_double(n->value);
            break;
        case Kind::Pi:
            result = M_PI;
            break;
        case Kind::Var: {
            const auto& v = n->block == VarBlock::X ? ctx.x : ctx.xp;
            if (n->index >= v.size()) throw std::out_of_range("variable index beyond evaluation point");
            result = v[n->index];
            break;
        }
        case Kind::Add:
            for (const auto& c : n->children) result += c.eval(ctx);
            break;
        case Kind::Mul:
            result = 1.0;
            for (const auto& c : n->children) result *= c.eval(ctx);
            break;
        case Kind::Pow:
            result = std::pow(n->children.front().eval(ctx), static_cast<double>(n->ipower));
            break;
        case Kind::Exp:
            result = std::exp(n->children.front().eval(ctx));
            break;
        case Kind::Sin:
            result = std::sin(n->children.front().eval(ctx));
            break;
        case Kind::Cos:
            result = std::cos(n->children.front().eval(ctx));
            break;
        case Kind::Sqrt:
            result = std::sqrt(n->children.front().eval(ctx));
            break;
        case Kind::Abs:
            result = std::fabs(n->children.front().eval(ctx));
            break;
        case Kind::Sign: {
            double v = n->children.front().eval(ctx);
            result = v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0);
            break;
        }
    }
    ctx.memo.emplace(n, result);
    return result;
}

double SymExpr::eval(const std::vector<double>& x, const std::vector<double>& xp) const {
    EvalContext ctx;
    ctx.x = x;
    ctx.xp = xp;
    return eval(ctx);
}

std::string SymExpr::to_string(const std::vector<std::string>& coord_names) const {
    const Node& n = *node_;
    auto var_name = [&](VarBlock block, std::size_t index) {
        std::string base = index < coord_names.size() ? coord_names[index]
                                                      : "x" + std::to_string(index + 1);
        return block == VarBlock::X ? base : base + "'";
    };
    std::ostringstream out;
    switch (n.kind) {
        case Kind::Num:
            out << weylgp::to_string(n.value);
            break;
        case Kind::Pi:
            out << "pi";
            break;
        case Kind::Var:
            out << var_name(n.block, n.index);
            break;
        case Kind::Add: {
            out << "(";
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                if (i) out << " + ";
                out << n.children[i].to_string(coord_names);
            }
            out << ")";
            break;
        }
        case Kind::Mul: {
            out << "(";
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                if (i) out << "*";
                out << n.children[i].to_string(coord_names);
            }
            out << ")";
            break;
        }
        case Kind::Pow:
            out << n.children.front().to_string(coord_names) << "^" << n.ipower;
            break;
        case Kind::Exp:
            out << "exp(" << n.children.front().to_string(coord_names) << ")";
            break;
        case Kind::Sin:
            out << "sin(" << n.children.front().to_string(coord_names) << ")";
            break;
        case Kind::Cos:
            out << "cos(" << n.children.front().to_string(coord_names) << ")";
            break;
        case Kind::Sqrt:
            out << "sqrt(" << n.children.front().to_string(coord_names) << ")";
            break;
        case Kind::Abs:
            out << "abs(" << n.children.front().to_string(coord_names) << ")";
            break;
        case Kind::Sign:
            out << "sign(" << n.children.front().to_string(coord_names) << ")";
            break;
    }
    return out.str();
}

}  // namespace weylgp
