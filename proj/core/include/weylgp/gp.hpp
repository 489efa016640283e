#ifndef WEYLGP_GP_HPP
#define WEYLGP_GP_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "weylgp/opmatrix.hpp"
#include "weylgp/symexpr.hpp"

namespace weylgp {

/// Numeric-stage failure (indefinite covariance, shape errors at evaluation).
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Matrix-valued covariance function: an ell x ell grid of expressions in the
/// two argument blocks (x, x').
class Kernel {
  public:
    Kernel(std::size_t dim, std::vector<std::vector<SymExpr>> entries);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return entries_.size(); }
    const SymExpr& at(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }

    Eigen::MatrixXd eval(const std::vector<double>& x, const std::vector<double>& xp) const;

  private:
    std::size_t dim_;
    std::vector<std::vector<SymExpr>> entries_;
};

/// Scalar squared exponential kernel exp(-|x-x'|^2 / (2 lengthscale^2)).
SymExpr se_kernel_expr(std::size_t dim, const Rational& lengthscale = Rational(1));
Kernel se_kernel(std::size_t dim, const Rational& lengthscale = Rational(1));

/// Gaussian process prior: mean expressions in x and a covariance kernel.
class GaussianProcess {
  public:
    GaussianProcess(std::vector<SymExpr> mean, Kernel covariance);

    /// ell_pp i.i.d. copies of the scalar squared exponential prior.
    static GaussianProcess iid_se(std::size_t dim, std::size_t count,
                                  const Rational& lengthscale = Rational(1));

    std::size_t dim() const { return covariance_.dim(); }
    std::size_t outputs() const { return mean_.size(); }
    const std::vector<SymExpr>& mean() const { return mean_; }
    const Kernel& covariance() const { return covariance_; }

    std::vector<double> mean_at(const std::vector<double>& x) const;

  private:
    std::vector<SymExpr> mean_;
    Kernel covariance_;
};

/// Applies a scalar operator to an expression: each monomial f^alpha d^beta
/// acts by differentiating with d^beta in the chosen argument block and then
/// multiplying by the realizations of f^alpha (realized in the same block).
SymExpr apply_operator(const OrePoly& p, const SymExpr& e, VarBlock side);

/// Pushforward of g under an operator matrix B (ell x ell''): mean B mu and
/// covariance B k(x,x') B'^T, built symbolically.
GaussianProcess pushforward(const OperatorMatrix& B, const GaussianProcess& g);

/// Pushforward under a matrix of plain multiplication operators given as
/// expressions in x: mean b mu and covariance b(x) k(x,x') b(x')^T.
GaussianProcess multiplier_pushforward(const std::vector<std::vector<SymExpr>>& entries,
                                       const GaussianProcess& g);

/// One scalar observation: value of one output component at a point, with
/// optional noise variance.
struct Observation {
    std::vector<double> point;
    std::size_t component = 0;  // 0-based
    double value = 0.0;
    double noise_var = 0.0;
};

struct DataSet {
    std::vector<Observation> observations;

    std::size_t size() const { return observations.size(); }
    bool empty() const { return observations.empty(); }
    void validate(std::size_t dim, std::size_t outputs) const;
};

/// Posterior evaluator: conditions the prior on the data through a Cholesky
/// factorization of k(X,X) plus the per-observation noise diagonal. With an
/// empty data set it evaluates the prior.
class PosteriorGP {
  public:
    PosteriorGP(GaussianProcess prior, DataSet data);

    std::size_t dim() const { return prior_.dim(); }
    std::size_t outputs() const { return prior_.outputs(); }
    const GaussianProcess& prior() const { return prior_; }

    std::vector<double> mean(const std::vector<double>& x) const;
    Eigen::MatrixXd cov(const std::vector<double>& x, const std::vector<double>& xp) const;
    std::vector<double> sd(const std::vector<double>& x) const;

    bool used_jitter() const { return jitter_ > 0.0; }
    double jitter() const { return jitter_; }

  private:
    GaussianProcess prior_;
    DataSet data_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
    Eigen::VectorXd alpha_;  // K^{-1} (y - mu(X))
    double jitter_ = 0.0;

    Eigen::MatrixXd cross_cov(const std::vector<double>& x) const;  // ell x m
};

struct GridPoint {
    std::vector<double> point;
    std::vector<double> mean;
    std::vector<double> sd;
};

using RegionPredicate = std::function<bool(const std::vector<double>&)>;

/// Row-major evaluation grid over an axis-aligned box (first axis slowest);
/// points failing the region predicate are omitted. Evaluation is a pure map
/// and runs on the requested number of threads.
std::vector<GridPoint> field_grid(const PosteriorGP& gp,
                                  const std::vector<std::pair<double, double>>& box,
                                  const std::vector<std::size_t>& resolution,
                                  const RegionPredicate& region = nullptr,
                                  unsigned threads = 1);

/// Reproducible joint draws of the prior at the given points: each row of the
/// result is one sample, laid out point-major ((point 0, comp 0..ell-1),
/// (point 1, ...)). A fixed 1e-10-scaled jitter is added if the joint
/// covariance fails to factor; beyond that the draw fails.
Eigen::MatrixXd sample_prior(const GaussianProcess& g,
                             const std::vector<std::vector<double>>& points,
                             std::uint64_t seed, std::size_t count = 1);

}  // namespace weylgp

#endif
