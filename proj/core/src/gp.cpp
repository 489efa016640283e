#include "weylgp/gp.hpp"

#include <cmath>
#include <random>
#include <thread>

namespace weylgp {

Kernel::Kernel(std::size_t dim, std::vector<std::vector<SymExpr>> entries)
    : dim_(dim), entries_(std::move(entries)) {
    for (const auto& row : entries_)
        if (row.size() != entries_.size())
            throw std::invalid_argument("covariance matrix must be square");
}

Eigen::MatrixXd Kernel::eval(const std::vector<double>& x, const std::vector<double>& xp) const {
    const std::size_t ell = size();
    Eigen::MatrixXd out(ell, ell);
    SymExpr::EvalContext ctx;
    ctx.x = x;
    ctx.xp = xp;
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = 0; j < ell; ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                entries_[i][j].eval(ctx);
    return out;
}

SymExpr se_kernel_expr(std::size_t dim, const Rational& lengthscale) {
    if (dim == 0) throw std::invalid_argument("kernel dimension must be positive");
    if (lengthscale <= 0) throw std::invalid_argument("lengthscale must be positive");
    std::vector<SymExpr> sq;
    Rational scale = Rational(-1, 2) / (lengthscale * lengthscale);
    for (std::size_t a = 0; a < dim; ++a) {
        SymExpr diff = SymExpr::var(VarBlock::X, a) - SymExpr::var(VarBlock::Xp, a);
        sq.push_back(SymExpr::pow(diff, 2));
    }
    return SymExpr::exp(SymExpr::num(scale) * SymExpr::add(std::move(sq)));
}

Kernel se_kernel(std::size_t dim, const Rational& lengthscale) {
    return Kernel(dim, {{se_kernel_expr(dim, lengthscale)}});
}

GaussianProcess::GaussianProcess(std::vector<SymExpr> mean, Kernel covariance)
    : mean_(std::move(mean)), covariance_(std::move(covariance)) {
    if (mean_.size() != covariance_.size())
        throw std::invalid_argument("mean length must match covariance size");
}

GaussianProcess GaussianProcess::iid_se(std::size_t dim, std::size_t count,
                                        const Rational& lengthscale) {
    SymExpr k = se_kernel_expr(dim, lengthscale);
    std::vector<std::vector<SymExpr>> entries(count, std::vector<SymExpr>(count, SymExpr::num(0)));
    for (std::size_t i = 0; i < count; ++i) entries[i][i] = k;
    return GaussianProcess(std::vector<SymExpr>(count, SymExpr::num(0)),
                           Kernel(dim, std::move(entries)));
}

std::vector<double> GaussianProcess::mean_at(const std::vector<double>& x) const {
    std::vector<double> out;
    out.reserve(mean_.size());
    SymExpr::EvalContext ctx;
    ctx.x = x;
    for (const auto& m : mean_) out.push_back(m.eval(ctx));
    return out;
}

SymExpr apply_operator(const OrePoly& p, const SymExpr& e, VarBlock side) {
    if (p.rank() != 1) throw std::invalid_argument("operators acting on kernels must be scalar");
    const Presentation& pres = *p.presentation();
    if (p.max_alpha_degree() > 0 && !pres.has_realizations())
        throw std::invalid_argument("operator coefficients lack realizations");
    std::vector<SymExpr> parts;
    for (const auto& [m, c] : p.terms()) {
        SymExpr acted = e;
        for (std::size_t j = 0; j < m.beta.size(); ++j)
            for (std::uint32_t k = 0; k < m.beta[j]; ++k) acted = acted.diff(side, j);
        std::vector<SymExpr> factors;
        factors.push_back(SymExpr::num(c));
        for (std::size_t i = 0; i < m.alpha.size(); ++i)
            if (m.alpha[i] > 0)
                factors.push_back(SymExpr::pow(pres.realizations()[i].with_block(side),
                                               static_cast<long>(m.alpha[i])));
        factors.push_back(acted);
        parts.push_back(SymExpr::mul(std::move(factors)));
    }
    return SymExpr::add(std::move(parts));
}

GaussianProcess pushforward(const OperatorMatrix& B, const GaussianProcess& g) {
    const std::size_t ell = B.rows();
    const std::size_t inner = B.cols();
    if (inner != g.outputs()) throw std::invalid_argument("operator matrix shape mismatch");

    std::vector<SymExpr> mean;
    mean.reserve(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        std::vector<SymExpr> parts;
        for (std::size_t u = 0; u < inner; ++u) {
            if (B.at(i, u).is_zero() || g.mean()[u].is_zero()) continue;
            parts.push_back(apply_operator(B.at(i, u), g.mean()[u], VarBlock::X));
        }
        mean.push_back(SymExpr::add(std::move(parts)));
    }

    std::vector<std::vector<SymExpr>> cov(ell, std::vector<SymExpr>(ell, SymExpr::num(0)));
    for (std::size_t i = 0; i < ell; ++i) {
        for (std::size_t j = 0; j < ell; ++j) {
            std::vector<SymExpr> parts;
            for (std::size_t u = 0; u < inner; ++u) {
                if (B.at(i, u).is_zero()) continue;
                for (std::size_t v = 0; v < inner; ++v) {
                    if (B.at(j, v).is_zero()) continue;
                    const SymExpr& kuv = g.covariance().at(u, v);
                    if (kuv.is_zero()) continue;
                    SymExpr inner_applied = apply_operator(B.at(j, v), kuv, VarBlock::Xp);
                    parts.push_back(apply_operator(B.at(i, u), inner_applied, VarBlock::X));
                }
            }
            cov[i][j] = SymExpr::add(std::move(parts));
        }
    }
    return GaussianProcess(std::move(mean), Kernel(g.dim(), std::move(cov)));
}

GaussianProcess multiplier_pushforward(const std::vector<std::vector<SymExpr>>& entries,
                                       const GaussianProcess& g) {
    const std::size_t ell = entries.size();
    if (ell == 0 || entries.front().size() != g.outputs())
        throw std::invalid_argument("multiplier matrix shape mismatch");
    std::vector<SymExpr> mean;
    for (std::size_t i = 0; i < ell; ++i) {
        std::vector<SymExpr> parts;
        for (std::size_t u = 0; u < g.outputs(); ++u)
            parts.push_back(entries[i][u] * g.mean()[u]);
        mean.push_back(SymExpr::add(std::move(parts)));
    }
    std::vector<std::vector<SymExpr>> cov(ell, std::vector<SymExpr>(ell, SymExpr::num(0)));
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = 0; j < ell; ++j) {
            std::vector<SymExpr> parts;
            for (std::size_t u = 0; u < g.outputs(); ++u)
                for (std::size_t v = 0; v < g.outputs(); ++v)
                    parts.push_back(entries[i][u] *
                                    entries[j][v].with_block(VarBlock::Xp) *
                                    g.covariance().at(u, v));
            cov[i][j] = SymExpr::add(std::move(parts));
        }
    return GaussianProcess(std::move(mean), Kernel(g.dim(), std::move(cov)));
}

void DataSet::validate(std::size_t dim, std::size_t outputs) const {
    for (const auto& obs : observations) {
        if (obs.point.size() != dim) throw std::invalid_argument("observation dimension mismatch");
        if (obs.component >= outputs)
            throw std::invalid_argument("observation component out of range");
        if (!std::isfinite(obs.value) || !std::isfinite(obs.noise_var) || obs.noise_var < 0.0)
            throw std::invalid_argument("observation values must be finite, noise nonnegative");
    }
}

namespace {

// In-place lower Cholesky; returns the index of the first nonpositive pivot
// or -1 on success, reporting the pivot value.
int cholesky(Eigen::MatrixXd& m, double& bad_pivot) {
    const Eigen::Index n = m.rows();
    for (Eigen::Index j = 0; j < n; ++j) {
        double d = m(j, j);
        for (Eigen::Index k = 0; k < j; ++k) d -= m(j, k) * m(j, k);
        if (d <= 0.0 || !std::isfinite(d)) {
            bad_pivot = d;
            return static_cast<int>(j);
        }
        m(j, j) = std::sqrt(d);
        for (Eigen::Index i = j + 1; i < n; ++i) {
            double s = m(i, j);
            for (Eigen::Index k = 0; k < j; ++k) s -= m(i, k) * m(j, k);
            m(i, j) = s / m(j, j);
        }
    }
    return -1;
}

}  // namespace

PosteriorGP::PosteriorGP(GaussianProcess prior, DataSet data)
    : prior_(std::move(prior)), data_(std::move(data)) {
    data_.validate(prior_.dim(), prior_.outputs());
    const std::size_t m = data_.size();
    if (m == 0) return;

    Eigen::MatrixXd K(m, m);
    SymExpr::EvalContext ctx;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& oi = data_.observations[i];
        for (std::size_t j = 0; j < m; ++j) {
            const auto& oj = data_.observations[j];
            ctx.reset(oi.point, oj.point);
            K(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                prior_.covariance().at(oi.component, oj.component).eval(ctx);
        }
        K(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) += oi.noise_var;
    }

    Eigen::MatrixXd factor = K;
    double bad_pivot = 0.0;
    int fail = cholesky(factor, bad_pivot);
    if (fail >= 0) {
        jitter_ = 1e-10 * K.diagonal().maxCoeff();
        factor = K + jitter_ * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m),
                                                         static_cast<Eigen::Index>(m));
        fail = cholesky(factor, bad_pivot);
        if (fail >= 0)
            throw NumericError("covariance factorization failed at pivot " +
                               std::to_string(fail) + " (value " + std::to_string(bad_pivot) +
                               ") even with jitter");
    }
    llt_.compute(K + jitter_ * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m),
                                                         static_cast<Eigen::Index>(m)));
    if (llt_.info() != Eigen::Success)
        throw NumericError("covariance factorization failed (pivot value " +
                           std::to_string(bad_pivot) + ")");

    Eigen::VectorXd residual(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& obs = data_.observations[i];
        SymExpr::EvalContext mctx;
        mctx.x = obs.point;
        residual(static_cast<Eigen::Index>(i)) =
            obs.value - prior_.mean()[obs.component].eval(mctx);
    }
    alpha_ = llt_.solve(residual);
}

Eigen::MatrixXd PosteriorGP::cross_cov(const std::vector<double>& x) const {
    const std::size_t ell = outputs();
    const std::size_t m = data_.size();
    Eigen::MatrixXd out(ell, m);
    for (std::size_t j = 0; j < m; ++j) {
        const auto& obs = data_.observations[j];
        SymExpr::EvalContext ctx;
        ctx.x = x;
        ctx.xp = obs.point;
        for (std::size_t c = 0; c < ell; ++c)
            out(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(j)) =
                prior_.covariance().at(c, obs.component).eval(ctx);
    }
    return out;
}

std::vector<double> PosteriorGP::mean(const std::vector<double>& x) const {
    std::vector<double> base = prior_.mean_at(x);
    if (data_.empty()) return base;
    Eigen::VectorXd adjust = cross_cov(x) * alpha_;
    for (std::size_t c = 0; c < base.size(); ++c)
        base[c] += adjust(static_cast<Eigen::Index>(c));
    return base;
}

Eigen::MatrixXd PosteriorGP::cov(const std::vector<double>& x,
                                 const std::vector<double>& xp) const {
    Eigen::MatrixXd base = prior_.covariance().eval(x, xp);
    if (data_.empty()) return base;
    Eigen::MatrixXd kx = cross_cov(x);
    Eigen::MatrixXd kxp = cross_cov(xp);
    return base - kx * llt_.solve(kxp.transpose());
}

std::vector<double> PosteriorGP::sd(const std::vector<double>& x) const {
    Eigen::MatrixXd c = cov(x, x);
    std::vector<double> out(outputs());
    for (std::size_t i = 0; i < out.size(); ++i) {
        double v = c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
        out[i] = v > 0.0 ? std::sqrt(v) : 0.0;
    }
    return out;
}

std::vector<GridPoint> field_grid(const PosteriorGP& gp,
                                  const std::vector<std::pair<double, double>>& box,
                                  const std::vector<std::size_t>& resolution,
                                  const RegionPredicate& region, unsigned threads) {
    const std::size_t d = box.size();
    if (resolution.size() != d) throw std::invalid_argument("resolution per axis required");
    for (auto res : resolution)
        if (res < 2) throw std::invalid_argument("resolution must be at least 2 per axis");
    if (d != gp.dim()) throw std::invalid_argument("box dimension mismatch");

    std::size_t total = 1;
    for (auto res : resolution) total *= res;
    std::vector<std::vector<double>> points;
    points.reserve(total);
    for (std::size_t index = 0; index < total; ++index) {
        std::vector<double> point(d);
        std::size_t rest = index;
        for (std::size_t axis = d; axis-- > 0;) {
            std::size_t i = rest % resolution[axis];
            rest /= resolution[axis];
            point[axis] = box[axis].first + (box[axis].second - box[axis].first) *
                                                static_cast<double>(i) /
                                                static_cast<double>(resolution[axis] - 1);
        }
        if (region && !region(point)) continue;
        points.push_back(std::move(point));
    }

    std::vector<GridPoint> rows(points.size());
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            rows[i].point = points[i];
            rows[i].mean = gp.mean(points[i]);
            rows[i].sd = gp.sd(points[i]);
        }
    };
    if (threads <= 1 || points.size() < 2 * threads) {
        worker(0, points.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (points.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(points.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

Eigen::MatrixXd sample_prior(const GaussianProcess& g,
                             const std::vector<std::vector<double>>& points,
                             std::uint64_t seed, std::size_t count) {
    const std::size_t ell = g.outputs();
    const std::size_t n = points.size() * ell;
    Eigen::MatrixXd K(n, n);
    Eigen::VectorXd mu(n);
    for (std::size_t p = 0; p < points.size(); ++p) {
        auto mean = g.mean_at(points[p]);
        for (std::size_t c = 0; c < ell; ++c)
            mu(static_cast<Eigen::Index>(p * ell + c)) = mean[c];
        for (std::size_t q = 0; q < points.size(); ++q) {
            Eigen::MatrixXd block = g.covariance().eval(points[p], points[q]);
            for (std::size_t a = 0; a < ell; ++a)
                for (std::size_t b = 0; b < ell; ++b)
                    K(static_cast<Eigen::Index>(p * ell + a),
                      static_cast<Eigen::Index>(q * ell + b)) =
                        block(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        }
    }

    // Joint covariances of constrained priors are routinely rank-deficient
    // (zero variance on the boundary set), so draw through the spectral
    // square root with eigenvalues clamped at zero.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K);
    if (es.info() != Eigen::Success)
        throw NumericError("eigendecomposition of the joint covariance failed");
    double scale = std::max(1.0, es.eigenvalues().maxCoeff());
    if (es.eigenvalues().minCoeff() < -1e-10 * scale)
        throw NumericError("joint covariance is indefinite beyond jitter (eigenvalue " +
                           std::to_string(es.eigenvalues().minCoeff()) + ")");
    Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Eigen::MatrixXd factor = es.eigenvectors() * roots.asDiagonal();

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd out(count, n);
    for (std::size_t s = 0; s < count; ++s) {
        Eigen::VectorXd z(n);
        for (std::size_t i = 0; i < n; ++i) z(static_cast<Eigen::Index>(i)) = normal(rng);
        out.row(static_cast<Eigen::Index>(s)) = (mu + factor * z).transpose();
    }
    return out;
}

}  // namespace weylgp
