#include "weylgp/syzygy.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylgp {

MonomialOrdering default_scalar_ordering(const Presentation& pres) {
    const std::size_t r = pres.gen_count();
    const std::size_t d = pres.deriv_count();
    // Unit generator weights; partial weights large enough that the leading
    // monomial of d_j f_i is always f_i d_j (sufficient weight condition).
    std::vector<Rational> weights(r + d, Rational(1));
    for (std::size_t j = 0; j < d; ++j) {
        Rational needed(1);
        for (std::size_t i = 0; i < r; ++i) {
            Rational deg(static_cast<long>(pres.table(i, j).total_degree()));
            if (deg - 1 > needed) needed = deg - 1;
        }
        weights[r + j] = needed;
    }
    return MonomialOrdering::wdegrevlex(std::move(weights));
}

OperatorMatrix left_kernel(const OperatorMatrix& A, std::optional<MonomialOrdering> scalar_base) {
    const std::size_t a = A.rows();
    const std::size_t b = A.cols();
    const PresentationPtr pres = A.presentation();
    MonomialOrdering scalar = scalar_base ? *scalar_base : default_scalar_ordering(*pres);
    MonomialOrdering result_ord = MonomialOrdering::top(scalar);
    if (a == 0) return OperatorMatrix(pres, result_ord, 0, 0);
    if (b == 0) return OperatorMatrix::identity(pres, result_ord, a);

    const std::size_t q = b + a;
    MonomialOrdering elim = MonomialOrdering::elim_components(
        b, MonomialOrdering::top(scalar), MonomialOrdering::top(scalar));

    std::vector<OrePoly> rows;
    rows.reserve(a);
    for (std::size_t i = 0; i < a; ++i) {
        OrePoly w = OrePoly::zero(pres, elim, static_cast<std::uint32_t>(q));
        for (std::size_t j = 0; j < b; ++j) {
            if (A.at(i, j).is_zero()) continue;
            w = w + A.at(i, j).with_ordering(elim).embedded(static_cast<std::uint32_t>(j + 1),
                                                            static_cast<std::uint32_t>(q));
        }
        w = w + OrePoly::constant(pres, elim, Rational(1))
                    .embedded(static_cast<std::uint32_t>(b + i + 1),
                              static_cast<std::uint32_t>(q));
        rows.push_back(std::move(w));
    }

    JanetOptions options;
    options.with_certificates = false;
    JanetBasis basis = janet_basis(rows, elim, options);

    std::vector<OrePoly> kernel_rows;
    for (const auto& g : basis.elements()) {
        if (g.leading_monomial().component <= b) continue;
        for (const auto& [m, c] : g.terms())
            if (m.component <= b)
                throw std::logic_error("eliminated block leaked into a kernel element");
        kernel_rows.push_back(
            g.shifted_components(-static_cast<std::int64_t>(b), static_cast<std::uint32_t>(a))
                .with_ordering(result_ord)
                .normalized());
    }
    std::sort(kernel_rows.begin(), kernel_rows.end(), [&](const OrePoly& x, const OrePoly& y) {
        return result_ord.compare(x.leading_monomial(), y.leading_monomial()) < 0;
    });
    return OperatorMatrix::from_row_elements(kernel_rows, a, pres, scalar);
}

OperatorMatrix right_kernel(const OperatorMatrix& A,
                            std::optional<MonomialOrdering> scalar_base) {
    return left_kernel(A.theta(), std::move(scalar_base)).theta();
}

std::optional<JanetBasis> row_module_basis(const OperatorMatrix& A,
                                           std::optional<MonomialOrdering> scalar_base) {
    const PresentationPtr pres = A.presentation();
    MonomialOrdering scalar = scalar_base ? *scalar_base : default_scalar_ordering(*pres);
    MonomialOrdering ord = MonomialOrdering::top(scalar);
    std::vector<OrePoly> rows;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        OrePoly w = A.row_element(i, ord);
        if (!w.is_zero()) rows.push_back(std::move(w));
    }
    if (rows.empty()) return std::nullopt;
    JanetOptions options;
    options.with_certificates = false;
    return janet_basis(rows, ord, options);
}

bool row_module_contains(const OperatorMatrix& A, const OperatorMatrix& candidates) {
    if (A.cols() != candidates.cols()) throw std::invalid_argument("column count mismatch");
    auto basis = row_module_basis(A);
    for (std::size_t i = 0; i < candidates.rows(); ++i) {
        OrePoly w = candidates.row_element(
            i, basis ? basis->ordering() : MonomialOrdering::top(default_scalar_ordering(
                                               *A.presentation())));
        if (w.is_zero()) continue;
        if (!basis) return false;
        if (!is_member(w, *basis)) return false;
    }
    return true;
}

bool row_module_equivalent(const OperatorMatrix& A, const OperatorMatrix& B) {
    return row_module_contains(A, B) && row_module_contains(B, A);
}

bool column_module_contains(const OperatorMatrix& A, const OperatorMatrix& candidates) {
    return row_module_contains(A.theta(), candidates.theta());
}

bool column_module_equivalent(const OperatorMatrix& A, const OperatorMatrix& B) {
    return column_module_contains(A, B) && column_module_contains(B, A);
}

ParametrizationResult parametrize(const OperatorMatrix& A) {
    OperatorMatrix B = right_kernel(A);
    OperatorMatrix Aprime = left_kernel(B);
    auto basis = row_module_basis(A);

    ParametrizationResult result{std::move(B), std::move(Aprime), true, {}, basis};
    for (std::size_t i = 0; i < result.Aprime.rows(); ++i) {
        MonomialOrdering ord = basis ? basis->ordering()
                                     : MonomialOrdering::top(default_scalar_ordering(
                                           *A.presentation()));
        OrePoly w = result.Aprime.row_element(i, ord);
        if (w.is_zero()) {
            result.certificate.push_back(ReduceResult{w, {}});
            continue;
        }
        if (!basis) {
            result.parametrizable = false;
            result.certificate.push_back(ReduceResult{w, {}});
            continue;
        }
        ReduceResult trace = janet_reduce(w, *basis);
        if (!trace.remainder.is_zero()) result.parametrizable = false;
        result.certificate.push_back(std::move(trace));
    }
    return result;
}

std::pair<OperatorMatrix, OperatorMatrix> intersect_parametrizations(const OperatorMatrix& B1,
                                                                     const OperatorMatrix& B2) {
    if (B1.rows() != B2.rows()) throw std::invalid_argument("row count mismatch");
    OperatorMatrix joint = B1.hstack(B2);
    OperatorMatrix C = right_kernel(joint);
    OperatorMatrix C1 = C.row_slice(0, B1.cols());
    OperatorMatrix C2 = C.row_slice(B1.cols(), B2.cols());
    OperatorMatrix P = B1.multiply(C1);
    OperatorMatrix residual = P + B2.multiply(C2);
    for (std::size_t i = 0; i < residual.rows(); ++i)
        for (std::size_t j = 0; j < residual.cols(); ++j)
            if (!residual.at(i, j).is_zero())
                throw std::logic_error("kernel identity B1 C1 + B2 C2 = 0 violated");
    return {std::move(P), std::move(C)};
}

}  // namespace weylgp
