#include "weylgp/opmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace weylgp {

OperatorMatrix::OperatorMatrix(PresentationPtr pres, MonomialOrdering ord, std::size_t rows,
                               std::size_t cols)
    : pres_(std::move(pres)), ord_(std::move(ord)), rows_(rows), cols_(cols) {
    entries_.assign(rows_, std::vector<OrePoly>(cols_, OrePoly::zero(pres_, ord_)));
}

OperatorMatrix OperatorMatrix::identity(PresentationPtr pres, MonomialOrdering ord,
                                        std::size_t n) {
    OperatorMatrix m(pres, ord, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.entries_[i][i] = OrePoly::constant(pres, ord, Rational(1));
    return m;
}

OperatorMatrix OperatorMatrix::from_entries(std::vector<std::vector<OrePoly>> entries) {
    if (entries.empty() || entries.front().empty())
        throw std::invalid_argument("matrix entries must be nonempty");
    const std::size_t cols = entries.front().size();
    for (const auto& row : entries)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    OperatorMatrix m(entries.front().front().presentation(),
                     entries.front().front().ordering(), entries.size(), cols);
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (!entries[i][j].presentation()->compatible(*m.pres_))
                throw std::invalid_argument("presentation mismatch");
            m.entries_[i][j] = std::move(entries[i][j]);
        }
    return m;
}

const OrePoly& OperatorMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return entries_[i][j];
}

void OperatorMatrix::set(std::size_t i, std::size_t j, OrePoly p) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    if (!p.presentation()->compatible(*pres_))
        throw std::invalid_argument("presentation mismatch");
    if (p.rank() != 1) throw std::invalid_argument("matrix entries must be scalar");
    entries_[i][j] = std::move(p);
}

bool OperatorMatrix::is_zero() const {
    for (const auto& row : entries_)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

OperatorMatrix OperatorMatrix::multiply(const OperatorMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
    if (!pres_->compatible(*other.pres_)) throw std::invalid_argument("presentation mismatch");
    OperatorMatrix result(pres_, ord_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) {
            OrePoly sum = OrePoly::zero(pres_, ord_);
            for (std::size_t k = 0; k < cols_; ++k)
                sum = sum + entries_[i][k].multiply(other.entries_[k][j]);
            result.entries_[i][j] = std::move(sum);
        }
    return result;
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    OperatorMatrix result(pres_, ord_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            result.entries_[i][j] = entries_[i][j] + other.entries_[i][j];
    return result;
}

OperatorMatrix OperatorMatrix::operator-() const {
    OperatorMatrix result(pres_, ord_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) result.entries_[i][j] = -entries_[i][j];
    return result;
}

OperatorMatrix OperatorMatrix::hstack(const OperatorMatrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("row count mismatch");
    OperatorMatrix result(pres_, ord_, rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) result.entries_[i][j] = entries_[i][j];
        for (std::size_t j = 0; j < other.cols_; ++j)
            result.entries_[i][cols_ + j] = other.entries_[i][j];
    }
    return result;
}

OperatorMatrix OperatorMatrix::vstack(const OperatorMatrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("column count mismatch");
    OperatorMatrix result(pres_, ord_, rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) result.entries_[i] = entries_[i];
    for (std::size_t i = 0; i < other.rows_; ++i) result.entries_[rows_ + i] = other.entries_[i];
    return result;
}

OperatorMatrix OperatorMatrix::row_slice(std::size_t begin, std::size_t count) const {
    if (begin + count > rows_) throw std::out_of_range("row slice out of range");
    OperatorMatrix result(pres_, ord_, count, cols_);
    for (std::size_t i = 0; i < count; ++i) result.entries_[i] = entries_[begin + i];
    return result;
}

OperatorMatrix OperatorMatrix::transpose() const {
    OperatorMatrix result(pres_, ord_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) result.entries_[j][i] = entries_[i][j];
    return result;
}

OperatorMatrix OperatorMatrix::theta() const {
    OperatorMatrix result(pres_, ord_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) result.entries_[j][i] = entries_[i][j].theta();
    return result;
}

OrePoly OperatorMatrix::row_element(std::size_t i, const MonomialOrdering& ord) const {
    if (i >= rows_) throw std::out_of_range("row index out of range");
    OrePoly element = OrePoly::zero(pres_, ord, static_cast<std::uint32_t>(cols_));
    for (std::size_t j = 0; j < cols_; ++j) {
        if (entries_[i][j].is_zero()) continue;
        element = element + entries_[i][j]
                                .with_ordering(ord)
                                .embedded(static_cast<std::uint32_t>(j + 1),
                                          static_cast<std::uint32_t>(cols_));
    }
    return element;
}

OperatorMatrix OperatorMatrix::from_row_elements(const std::vector<OrePoly>& rows,
                                                 std::size_t cols, PresentationPtr pres,
                                                 MonomialOrdering entry_ord) {
    OperatorMatrix result(std::move(pres), entry_ord, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].rank() != cols) throw std::invalid_argument("module rank mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            result.entries_[i][j] =
                rows[i].component_part(static_cast<std::uint32_t>(j + 1)).with_ordering(entry_ord);
    }
    return result;
}

std::string OperatorMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out << "; ";
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << entries_[i][j].to_string();
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

}  // namespace weylgp
