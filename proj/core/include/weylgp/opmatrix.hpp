#ifndef WEYLGP_OPMATRIX_HPP
#define WEYLGP_OPMATRIX_HPP

#include <string>
#include <vector>

#include "weylgp/orepoly.hpp"

namespace weylgp {

/// Rectangular matrix of scalar operators over a shared presentation.
class OperatorMatrix {
  public:
    OperatorMatrix(PresentationPtr pres, MonomialOrdering ord, std::size_t rows,
                   std::size_t cols);
    static OperatorMatrix identity(PresentationPtr pres, MonomialOrdering ord, std::size_t n);
    static OperatorMatrix from_entries(std::vector<std::vector<OrePoly>> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PresentationPtr& presentation() const { return pres_; }
    const MonomialOrdering& ordering() const { return ord_; }

    const OrePoly& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, OrePoly p);

    bool is_zero() const;

    OperatorMatrix multiply(const OperatorMatrix& other) const;
    OperatorMatrix operator+(const OperatorMatrix& other) const;
    OperatorMatrix operator-() const;

    OperatorMatrix hstack(const OperatorMatrix& other) const;
    OperatorMatrix vstack(const OperatorMatrix& other) const;
    OperatorMatrix row_slice(std::size_t begin, std::size_t count) const;
    OperatorMatrix transpose() const;

    /// Entrywise involution of the transpose; theta(A B) = theta(B) theta(A).
    OperatorMatrix theta() const;

    /// Row i as an element of R^(1xcols).
    OrePoly row_element(std::size_t i, const MonomialOrdering& ord) const;
    /// Rebuilds a matrix from module elements of rank `cols`.
    static OperatorMatrix from_row_elements(const std::vector<OrePoly>& rows, std::size_t cols,
                                            PresentationPtr pres, MonomialOrdering entry_ord);

    std::string to_string() const;

  private:
    PresentationPtr pres_;
    MonomialOrdering ord_;
    std::size_t rows_, cols_;
    std::vector<std::vector<OrePoly>> entries_;
};

}  // namespace weylgp

#endif
