#pragma once

#include "diffpass/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace diffpass {

/// Sparse vector over Q keyed by coordinate index; no stored zeros.
using SparseVector = std::map<std::size_t, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

/// Incremental echelon basis of the span of a growing list of columns, with
/// every basis vector tracking its expression in the original columns. Exact
/// elimination over Q, largest coordinate first.
class ColumnEchelon {
public:
    /// Adds the next column (index = number of columns added so far). Returns
    /// a kernel vector (coefficients over columns, own entry 1) when the column
    /// is dependent on the previous ones.
    std::optional<SparseVector> add_column(const SparseVector& column);

    /// Coefficients c with Σ c_j column_j = target, or nullopt if target is
    /// outside the span.
    std::optional<SparseVector> express(const SparseVector& target) const;

    std::size_t columns() const noexcept { return columns_; }
    std::size_t rank() const noexcept { return basis_.size(); }

private:
    struct Row {
        SparseVector vec;   // pivot coordinate has coefficient 1
        SparseVector combo; // vec = Σ combo_j column_j
    };
    /// Reduces vec in place, accumulating combo; stops at the first pivot with
    /// no basis row.
    void reduce(SparseVector& vec, SparseVector& combo) const;

    std::map<std::size_t, Row> basis_; // keyed by pivot
    std::size_t columns_ = 0;
};

/// Kernel basis of the linear map whose columns are given.
std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& columns);

} // namespace diffpass
