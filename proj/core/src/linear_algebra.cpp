#include "diffpass/linear_algebra.hpp"

namespace diffpass {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
    if (a == 0) return;
    for (const auto& [k, v] : x) {
        auto [it, inserted] = y.try_emplace(k, a * v);
        if (!inserted) {
            it->second += a * v;
            if (it->second == 0) y.erase(it);
        }
    }
}

void ColumnEchelon::reduce(SparseVector& vec, SparseVector& combo) const {
    while (!vec.empty()) {
        auto top = std::prev(vec.end());
        auto row = basis_.find(top->first);
        if (row == basis_.end()) return;
        Rational factor = -top->second;
        axpy(vec, factor, row->second.vec);
        axpy(combo, factor, row->second.combo);
    }
}

std::optional<SparseVector> ColumnEchelon::add_column(const SparseVector& column) {
    const std::size_t index = columns_++;
    SparseVector vec = column;
    SparseVector combo{{index, Rational(1)}};
    reduce(vec, combo);
    if (vec.empty()) return combo;
    Rational inv = 1 / std::prev(vec.end())->second;
    for (auto& [k, v] : vec) v *= inv;
    for (auto& [k, v] : combo) v *= inv;
    std::size_t pivot = std::prev(vec.end())->first;
    basis_.emplace(pivot, Row{std::move(vec), std::move(combo)});
    return std::nullopt;
}

std::optional<SparseVector> ColumnEchelon::express(const SparseVector& target) const {
    SparseVector vec = target;
    SparseVector combo;
    reduce(vec, combo);
    if (!vec.empty()) return std::nullopt;
    // vec_final = target + combo·columns = 0
    for (auto& [k, v] : combo) v = -v;
    return combo;
}

std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& columns) {
    ColumnEchelon echelon;
    std::vector<SparseVector> out;
    for (const auto& c : columns) {
        if (auto k = echelon.add_column(c)) out.push_back(std::move(*k));
    }
    return out;
}

} // namespace diffpass
