#include "diffpass/multi_index.hpp"

#include "diffpass/errors.hpp"

#include <algorithm>
#include <numeric>

namespace diffpass {

namespace {

void require_same_length(const MultiIndex& a, const MultiIndex& b, const char* op) {
    if (a.size() != b.size()) {
        throw StructuralError(std::string(op) + ": multi-index length mismatch (" +
                              std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
}

void fill_of_total(std::size_t n, std::size_t pos, std::uint64_t remaining,
                   std::vector<MultiIndex::value_type>& current, std::vector<MultiIndex>& out) {
    if (pos + 1 == n) {
        current[pos] = static_cast<MultiIndex::value_type>(remaining);
        out.emplace_back(current);
        return;
    }
    for (std::uint64_t v = remaining + 1; v-- > 0;) {
        current[pos] = static_cast<MultiIndex::value_type>(v);
        fill_of_total(n, pos + 1, remaining - v, current, out);
    }
}

} // namespace

MultiIndex MultiIndex::unit(std::size_t n, std::size_t k) {
    if (k >= n) {
        throw StructuralError("unit multi-index direction " + std::to_string(k) +
                              " out of range for n=" + std::to_string(n));
    }
    MultiIndex e(n);
    e.entries_[k] = 1;
    return e;
}

std::uint64_t MultiIndex::total() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

bool MultiIndex::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](value_type v) { return v == 0; });
}

bool MultiIndex::divides(const MultiIndex& other) const {
    require_same_length(*this, other, "divides");
    for (std::size_t k = 0; k < size(); ++k) {
        if (entries_[k] > other.entries_[k]) return false;
    }
    return true;
}

MultiIndex MultiIndex::shifted(std::size_t k, value_type by) const {
    if (k >= size()) {
        throw StructuralError("shift direction " + std::to_string(k) + " out of range");
    }
    MultiIndex r = *this;
    r.entries_[k] += by;
    return r;
}

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(entries_[k]);
    }
    s += ')';
    return s;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
    require_same_length(a, b, "add");
    std::vector<MultiIndex::value_type> r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return MultiIndex(std::move(r));
}

MultiIndex diamond(const MultiIndex& a, const MultiIndex& b) {
    require_same_length(a, b, "diamond");
    std::vector<MultiIndex::value_type> r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]) - a[k];
    return MultiIndex(std::move(r));
}

std::optional<MultiIndex> try_subtract(const MultiIndex& a, const MultiIndex& b) {
    require_same_length(a, b, "try_subtract");
    std::vector<MultiIndex::value_type> r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (b[k] < a[k]) return std::nullopt;
        r[k] = b[k] - a[k];
    }
    return MultiIndex(std::move(r));
}

MultiIndex componentwise_max(const MultiIndex& a, const MultiIndex& b) {
    require_same_length(a, b, "componentwise_max");
    std::vector<MultiIndex::value_type> r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
    return MultiIndex(std::move(r));
}

std::vector<MultiIndex> indices_of_total(std::size_t n, std::uint64_t total) {
    std::vector<MultiIndex> out;
    if (n == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<MultiIndex::value_type> current(n, 0);
    fill_of_total(n, 0, total, current, out);
    return out;
}

std::vector<MultiIndex> indices_up_to(std::size_t n, std::uint64_t max_total) {
    std::vector<MultiIndex> out;
    for (std::uint64_t t = 0; t <= max_total; ++t) {
        auto layer = indices_of_total(n, t);
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace diffpass
