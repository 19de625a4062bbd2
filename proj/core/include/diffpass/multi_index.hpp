#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace diffpass {

/// Element of the monoid N^n. Used both as the order of a derivative u^i_a
/// and as the exponent of an operator monomial X^a.
class MultiIndex {
public:
    using value_type = std::uint32_t;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : entries_(n, 0) {}
    MultiIndex(std::initializer_list<value_type> entries) : entries_(entries) {}
    explicit MultiIndex(std::vector<value_type> entries) : entries_(std::move(entries)) {}

    static MultiIndex zero(std::size_t n) { return MultiIndex(n); }
    /// e_k for k in [0, n).
    static MultiIndex unit(std::size_t n, std::size_t k);

    std::size_t size() const noexcept { return entries_.size(); }
    value_type operator[](std::size_t k) const { return entries_[k]; }
    std::span<const value_type> entries() const noexcept { return entries_; }

    /// |a| = a_1 + ... + a_n
    std::uint64_t total() const noexcept;
    bool is_zero() const noexcept;

    /// Componentwise a <= b.
    bool divides(const MultiIndex& other) const;

    MultiIndex shifted(std::size_t k, value_type by = 1) const;

    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    /// Lexicographic on entries.
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<value_type> entries_;
};

MultiIndex add(const MultiIndex& a, const MultiIndex& b);

/// a ⋄ b with entries max(a_k, b_k) - a_k, the shift that carries a onto
/// the componentwise maximum of a and b.
MultiIndex diamond(const MultiIndex& a, const MultiIndex& b);

/// b - a when a <= b componentwise, otherwise nullopt.
std::optional<MultiIndex> try_subtract(const MultiIndex& a, const MultiIndex& b);

MultiIndex componentwise_max(const MultiIndex& a, const MultiIndex& b);

/// Every multi-index of length n with |a| <= max_total, ordered by total degree
/// then lexicographically.
std::vector<MultiIndex> indices_up_to(std::size_t n, std::uint64_t max_total);

/// Every multi-index of length n with |a| == total.
std::vector<MultiIndex> indices_of_total(std::size_t n, std::uint64_t total);

} // namespace diffpass
