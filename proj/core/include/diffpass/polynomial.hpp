#pragma once

#include "diffpass/multi_index.hpp"
#include "diffpass/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace diffpass {

/// Number of independent variables n and of unknowns m.
struct Ambient {
    std::size_t n = 0;
    std::size_t m = 0;

    friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Independent variable x_j, j in [1, n].
struct Indep {
    std::uint32_t index = 1;

    friend auto operator<=>(const Indep&, const Indep&) = default;
};

/// Derivative variable u^i_a, i in [1, m], a in N^n.
struct Derivative {
    std::uint32_t unknown = 1;
    MultiIndex order;

    /// u^i_{a + e_k}
    Derivative shifted(std::size_t k) const { return {unknown, order.shifted(k)}; }
    Derivative shifted_by(const MultiIndex& by) const { return {unknown, add(order, by)}; }

    friend bool operator==(const Derivative&, const Derivative&) = default;
    friend std::strong_ordering operator<=>(const Derivative& a, const Derivative& b) {
        if (auto c = a.unknown <=> b.unknown; c != 0) return c;
        return a.order <=> b.order;
    }
};

/// x variables sort before u variables.
using Variable = std::variant<Indep, Derivative>;

std::string to_string(const Variable& v);
std::string to_string(const Derivative& d);

/// Throws StructuralError when v is outside the ambient's index ranges.
void validate(const Variable& v, const Ambient& ambient);

/// Power product of variables with positive exponents, stored sorted by
/// variable so equality is structural.
class Monomial {
public:
    using Factor = std::pair<Variable, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(const Variable& v, std::uint32_t exponent = 1);

    bool is_one() const noexcept { return factors_.empty(); }
    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::uint64_t degree() const noexcept;
    std::uint32_t exponent_of(const Variable& v) const;
    /// Same monomial with the exponent of v set; zero removes v.
    Monomial with_exponent(const Variable& v, std::uint32_t exponent) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic, higher first; x_1 > x_2 > ... > every u.
struct DisplayOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Finite Q-linear combination of monomials in x_j and u^i_a.
class DiffPoly {
public:
    using TermMap = std::map<Monomial, Rational, DisplayOrder>;

    explicit DiffPoly(Ambient ambient) : ambient_(ambient) {}

    static DiffPoly constant(Ambient ambient, const Rational& c);
    static DiffPoly variable(Ambient ambient, const Variable& v);
    static DiffPoly x(Ambient ambient, std::uint32_t j) { return variable(ambient, Indep{j}); }
    static DiffPoly u(Ambient ambient, std::uint32_t i, MultiIndex order) {
        return variable(ambient, Derivative{i, std::move(order)});
    }
    static DiffPoly term(Ambient ambient, const Rational& c, const Monomial& m);

    const Ambient& ambient() const noexcept { return ambient_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    std::uint64_t total_degree() const noexcept;
    /// Coefficient of m, zero if absent.
    Rational coefficient(const Monomial& m) const;

    /// Accumulates c·m; drops the term when it cancels.
    void add_term(const Monomial& m, const Rational& c);

    DiffPoly& operator+=(const DiffPoly& g);
    DiffPoly& operator-=(const DiffPoly& g);
    friend DiffPoly operator+(DiffPoly f, const DiffPoly& g) { return f += g; }
    friend DiffPoly operator-(DiffPoly f, const DiffPoly& g) { return f -= g; }
    friend DiffPoly operator-(const DiffPoly& f);
    friend DiffPoly operator*(const DiffPoly& f, const DiffPoly& g);
    friend DiffPoly operator*(const Rational& c, const DiffPoly& f);

    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

private:
    Ambient ambient_;
    TermMap terms_;
};

DiffPoly add(const DiffPoly& f, const DiffPoly& g);
DiffPoly mul(const DiffPoly& f, const DiffPoly& g);
DiffPoly scale(const Rational& c, const DiffPoly& f);
DiffPoly power(const DiffPoly& f, std::uint32_t e);

/// Formal partial derivative with respect to a single variable.
DiffPoly partial(const DiffPoly& f, const Variable& v);

/// D_k f = ∂f/∂x_k + Σ (∂f/∂u^j_a) u^j_{a+e_k}, with k in [1, n].
DiffPoly total_derivative(const DiffPoly& f, std::size_t k);

/// D^a f, applied direction by direction in ascending k.
DiffPoly total_derivative_multi(const DiffPoly& f, const MultiIndex& a);

/// f with every occurrence of v replaced by g.
DiffPoly substitute(const DiffPoly& f, const Variable& v, const DiffPoly& g);

/// Derivative variables occurring in f.
std::set<Derivative> support_derivs(const DiffPoly& f);

/// Human-readable rendering, e.g. "u[1,(2,0)] - u[1,(0,1)]". Logs only.
std::string to_string(const DiffPoly& f);

} // namespace diffpass
