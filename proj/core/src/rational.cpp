#include "diffpass/rational.hpp"

#include "diffpass/errors.hpp"

#include <algorithm>
#include <cctype>

namespace diffpass {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool is_natural_literal(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_natural_literal(den)) {
        throw StructuralError("malformed rational \"" + std::string(text) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw StructuralError("zero denominator in rational \"" + std::string(text) + "\"");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str(10);
}

} // namespace diffpass
