#include "wyner/fraction.hpp"

#include <charconv>
#include <numeric>

#include "wyner/error.hpp"

namespace wyner {

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator < 1) {
        throw ParameterError("fraction denominator must be positive");
    }
    if (numerator < 0 || numerator > denominator) {
        throw ParameterError("fraction " + std::to_string(numerator) + "/" +
                             std::to_string(denominator) + " is outside [0,1]");
    }
    std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::string Fraction::str() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_count(std::string_view s, std::string_view whole)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 0) {
        throw ParseError("fraction '" + std::string(whole) +
                         "': expected non-negative integers as num/den");
    }
    return v;
}

} // namespace

Fraction parse_fraction(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw ParseError("fraction '" + std::string(text) + "': expected num/den");
    }
    return {parse_count(text.substr(0, slash), text), parse_count(text.substr(slash + 1), text)};
}

} // namespace wyner
