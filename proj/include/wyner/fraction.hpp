#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace wyner {

/// Exact rational in [0,1], always held in lowest terms.
class Fraction {
public:
    Fraction() = default;
    /// Throws ParameterError for a zero denominator or a value above 1.
    Fraction(std::int64_t numerator, std::int64_t denominator);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }
    double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// `num/den`
    std::string str() const;

    friend bool operator==(Fraction const&, Fraction const&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Parses `num/den` with non-negative integers. Decimal notation is rejected.
/// Malformed text throws ParseError; a well-formed fraction above 1 or with a
/// zero denominator throws ParameterError.
Fraction parse_fraction(std::string_view text);

} // namespace wyner
