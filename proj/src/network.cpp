#include "wyner/network.hpp"

#include <charconv>
#include <cmath>
#include <random>

#include "wyner/error.hpp"
#include "wyner/seed.hpp"

namespace wyner {

NetworkRealization::NetworkRealization(std::vector<bool> direct, std::vector<bool> cross)
    : direct_(std::move(direct)), cross_(std::move(cross))
{
    if (direct_.empty()) {
        throw ParameterError("network needs at least one user");
    }
    if (cross_.size() + 1 != direct_.size()) {
        throw ParameterError("a " + std::to_string(direct_.size()) + "-user network has " +
                             std::to_string(direct_.size() - 1) + " cross links, got " +
                             std::to_string(cross_.size()));
    }
}

NetworkRealization NetworkRealization::all_present(int k)
{
    if (k < 1) {
        throw ParameterError("k must be at least 1");
    }
    return {std::vector<bool>(k, true), std::vector<bool>(k - 1, true)};
}

NetworkRealization NetworkRealization::all_absent(int k)
{
    if (k < 1) {
        throw ParameterError("k must be at least 1");
    }
    return {std::vector<bool>(k, false), std::vector<bool>(k - 1, false)};
}

bool NetworkRealization::direct(int i) const noexcept
{
    return i >= 1 && i <= k() && direct_[i - 1];
}

bool NetworkRealization::cross(int i) const noexcept
{
    return i >= 1 && i <= k() - 1 && cross_[i - 1];
}

bool NetworkRealization::link(int rx, int tx) const noexcept
{
    if (tx == rx) {
        return direct(tx);
    }
    if (tx == rx - 1) {
        return cross(tx);
    }
    return false;
}

int NetworkRealization::absent_links() const noexcept
{
    int n = 0;
    for (bool b : direct_) {
        n += b ? 0 : 1;
    }
    for (bool b : cross_) {
        n += b ? 0 : 1;
    }
    return n;
}

Complex NetworkRealization::coefficient(int rx, int tx) const
{
    if (!has_coefficients()) {
        throw ParameterError("realization has no channel coefficients attached");
    }
    if (!link(rx, tx)) {
        return {0.0, 0.0};
    }
    return tx == rx ? direct_coeff_[tx - 1] : cross_coeff_[tx - 1];
}

NetworkRealization NetworkRealization::with_direct_erased(int i) const
{
    if (i < 1 || i > k()) {
        throw ParameterError("transmitter index " + std::to_string(i) + " outside [1," +
                             std::to_string(k()) + "]");
    }
    NetworkRealization copy = *this;
    copy.direct_[i - 1] = false;
    if (copy.has_coefficients()) {
        copy.direct_coeff_[i - 1] = {0.0, 0.0};
    }
    return copy;
}

NetworkRealization sample_realization(int k, double p, std::uint64_t trial_seed)
{
    if (k < 1) {
        throw ParameterError("k must be at least 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterError("erasure probability must lie in [0,1]");
    }
    std::mt19937_64 gen(trial_seed);
    std::vector<bool> direct(k);
    std::vector<bool> cross(k - 1);
    // Links are drawn transmitter by transmitter: H(j,j) then H(j+1,j).
    for (int j = 0; j < k; ++j) {
        direct[j] = !(unit_interval(gen()) < p);
        if (j + 1 < k) {
            cross[j] = !(unit_interval(gen()) < p);
        }
    }
    return {std::move(direct), std::move(cross)};
}

namespace {

Complex draw_gain(std::mt19937_64& gen)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    for (;;) {
        double re = normal(gen);
        double im = normal(gen);
        Complex z(re, im);
        if (std::abs(z) >= kCoefficientFloor) {
            return z;
        }
    }
}

} // namespace

NetworkRealization attach_generic_coefficients(NetworkRealization const& r, std::uint64_t trial_seed)
{
    NetworkRealization out = r;
    // Separate stream from the one used for link presence.
    std::mt19937_64 gen(derive_seed(trial_seed, {0xc0eff1c1e47ULL}));
    int const k = r.k();
    out.direct_coeff_.assign(k, Complex{});
    out.cross_coeff_.assign(k - 1, Complex{});
    for (int j = 1; j <= k; ++j) {
        if (r.direct(j)) {
            out.direct_coeff_[j - 1] = draw_gain(gen);
        }
        if (r.cross(j)) {
            out.cross_coeff_[j - 1] = draw_gain(gen);
        }
    }
    return out;
}

std::vector<Cluster> partition_into_clusters(NetworkRealization const& r)
{
    std::vector<Cluster> clusters;
    int start = 1;
    for (int i = 1; i < r.k(); ++i) {
        if (!r.cross(i)) {
            clusters.push_back({start, i});
            start = i + 1;
        }
    }
    clusters.push_back({start, r.k()});
    return clusters;
}

std::string format_realization(NetworkRealization const& r)
{
    std::string s = std::to_string(r.k()) + ';';
    for (int i = 1; i <= r.k(); ++i) {
        s += r.direct(i) ? '1' : '0';
    }
    s += ';';
    for (int i = 1; i < r.k(); ++i) {
        s += r.cross(i) ? '1' : '0';
    }
    return s;
}

namespace {

std::vector<bool> parse_bits(std::string_view field, std::size_t expected, char const* name)
{
    if (field.size() != expected) {
        throw ParseError(std::string(name) + ": expected " + std::to_string(expected) +
                         " bits, got " + std::to_string(field.size()));
    }
    std::vector<bool> bits(expected);
    for (std::size_t i = 0; i < expected; ++i) {
        if (field[i] != '0' && field[i] != '1') {
            throw ParseError(std::string(name) + ": invalid character '" + field[i] +
                             "' at position " + std::to_string(i + 1));
        }
        bits[i] = field[i] == '1';
    }
    return bits;
}

} // namespace

NetworkRealization parse_realization(std::string_view text)
{
    auto first = text.find(';');
    auto second = first == std::string_view::npos ? first : text.find(';', first + 1);
    if (second == std::string_view::npos || text.find(';', second + 1) != std::string_view::npos) {
        throw ParseError("realization: expected three ';'-separated fields K;direct;cross");
    }
    std::string_view k_field = text.substr(0, first);
    int k = 0;
    auto [ptr, ec] = std::from_chars(k_field.data(), k_field.data() + k_field.size(), k);
    if (ec != std::errc{} || ptr != k_field.data() + k_field.size() || k < 1) {
        throw ParseError("K: '" + std::string(k_field) + "' is not a positive integer");
    }
    auto direct = parse_bits(text.substr(first + 1, second - first - 1), k, "direct bits");
    auto cross = parse_bits(text.substr(second + 1), k - 1, "cross bits");
    return {std::move(direct), std::move(cross)};
}

} // namespace wyner
