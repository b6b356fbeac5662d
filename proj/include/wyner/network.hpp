#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wyner {

using Complex = std::complex<double>;

/// One block of a K-user linear (Wyner) network. Transmitter j reaches
/// receiver j through the direct link H(j,j) and receiver j+1 through the
/// cross link H(j+1,j); transmitter K has no cross link, so 2K-1 link slots
/// exist. User indices are 1-based throughout the public interface.
///
/// Link presence and channel coefficients are stored separately. DoF
/// counting only looks at presence; coefficients are attached on demand for
/// numeric zero-forcing checks.
class NetworkRealization {
public:
    NetworkRealization(std::vector<bool> direct, std::vector<bool> cross);

    static NetworkRealization all_present(int k);
    static NetworkRealization all_absent(int k);

    int k() const noexcept { return static_cast<int>(direct_.size()); }

    /// H(i,i) != 0. False outside [1,K].
    bool direct(int i) const noexcept;
    /// H(i+1,i) != 0. False outside [1,K-1].
    bool cross(int i) const noexcept;
    /// Presence of H(rx,tx); only tx in {rx-1, rx} can ever be present.
    bool link(int rx, int tx) const noexcept;

    int absent_links() const noexcept;
    int link_slots() const noexcept { return 2 * k() - 1; }

    bool has_coefficients() const noexcept { return !direct_coeff_.empty(); }
    /// Channel gain H(rx,tx); exactly zero for absent links. Requires
    /// coefficients to be attached.
    Complex coefficient(int rx, int tx) const;

    /// Copy with the direct link of transmitter i erased (coefficient zeroed).
    NetworkRealization with_direct_erased(int i) const;

    friend bool operator==(NetworkRealization const&, NetworkRealization const&) = default;

private:
    friend NetworkRealization attach_generic_coefficients(NetworkRealization const&, std::uint64_t);

    std::vector<bool> direct_;
    std::vector<bool> cross_;
    std::vector<Complex> direct_coeff_;
    std::vector<Complex> cross_coeff_;
};

/// Maximal run of users [start, end] whose internal cross links all exist.
struct Cluster {
    int start = 1;
    int end = 1;

    int size() const noexcept { return end - start + 1; }
    bool contains(int i) const noexcept { return start <= i && i <= end; }

    friend bool operator==(Cluster const&, Cluster const&) = default;
};

/// Smallest magnitude accepted for a generated channel coefficient.
inline constexpr double kCoefficientFloor = 1e-3;

/// Each of the 2K-1 links is independently absent with probability p.
/// Pure function of (k, p, trial_seed). Throws ParameterError for k < 1 or
/// p outside [0,1].
NetworkRealization sample_realization(int k, double p, std::uint64_t trial_seed);

/// Draws a complex standard normal gain for every present link, redrawing
/// any gain whose magnitude falls below kCoefficientFloor. Absent links get 0.
NetworkRealization attach_generic_coefficients(NetworkRealization const& r,
                                               std::uint64_t trial_seed);

/// Splits [1,K] after every absent cross link. The result is ordered,
/// disjoint and exhaustive.
std::vector<Cluster> partition_into_clusters(NetworkRealization const& r);

/// `K;direct-bits;cross-bits`, e.g. `5;11111;1111`.
std::string format_realization(NetworkRealization const& r);
/// Inverse of format_realization. Throws ParseError naming the bad field.
NetworkRealization parse_realization(std::string_view text);

} // namespace wyner
