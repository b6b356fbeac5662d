#pragma once

#include <cstdint>
#include <vector>

#include "wyner/assignment.hpp"
#include "wyner/network.hpp"

namespace wyner {

inline constexpr int kOracleMaxK = 10;
inline constexpr int kExactSchedulerMaxK = 12;
inline constexpr int kExactOracleMaxK = 7;

/// Candidate zero-forcing configuration: the set D of delivered messages
/// and, per message, the carriers C_m (transmitters emitting a signal derived
/// from W_m). Both vectors have K entries, entry m-1 describing message m.
/// Undelivered messages carry nothing.
struct CarrierConfig {
    std::vector<bool> delivered;
    std::vector<TransmitSet> carriers;

    int k() const noexcept { return static_cast<int>(delivered.size()); }
    int size() const noexcept;
};

/// Per-message part of the feasibility predicate under generic coefficients:
///  (a) some carrier in {m-1, m} reaches receiver m over a present link;
///  (b) every other delivered receiver reached by a carrier of m is reached
///      by both carriers, and there is at most one such receiver (two
///      carriers leave one free ratio, i.e. one zero constraint).
bool message_feasible(int m, TransmitSet const& carriers, std::vector<bool> const& delivered,
                      NetworkRealization const& r);

/// True iff every delivered message satisfies message_feasible. Throws
/// ParameterError if an undelivered message has carriers or sizes differ.
bool feasible(CarrierConfig const& cfg, NetworkRealization const& r);

struct OracleResult {
    int dof = 0;
    CarrierConfig witness;
};

/// Exhaustive maximum of |D| over all carrier configurations with
/// C_m a non-empty subset of T_m for m in D. Since feasibility factors over
/// messages once D is fixed, each D is checked by trying the (at most three)
/// carrier choices per message independently. Throws ParameterError when
/// K exceeds max_k.
OracleResult best_zero_forcing_config(NetworkRealization const& r, MessageAssignment const& a,
                                      int max_k = kOracleMaxK);
int optimal_zero_forcing_dof(NetworkRealization const& r, MessageAssignment const& a,
                             int max_k = kOracleMaxK);

enum class DofEngine { Scheduler, Oracle };

/// Realization for erasure pattern `mask`: bit j-1 is direct link j, bit
/// K+j-1 is cross link j; a set bit means the link is present.
NetworkRealization realization_from_mask(int k, std::uint64_t mask);

/// hist[n] = sum of DoF over all 2^(2k-1) patterns with exactly n absent
/// links. The expected DoF at erasure probability p is the polynomial
/// sum_n hist[n] p^n (1-p)^(2k-1-n). OpenMP-parallel over patterns.
std::vector<std::int64_t> dof_histogram(int k, MessageAssignment const& a, DofEngine engine,
                                        bool deactivate_last);
/// Single-threaded reference for dof_histogram.
std::vector<std::int64_t> dof_histogram_serial(int k, MessageAssignment const& a,
                                               DofEngine engine, bool deactivate_last);

double expected_from_histogram(std::vector<std::int64_t> const& hist, double p);

/// Exact E[DoF] by enumerating every erasure pattern. Throws ParameterError
/// for k beyond kExactSchedulerMaxK / kExactOracleMaxK or p outside [0,1].
double exact_expected_dof(int k, double p, MessageAssignment const& a, DofEngine engine,
                          bool deactivate_last = false);

/// Applies last-transmitter deactivation: removes transmitter K from every
/// transmit set and erases its direct link.
MessageAssignment deactivate_last(MessageAssignment const& a);
NetworkRealization deactivate_last(NetworkRealization const& r);

} // namespace wyner
