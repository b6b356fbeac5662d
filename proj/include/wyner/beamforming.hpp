#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wyner/network.hpp"
#include "wyner/schedule.hpp"

namespace wyner {

/// Linear precoding weights: transmitter t emits sum_m weight(t,m) * X_m,
/// where X_m is message m's unit-power codeword.
class BeamformingPlan {
public:
    explicit BeamformingPlan(int k) : per_tx_(k) {}

    int k() const noexcept { return static_cast<int>(per_tx_.size()); }

    /// (message, weight) pairs carried by transmitter t, in insertion order.
    std::vector<std::pair<int, Complex>> const& carried(int t) const { return per_tx_.at(t - 1); }
    /// Weight of message m at transmitter t; 0 if not carried.
    Complex weight(int t, int m) const;
    /// Adds to the weight of m at t, creating the entry if needed.
    void add(int t, int m, Complex w);
    /// Overwrites an existing entry or creates it.
    void set(int t, int m, Complex w);

private:
    std::vector<std::vector<std::pair<int, Complex>>> per_tx_;
};

/// Delivery weights are 1. Transmitter t carries W_{t-1} with weight
/// -H(t,t-1)/H(t,t) when b(t-1,t) is set, and W_{t+2} with weight
/// -H(t+1,t+1)/H(t+1,t) when b(t+2,t) is set.
/// Throws ParameterError without coefficients and InvariantError when a
/// cancellation would need an absent link.
BeamformingPlan build_transmit_signals(Schedule const& s, NetworkRealization const& r);

inline constexpr double kMinDesiredGain = 1e-6;
inline constexpr double kMaxRelativeLeak = 1e-9;

struct ReceiverResidual {
    int receiver = 0;
    double desired = 0.0;       // |net coefficient of own message|
    double worst_leak = 0.0;    // max |net interfering coefficient| / desired
    int worst_message = 0;      // 0 when nothing leaks
};

struct ZfFailure {
    int receiver = 0;   // 0 for plan/schedule mismatches not tied to a receiver
    int message = 0;
    double magnitude = 0.0;
    std::string reason;
};

struct ZfReport {
    bool pass = true;
    std::vector<ReceiverResidual> active;   // one per delivered message
    std::vector<ZfFailure> failures;
};

/// Evaluates each receiver's net per-message gain
/// H(i,i-1) * w(i-1,m) + H(i,i) * w(i,m). Passes iff every delivered message
/// reaches its receiver with gain >= kMinDesiredGain and every other message
/// at an active receiver stays within kMaxRelativeLeak of that gain.
ZfReport verify_zero_forcing(BeamformingPlan const& plan, Schedule const& s,
                             NetworkRealization const& r);

} // namespace wyner
