#include "wyner/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "wyner/error.hpp"

namespace wyner {

Complex BeamformingPlan::weight(int t, int m) const
{
    for (auto const& [msg, w] : carried(t)) {
        if (msg == m) {
            return w;
        }
    }
    return {0.0, 0.0};
}

void BeamformingPlan::add(int t, int m, Complex w)
{
    auto& row = per_tx_.at(t - 1);
    for (auto& [msg, existing] : row) {
        if (msg == m) {
            existing += w;
            return;
        }
    }
    row.emplace_back(m, w);
}

void BeamformingPlan::set(int t, int m, Complex w)
{
    auto& row = per_tx_.at(t - 1);
    for (auto& [msg, existing] : row) {
        if (msg == m) {
            existing = w;
            return;
        }
    }
    row.emplace_back(m, w);
}

BeamformingPlan build_transmit_signals(Schedule const& s, NetworkRealization const& r)
{
    if (!r.has_coefficients()) {
        throw ParameterError("transmit signals need channel coefficients");
    }
    if (s.k() != r.k()) {
        throw ParameterError("schedule and realization sizes differ");
    }
    auto require = [&](int rx, int tx) {
        if (!r.link(rx, tx)) {
            throw InvariantError("cancellation weight needs absent link H(" + std::to_string(rx) +
                                 "," + std::to_string(tx) + ")");
        }
        return r.coefficient(rx, tx);
    };

    BeamformingPlan plan(s.k());
    for (int t = 1; t <= s.k(); ++t) {
        if (s.get(t, t)) {
            plan.add(t, t, 1.0);
        }
        if (s.get(t + 1, t)) {
            plan.add(t, t + 1, 1.0);
        }
    }
    for (int t = 1; t <= s.k(); ++t) {
        if (s.get(t - 1, t)) {
            plan.add(t, t - 1, -require(t, t - 1) / require(t, t));
        }
        if (s.get(t + 2, t)) {
            plan.add(t, t + 2, -require(t + 1, t + 1) / require(t + 1, t));
        }
    }
    return plan;
}

ZfReport verify_zero_forcing(BeamformingPlan const& plan, Schedule const& s,
                             NetworkRealization const& r)
{
    if (plan.k() != r.k() || s.k() != r.k()) {
        throw ParameterError("plan, schedule and realization sizes differ");
    }
    ZfReport report;
    auto fail = [&](ZfFailure f) {
        report.pass = false;
        report.failures.push_back(std::move(f));
    };

    for (int t = 1; t <= plan.k(); ++t) {
        for (auto const& [m, w] : plan.carried(t)) {
            if (!s.get(m, t)) {
                fail({0, m, std::abs(w),
                      "transmitter " + std::to_string(t) + " carries W_" + std::to_string(m) +
                          " without a matching decision"});
            }
        }
    }

    for (int i = 1; i <= r.k(); ++i) {
        if (!s.is_delivered(i)) {
            continue;
        }
        std::map<int, Complex> net;
        for (int tx : {i - 1, i}) {
            if (tx < 1 || !r.link(i, tx)) {
                continue;
            }
            Complex const h = r.coefficient(i, tx);
            for (auto const& [m, w] : plan.carried(tx)) {
                net[m] += h * w;
            }
        }
        ReceiverResidual res;
        res.receiver = i;
        res.desired = std::abs(net[i]);
        if (res.desired < kMinDesiredGain) {
            fail({i, i, res.desired, "desired gain below threshold"});
        }
        for (auto const& [m, g] : net) {
            if (m == i) {
                continue;
            }
            double const rel = res.desired > 0.0 ? std::abs(g) / res.desired
                                                 : (std::abs(g) > 0.0 ? INFINITY : 0.0);
            if (rel > res.worst_leak) {
                res.worst_leak = rel;
                res.worst_message = m;
            }
            if (rel > kMaxRelativeLeak) {
                fail({i, m, rel, "residual interference from W_" + std::to_string(m)});
            }
        }
        report.active.push_back(res);
    }
    return report;
}

} // namespace wyner
