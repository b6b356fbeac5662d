#include "wyner/oracle.hpp"

#include <bit>
#include <cmath>

#include "wyner/error.hpp"
#include "wyner/schedule.hpp"

namespace wyner {

int CarrierConfig::size() const noexcept
{
    int n = 0;
    for (bool d : delivered) {
        n += d ? 1 : 0;
    }
    return n;
}

bool message_feasible(int m, TransmitSet const& carriers, std::vector<bool> const& delivered,
                      NetworkRealization const& r)
{
    bool reaches_own = false;
    for (int t : carriers) {
        if ((t == m - 1 || t == m) && r.link(m, t)) {
            reaches_own = true;
        }
    }
    if (!reaches_own) {
        return false;
    }

    int const k = r.k();
    int zero_constraints = 0;
    // A carrier t only reaches receivers t and t+1.
    for (int t : carriers) {
        for (int rx : {t, t + 1}) {
            if (rx == m || rx > k || !delivered[rx - 1] || !r.link(rx, t)) {
                continue;
            }
            bool all_reach = carriers.size() == 2;
            for (int u : carriers) {
                all_reach = all_reach && r.link(rx, u);
            }
            if (!all_reach) {
                return false;
            }
            // Found through both carriers; count once, via the smaller one.
            if (t == *carriers.begin()) {
                ++zero_constraints;
            }
        }
    }
    return zero_constraints <= 1;
}

bool feasible(CarrierConfig const& cfg, NetworkRealization const& r)
{
    if (cfg.k() != r.k() || static_cast<int>(cfg.carriers.size()) != r.k()) {
        throw ParameterError("carrier configuration and realization sizes differ");
    }
    for (int m = 1; m <= cfg.k(); ++m) {
        if (!cfg.delivered[m - 1]) {
            if (!cfg.carriers[m - 1].empty()) {
                throw ParameterError("undelivered message W_" + std::to_string(m) +
                                     " has carriers");
            }
            continue;
        }
        if (!message_feasible(m, cfg.carriers[m - 1], cfg.delivered, r)) {
            return false;
        }
    }
    return true;
}

namespace {

// Non-empty subsets of a transmit set: each singleton, then the pair.
std::vector<TransmitSet> carrier_choices(TransmitSet const& t)
{
    std::vector<TransmitSet> out;
    for (int x : t) {
        out.push_back({x});
    }
    if (t.size() == 2) {
        out.push_back(t);
    }
    return out;
}

} // namespace

OracleResult best_zero_forcing_config(NetworkRealization const& r, MessageAssignment const& a,
                                      int max_k)
{
    int const k = r.k();
    if (a.k() != k) {
        throw ParameterError("realization and assignment sizes differ");
    }
    if (k > max_k) {
        throw ParameterError("oracle refuses K=" + std::to_string(k) + " (limit " +
                             std::to_string(max_k) + ")");
    }
    std::vector<std::vector<TransmitSet>> choices;
    choices.reserve(k);
    for (int m = 1; m <= k; ++m) {
        choices.push_back(carrier_choices(a.transmit_set(m)));
    }

    OracleResult best;
    best.witness.delivered.assign(k, false);
    best.witness.carriers.assign(k, TransmitSet{});

    std::vector<bool> delivered(k);
    std::vector<TransmitSet> carriers(k);
    std::uint64_t const subsets = std::uint64_t{1} << k;
    for (std::uint64_t d = 1; d < subsets; ++d) {
        int const size = std::popcount(d);
        if (size <= best.dof) {
            continue;
        }
        for (int m = 1; m <= k; ++m) {
            delivered[m - 1] = (d >> (m - 1)) & 1U;
        }
        bool ok = true;
        for (int m = 1; m <= k && ok; ++m) {
            carriers[m - 1] = TransmitSet{};
            if (!delivered[m - 1]) {
                continue;
            }
            ok = false;
            for (auto const& c : choices[m - 1]) {
                if (message_feasible(m, c, delivered, r)) {
                    carriers[m - 1] = c;
                    ok = true;
                    break;
                }
            }
        }
        if (ok) {
            best.dof = size;
            best.witness.delivered = delivered;
            best.witness.carriers = carriers;
        }
    }
    return best;
}

int optimal_zero_forcing_dof(NetworkRealization const& r, MessageAssignment const& a, int max_k)
{
    return best_zero_forcing_config(r, a, max_k).dof;
}

NetworkRealization realization_from_mask(int k, std::uint64_t mask)
{
    std::vector<bool> direct(k);
    std::vector<bool> cross(k - 1);
    for (int j = 0; j < k; ++j) {
        direct[j] = (mask >> j) & 1U;
    }
    for (int j = 0; j + 1 < k; ++j) {
        cross[j] = (mask >> (k + j)) & 1U;
    }
    return {std::move(direct), std::move(cross)};
}

MessageAssignment deactivate_last(MessageAssignment const& a)
{
    return a.without_transmitter(a.k());
}

NetworkRealization deactivate_last(NetworkRealization const& r)
{
    return r.with_direct_erased(r.k());
}

namespace {

void check_exact_limits(int k, MessageAssignment const& a, DofEngine engine)
{
    if (k < 1 || a.k() != k) {
        throw ParameterError("exact expectation needs k >= 1 matching the assignment");
    }
    int const limit = engine == DofEngine::Scheduler ? kExactSchedulerMaxK : kExactOracleMaxK;
    if (k > limit) {
        throw ParameterError("exhaustive enumeration refuses k=" + std::to_string(k) +
                             " (limit " + std::to_string(limit) + ")");
    }
}

int pattern_dof(int k, std::uint64_t mask, MessageAssignment const& a, DofEngine engine,
                bool deactivate)
{
    NetworkRealization r = realization_from_mask(k, mask);
    if (deactivate) {
        r = deactivate_last(r);
    }
    return engine == DofEngine::Scheduler ? dof(schedule_network(r, a))
                                          : optimal_zero_forcing_dof(r, a, kExactOracleMaxK);
}

} // namespace

std::vector<std::int64_t> dof_histogram(int k, MessageAssignment const& a, DofEngine engine,
                                        bool deactivate)
{
    check_exact_limits(k, a, engine);
    MessageAssignment const used = deactivate ? deactivate_last(a) : a;
    int const slots = 2 * k - 1;
    std::int64_t const patterns = std::int64_t{1} << slots;
    std::vector<std::int64_t> hist(slots + 1, 0);

#pragma omp parallel
    {
        std::vector<std::int64_t> local(slots + 1, 0);
#pragma omp for schedule(static)
        for (std::int64_t mask = 0; mask < patterns; ++mask) {
            auto const bits = static_cast<std::uint64_t>(mask);
            int const absent = slots - std::popcount(bits);
            local[absent] += pattern_dof(k, bits, used, engine, deactivate);
        }
#pragma omp critical
        for (int n = 0; n <= slots; ++n) {
            hist[n] += local[n];
        }
    }
    return hist;
}

std::vector<std::int64_t> dof_histogram_serial(int k, MessageAssignment const& a,
                                               DofEngine engine, bool deactivate)
{
    check_exact_limits(k, a, engine);
    MessageAssignment const used = deactivate ? deactivate_last(a) : a;
    int const slots = 2 * k - 1;
    std::uint64_t const patterns = std::uint64_t{1} << slots;
    std::vector<std::int64_t> hist(slots + 1, 0);
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        hist[slots - std::popcount(mask)] += pattern_dof(k, mask, used, engine, deactivate);
    }
    return hist;
}

double expected_from_histogram(std::vector<std::int64_t> const& hist, double p)
{
    int const slots = static_cast<int>(hist.size()) - 1;
    double sum = 0.0;
    for (int n = 0; n <= slots; ++n) {
        sum += static_cast<double>(hist[n]) * std::pow(p, n) * std::pow(1.0 - p, slots - n);
    }
    return sum;
}

double exact_expected_dof(int k, double p, MessageAssignment const& a, DofEngine engine,
                          bool deactivate)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterError("erasure probability must lie in [0,1]");
    }
    return expected_from_histogram(dof_histogram(k, a, engine, deactivate), p);
}

} // namespace wyner
