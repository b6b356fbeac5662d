#include "wyner/monte_carlo.hpp"

#include <cmath>
#include <map>

#include "wyner/error.hpp"
#include "wyner/network.hpp"
#include "wyner/oracle.hpp"
#include "wyner/schedule.hpp"
#include "wyner/seed.hpp"

namespace wyner {

std::uint64_t trial_seed(std::uint64_t master_seed, std::int64_t trial) noexcept
{
    return derive_seed(master_seed, {static_cast<std::uint64_t>(trial)});
}

namespace {

void check_inputs(int k, double p, MessageAssignment const& a, std::int64_t trials)
{
    if (trials < 1) {
        throw ParameterError("trials must be at least 1");
    }
    if (a.k() != k) {
        throw ParameterError("assignment has K=" + std::to_string(a.k()) + ", expected " +
                             std::to_string(k));
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterError("erasure probability must lie in [0,1]");
    }
}

// One trial: DoF of the scheduled realization, or -1 when a deactivated
// transmitter was switched on.
int run_trial(int k, double p, MessageAssignment const& used, std::uint64_t seed, bool deactivate)
{
    NetworkRealization r = sample_realization(k, p, seed);
    if (deactivate) {
        r = deactivate_last(r);
    }
    Schedule const s = schedule_network(r, used);
    if (deactivate && s.transmitter_active(k)) {
        return -1;
    }
    return dof(s);
}

PudofEstimate summarize(int k, std::int64_t trials, std::uint64_t seed, std::int64_t sum,
                        std::int64_t sum_sq)
{
    PudofEstimate e;
    e.trials = trials;
    e.seed = seed;
    long double const n = static_cast<long double>(trials);
    long double const kk = static_cast<long double>(k);
    e.mean = static_cast<double>(static_cast<long double>(sum) / (n * kk));
    if (trials > 1) {
        // Exact integer sums make this independent of summation order.
        long double const s = static_cast<long double>(sum);
        long double const ss = static_cast<long double>(sum_sq);
        long double var = (ss - s * s / n) / (n - 1.0L) / (kk * kk);
        if (var < 0.0L) {
            var = 0.0L;
        }
        e.std_error = static_cast<double>(std::sqrt(var / n));
    }
    return e;
}

[[noreturn]] void deactivation_violated(int k)
{
    throw InvariantError("schedule activated deactivated transmitter " + std::to_string(k));
}

} // namespace

PudofEstimate estimate_pudof(int k, double p, MessageAssignment const& a, std::int64_t trials,
                             std::uint64_t master_seed, bool deactivate)
{
    check_inputs(k, p, a, trials);
    MessageAssignment const used = deactivate ? deactivate_last(a) : a;
    std::int64_t sum = 0;
    std::int64_t sum_sq = 0;
    int violated = 0;

#pragma omp parallel for schedule(static) reduction(+ : sum, sum_sq, violated)
    for (std::int64_t t = 0; t < trials; ++t) {
        int const d = run_trial(k, p, used, trial_seed(master_seed, t), deactivate);
        if (d < 0) {
            ++violated;
            continue;
        }
        sum += d;
        sum_sq += static_cast<std::int64_t>(d) * d;
    }

    if (violated > 0) {
        deactivation_violated(k);
    }
    return summarize(k, trials, master_seed, sum, sum_sq);
}

PudofEstimate estimate_pudof_serial(int k, double p, MessageAssignment const& a,
                                    std::int64_t trials, std::uint64_t master_seed,
                                    bool deactivate)
{
    check_inputs(k, p, a, trials);
    MessageAssignment const used = deactivate ? deactivate_last(a) : a;
    std::int64_t sum = 0;
    std::int64_t sum_sq = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        int const d = run_trial(k, p, used, trial_seed(master_seed, t), deactivate);
        if (d < 0) {
            deactivation_violated(k);
        }
        sum += d;
        sum_sq += static_cast<std::int64_t>(d) * d;
    }
    return summarize(k, trials, master_seed, sum, sum_sq);
}

std::vector<PudofEstimate> estimate_pudof_shared(int k, double p,
                                                 std::span<MessageAssignment const> assignments,
                                                 std::int64_t trials, std::uint64_t master_seed,
                                                 bool deactivate)
{
    std::vector<MessageAssignment> used;
    used.reserve(assignments.size());
    for (auto const& a : assignments) {
        check_inputs(k, p, a, trials);
        used.push_back(deactivate ? deactivate_last(a) : a);
    }
    int const count = static_cast<int>(used.size());
    std::vector<std::int64_t> sum(count, 0);
    std::vector<std::int64_t> sum_sq(count, 0);
    int violated = 0;

#pragma omp parallel reduction(+ : violated)
    {
        std::vector<std::int64_t> local_sum(count, 0);
        std::vector<std::int64_t> local_sq(count, 0);
#pragma omp for schedule(static)
        for (std::int64_t t = 0; t < trials; ++t) {
            NetworkRealization r = sample_realization(k, p, trial_seed(master_seed, t));
            if (deactivate) {
                r = deactivate_last(r);
            }
            for (int j = 0; j < count; ++j) {
                Schedule const s = schedule_network(r, used[j]);
                if (deactivate && s.transmitter_active(k)) {
                    ++violated;
                    continue;
                }
                std::int64_t const d = dof(s);
                local_sum[j] += d;
                local_sq[j] += d * d;
            }
        }
#pragma omp critical
        for (int j = 0; j < count; ++j) {
            sum[j] += local_sum[j];
            sum_sq[j] += local_sq[j];
        }
    }

    if (violated > 0) {
        deactivation_violated(k);
    }
    std::vector<PudofEstimate> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j) {
        out.push_back(summarize(k, trials, master_seed, sum[j], sum_sq[j]));
    }
    return out;
}

std::vector<double> p_grid(double start, double end, double step)
{
    if (!(start >= 0.0 && end <= 1.0 && start <= end)) {
        throw ParameterError("p grid must satisfy 0 <= start <= end <= 1");
    }
    if (start == end) {
        return {start};
    }
    if (!(step > 0.0)) {
        throw ParameterError("p step must be positive");
    }
    auto const intervals = static_cast<std::int64_t>(std::floor((end - start) / step + 1e-9));
    std::vector<double> grid;
    grid.reserve(intervals + 1);
    for (std::int64_t j = 0; j <= intervals; ++j) {
        // Snap to 1e-12 so that 0.07 prints as 0.07 rather than 0.07000000000000001.
        double p = std::round((start + static_cast<double>(j) * step) * 1e12) / 1e12;
        grid.push_back(std::min(p, 1.0));
    }
    return grid;
}

std::vector<SweepRow> sweep(SweepConfig const& cfg, SweepProgress const& progress)
{
    if (cfg.assignments.empty()) {
        throw ParameterError("sweep needs at least one assignment");
    }
    if (cfg.trials < 1) {
        throw ParameterError("trials must be at least 1");
    }
    auto const grid = p_grid(cfg.p_start, cfg.p_end, cfg.p_step);

    std::vector<MessageAssignment> built;
    built.reserve(cfg.assignments.size());
    for (auto const& spec : cfg.assignments) {
        built.push_back(build_assignment(spec.k, spec.f));
    }

    std::size_t const total = grid.size() * cfg.assignments.size();
    std::size_t done = 0;
    std::vector<SweepRow> rows;
    rows.reserve(total);

    auto make_row = [&](double p, std::size_t j, PudofEstimate const& e) {
        auto const& spec = cfg.assignments[j];
        return SweepRow{p, spec.label(), spec.k, spec.f, e.trials, e.seed, e.mean, e.std_error};
    };

    for (std::size_t pi = 0; pi < grid.size(); ++pi) {
        double const p = grid[pi];
        std::vector<SweepRow> at_p(cfg.assignments.size());
        if (cfg.common_random_numbers) {
            // Group assignments by network size; each group shares realizations.
            std::map<int, std::vector<std::size_t>> by_k;
            for (std::size_t j = 0; j < cfg.assignments.size(); ++j) {
                by_k[cfg.assignments[j].k].push_back(j);
            }
            for (auto const& [k, members] : by_k) {
                std::vector<MessageAssignment> group;
                for (auto j : members) {
                    group.push_back(built[j]);
                }
                std::uint64_t const seed =
                    derive_seed(cfg.seed, {pi, static_cast<std::uint64_t>(k), 0x43524eULL});
                auto const est =
                    estimate_pudof_shared(k, p, group, cfg.trials, seed, cfg.deactivate_last);
                for (std::size_t g = 0; g < members.size(); ++g) {
                    at_p[members[g]] = make_row(p, members[g], est[g]);
                }
                done += members.size();
                if (progress) {
                    progress(done, total);
                }
            }
        } else {
            for (std::size_t j = 0; j < cfg.assignments.size(); ++j) {
                std::uint64_t const seed = derive_seed(cfg.seed, {pi, j});
                auto const est = estimate_pudof(cfg.assignments[j].k, p, built[j], cfg.trials,
                                                seed, cfg.deactivate_last);
                at_p[j] = make_row(p, j, est);
                ++done;
                if (progress) {
                    progress(done, total);
                }
            }
        }
        for (auto& row : at_p) {
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace wyner
