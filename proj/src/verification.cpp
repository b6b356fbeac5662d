#include "wyner/verification.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "wyner/error.hpp"
#include "wyner/oracle.hpp"
#include "wyner/schedule.hpp"
#include "wyner/seed.hpp"

namespace wyner {

MessageAssignment random_assignment(int k, std::uint64_t seed)
{
    if (k < 1) {
        throw ParameterError("k must be at least 1");
    }
    std::mt19937_64 gen(derive_seed(seed, {0xa55197ULL}));
    std::uniform_int_distribution<int> size_dist(0, 5);
    std::uniform_int_distribution<int> local_dist(-2, 1);
    std::uniform_int_distribution<int> any_dist(1, k);
    std::uniform_int_distribution<int> far_coin(0, 3);

    std::vector<TransmitSet> sets(k);
    for (int i = 1; i <= k; ++i) {
        // Sizes 0, 1, 2 with weights 1:2:3.
        int const roll = size_dist(gen);
        int const want = roll == 0 ? 0 : (roll <= 2 ? 1 : 2);
        auto& t = sets[i - 1];
        for (int tries = 0; t.size() < want && tries < 16; ++tries) {
            int const cand = far_coin(gen) == 0 ? any_dist(gen) : i + local_dist(gen);
            if (cand >= 1 && cand <= k) {
                t.insert(cand);
            }
        }
    }
    return MessageAssignment(std::move(sets));
}

std::vector<NamedAssignment> verification_family(int k, int random_count, std::uint64_t seed)
{
    std::vector<NamedAssignment> family;
    family.push_back({assignment_label(k, Fraction(0, 1)), build_assignment(k, Fraction(0, 1))});
    family.push_back({assignment_label(k, Fraction(3, 5)), build_assignment(k, Fraction(3, 5))});
    for (int j = 0; j < random_count; ++j) {
        std::uint64_t const s = derive_seed(seed, {static_cast<std::uint64_t>(k),
                                                   static_cast<std::uint64_t>(j)});
        family.push_back({"random#" + std::to_string(j), random_assignment(k, s)});
    }
    return family;
}

void merge_into(VerifyReport& total, VerifyReport const& part, std::size_t example_limit)
{
    total.instances += part.instances;
    total.mismatches += part.mismatches;
    for (auto const& m : part.examples) {
        if (total.examples.size() >= example_limit) {
            break;
        }
        total.examples.push_back(m);
    }
}

VerifyReport verify_exhaustive(int k, std::vector<NamedAssignment> const& family,
                               std::size_t example_limit)
{
    if (k < 1 || k > kOracleMaxK) {
        throw ParameterError("exhaustive verification supports 1 <= k <= " +
                             std::to_string(kOracleMaxK));
    }
    std::int64_t const patterns = std::int64_t{1} << (2 * k - 1);
    std::int64_t const jobs = patterns * static_cast<std::int64_t>(family.size());
    std::vector<std::optional<Mismatch>> found(example_limit);
    std::vector<std::int64_t> found_at(example_limit, -1);
    std::int64_t mismatches = 0;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : mismatches)
    for (std::int64_t job = 0; job < jobs; ++job) {
        auto const& named = family[job / patterns];
        auto const r = realization_from_mask(k, static_cast<std::uint64_t>(job % patterns));
        int const greedy = dof(schedule_network(r, named.assignment));
        int const best = optimal_zero_forcing_dof(r, named.assignment);
        if (greedy != best) {
            ++mismatches;
#pragma omp critical
            {
                // Keep the earliest jobs so the report is thread-count independent.
                auto slot = std::find(found_at.begin(), found_at.end(), -1);
                if (slot == found_at.end()) {
                    slot = std::max_element(found_at.begin(), found_at.end());
                    if (*slot < job) {
                        slot = found_at.end();
                    }
                }
                if (slot != found_at.end()) {
                    auto idx = slot - found_at.begin();
                    *slot = job;
                    found[idx] = Mismatch{named.name, r, named.assignment, greedy, best};
                }
            }
        }
    }

    VerifyReport report;
    report.instances = jobs;
    report.mismatches = mismatches;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < found_at.size(); ++i) {
        if (found_at[i] >= 0) {
            idx.push_back(i);
        }
    }
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return found_at[a] < found_at[b]; });
    for (auto i : idx) {
        report.examples.push_back(*found[i]);
    }
    return report;
}

VerifyReport verify_random(int k_min, int k_max, std::int64_t trials, std::uint64_t seed,
                           std::size_t example_limit)
{
    if (k_min < 1 || k_min > k_max || k_max > kOracleMaxK) {
        throw ParameterError("random verification needs 1 <= k-min <= k-max <= " +
                             std::to_string(kOracleMaxK));
    }
    if (trials < 1) {
        throw ParameterError("trials must be at least 1");
    }
    std::vector<std::int64_t> bad(trials, 0);
    std::vector<int> greedy_dof(trials, 0);
    std::vector<int> oracle_dof(trials, 0);

    auto instance = [&](std::int64_t t) {
        std::uint64_t const s = derive_seed(seed, {static_cast<std::uint64_t>(t)});
        std::mt19937_64 gen(s);
        int const k = std::uniform_int_distribution<int>(k_min, k_max)(gen);
        double const p = unit_interval(gen());
        return std::tuple{sample_realization(k, p, mix64(s)), random_assignment(k, mix64(s + 1))};
    };

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t t = 0; t < trials; ++t) {
        auto const [r, a] = instance(t);
        greedy_dof[t] = dof(schedule_network(r, a));
        oracle_dof[t] = optimal_zero_forcing_dof(r, a);
        bad[t] = greedy_dof[t] != oracle_dof[t] ? 1 : 0;
    }

    VerifyReport report;
    report.instances = trials;
    for (std::int64_t t = 0; t < trials; ++t) {
        if (!bad[t]) {
            continue;
        }
        ++report.mismatches;
        if (report.examples.size() < example_limit) {
            auto [r, a] = instance(t);
            report.examples.push_back(
                {"random#" + std::to_string(t), std::move(r), std::move(a), greedy_dof[t],
                 oracle_dof[t]});
        }
    }
    return report;
}

std::string format_mismatch(Mismatch const& m)
{
    std::string out = "assignment " + m.assignment_name + " on " +
                      format_realization(m.realization) + ": scheduler " +
                      std::to_string(m.scheduler_dof) + ", oracle " + std::to_string(m.oracle_dof) +
                      "\n";
    out += format_assignment(m.assignment);
    return out;
}

} // namespace wyner
