#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wyner/assignment.hpp"
#include "wyner/fraction.hpp"

namespace wyner {

struct PudofEstimate {
    double mean = 0.0;       // average DoF / K
    double std_error = 0.0;  // sample standard deviation of DoF / K over sqrt(trials)
    std::int64_t trials = 0;
    std::uint64_t seed = 0;  // master seed the trials were derived from
};

/// Seed of trial `trial` under `master_seed`.
std::uint64_t trial_seed(std::uint64_t master_seed, std::int64_t trial) noexcept;

/// Monte Carlo puDoF at erasure probability p. Trial t samples a
/// realization from trial_seed(master_seed, t); with deactivate_last the
/// last transmitter is removed from every transmit set and its direct link
/// erased before scheduling. Results do not depend on the thread count.
/// Throws ParameterError for trials < 1 or a size mismatch, InvariantError
/// if a schedule ever activates a deactivated transmitter.
PudofEstimate estimate_pudof(int k, double p, MessageAssignment const& a, std::int64_t trials,
                             std::uint64_t master_seed, bool deactivate_last);
/// Single-threaded reference for estimate_pudof; bit-identical output.
PudofEstimate estimate_pudof_serial(int k, double p, MessageAssignment const& a,
                                    std::int64_t trials, std::uint64_t master_seed,
                                    bool deactivate_last);

/// Common random numbers: every assignment is scheduled on the same
/// realizations, which sharpens comparisons between them.
std::vector<PudofEstimate> estimate_pudof_shared(int k, double p,
                                                 std::span<MessageAssignment const> assignments,
                                                 std::int64_t trials, std::uint64_t master_seed,
                                                 bool deactivate_last);

struct AssignmentSpec {
    int k = 5;
    Fraction f;

    std::string label() const { return assignment_label(k, f); }
};

struct SweepConfig {
    double p_start = 0.0;
    double p_end = 1.0;
    double p_step = 0.01;
    std::vector<AssignmentSpec> assignments;
    std::int64_t trials = 6000;
    std::uint64_t seed = 0;
    bool deactivate_last = true;
    /// Share realizations between assignments of equal K at each p.
    bool common_random_numbers = false;
};

struct SweepRow {
    double p = 0.0;
    std::string assignment;
    int k = 0;
    Fraction f;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    double std_error = 0.0;
};

/// Grid points start, start+step, ..., end. A zero step is allowed only
/// when start == end. Throws ParameterError for points outside [0,1].
std::vector<double> p_grid(double start, double end, double step);

using SweepProgress = std::function<void(std::size_t done, std::size_t total)>;

/// estimate_pudof at every (p, assignment), rows ordered by p then by
/// assignment. Row seeds derive from (seed, p index, assignment index), or
/// (seed, p index, K) under common random numbers.
std::vector<SweepRow> sweep(SweepConfig const& cfg, SweepProgress const& progress = {});

} // namespace wyner
