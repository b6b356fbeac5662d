#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wyner/assignment.hpp"
#include "wyner/network.hpp"

namespace wyner {

/// Random assignment with |T_i| <= 2. Each slot is empty, local (drawn from
/// the transmitters i-2..i+1) or far-away (uniform over [1,K]).
MessageAssignment random_assignment(int k, std::uint64_t seed);

struct NamedAssignment {
    std::string name;
    MessageAssignment assignment;
};

/// f=0 baseline, f=3/5, then `random_count` random assignments seeded from
/// (seed, k).
std::vector<NamedAssignment> verification_family(int k, int random_count, std::uint64_t seed);

struct Mismatch {
    std::string assignment_name;
    NetworkRealization realization;
    MessageAssignment assignment;
    int scheduler_dof = 0;
    int oracle_dof = 0;
};

struct VerifyReport {
    std::int64_t instances = 0;
    std::int64_t mismatches = 0;
    /// First mismatches in enumeration order, capped by the caller's limit.
    std::vector<Mismatch> examples;
};

/// Every erasure pattern of a K-user network against every assignment:
/// greedy scheduler DoF versus the exhaustive oracle.
VerifyReport verify_exhaustive(int k, std::vector<NamedAssignment> const& family,
                               std::size_t example_limit = 10);

/// `trials` random instances: K uniform in [k_min, k_max], p uniform in
/// [0,1], a random realization and a random assignment per instance.
VerifyReport verify_random(int k_min, int k_max, std::int64_t trials, std::uint64_t seed,
                           std::size_t example_limit = 10);

void merge_into(VerifyReport& total, VerifyReport const& part, std::size_t example_limit);

/// Multi-line human-readable counterexample.
std::string format_mismatch(Mismatch const& m);

} // namespace wyner
