#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wyner/assignment.hpp"
#include "wyner/network.hpp"

namespace wyner {

/// Binary decisions b(i,j) = "transmitter j emits a signal derived from
/// message i", restricted to j in {i-2, i-1, i, i+1}:
///   b(i,i-1), b(i,i)   deliver W_i to receiver i,
///   b(i,i-2)           cancels W_i at receiver i-1 (accompanies b(i,i-1)),
///   b(i,i+1)           cancels W_i at receiver i+1 (accompanies b(i+1,i+1)).
/// Out-of-range reads are 0.
class Schedule {
public:
    explicit Schedule(int k);

    int k() const noexcept { return static_cast<int>(rows_.size()); }

    bool get(int i, int j) const noexcept;
    /// Throws InvariantError for (i,j) outside the decision window or [1,K].
    void set(int i, int j);

    bool is_delivered(int i) const noexcept { return get(i, i - 1) || get(i, i); }
    /// Messages with b(i,i-1) or b(i,i) set, ascending.
    std::vector<int> delivered() const;
    bool transmitter_active(int t) const noexcept;

    /// All set decisions as (message, transmitter), ordered by message then
    /// transmitter.
    std::vector<std::pair<int, int>> decisions() const;

    friend bool operator==(Schedule const&, Schedule const&) = default;

private:
    // rows_[i-1][j-i+2]
    std::vector<std::array<bool, 4>> rows_;
};

/// Greedy decision pass over one cluster of n = direct.size() users, all of
/// whose internal cross links are present. `local` holds the transmit sets
/// re-indexed to the cluster. Messages are visited in order; each is sent if
/// it can reach its receiver without disturbing a receiver already made
/// active, preferring transmitter i-1 over i. Earlier decisions are never
/// revisited.
/// Throws ParameterError if local.k() != n.
Schedule schedule_cluster(std::vector<bool> const& direct, MessageAssignment const& local);

/// Partitions r into clusters, schedules each on the cluster-restricted
/// assignment and merges the results back to global indices.
Schedule schedule_network(NetworkRealization const& r, MessageAssignment const& a);

/// Number of delivered messages.
int dof(Schedule const& s) noexcept;

/// Structural invariants of a schedule against its assignment. Empty when
/// all hold; otherwise one human-readable line per violation.
std::vector<std::string> schedule_violations(Schedule const& s, MessageAssignment const& a);

} // namespace wyner
