#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "wyner/fraction.hpp"
#include "wyner/network.hpp"

namespace wyner {

/// Transmitters holding one message. At most two, kept sorted and unique.
class TransmitSet {
public:
    static constexpr int kCapacity = 2;

    TransmitSet() = default;
    TransmitSet(std::initializer_list<int> transmitters);

    /// Adds t; no-op if present. Throws ParameterError when already full.
    void insert(int t);
    bool contains(int t) const noexcept;
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    int const* begin() const noexcept { return items_.data(); }
    int const* end() const noexcept { return items_.data() + size_; }

    friend bool operator==(TransmitSet const& a, TransmitSet const& b) noexcept
    {
        return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
    }

private:
    std::array<int, kCapacity> items_{};
    int size_ = 0;
};

/// Transmit sets T_1..T_K; every index lies in [1,K].
class MessageAssignment {
public:
    explicit MessageAssignment(std::vector<TransmitSet> sets);

    int k() const noexcept { return static_cast<int>(sets_.size()); }
    /// T_i, 1-based.
    TransmitSet const& transmit_set(int i) const { return sets_.at(i - 1); }
    std::span<TransmitSet const> sets() const noexcept { return sets_; }

    /// Copy with transmitter t removed from every transmit set.
    MessageAssignment without_transmitter(int t) const;

    friend bool operator==(MessageAssignment const&, MessageAssignment const&) = default;

private:
    std::vector<TransmitSet> sets_;
};

struct AssignmentBuild {
    MessageAssignment assignment;
    /// One entry per message index matched by more than one piecewise case.
    std::vector<std::string> overlaps;
};

/// Piecewise assignment family parameterized by the network size and the
/// fraction f of messages that get one connected transmitter plus one helper:
///
///   T_1 = {1,2},  T_K = {K-2,K-1},
///   T_i = {i,i+1} for i = 1 + n*max{2, floor(K/(fK-1))},
///                 n in 1..min{fK-2, floor(K/2)-1},
///   T_i = {i,i+1} for i = 2n, n in 1..ceil((f-1/2)K)-1,
///   T_i = {i-1,i} otherwise.
///
/// A range 1..x is empty for x < 1. All floors and ceilings are exact. When
/// several cases match the same i the first listed one wins.
/// Throws ParameterError for k < 3.
AssignmentBuild build_assignment_diagnosed(int k, Fraction f);
MessageAssignment build_assignment(int k, Fraction f);

/// Share of messages whose transmit set pairs exactly one transmitter
/// connected to the destination with one helper that is not.
Fraction helper_fraction(MessageAssignment const& a);

/// Drops transmitters outside the cluster and re-indexes users to 1..N.
MessageAssignment restrict_to_cluster(MessageAssignment const& a, Cluster const& c);

/// Canonical report label `K=<k>,f=<num>/<den>`.
std::string assignment_label(int k, Fraction f);

/// One line per message, `i: t1[,t2]` (`i: -` for an empty set).
std::string format_assignment(MessageAssignment const& a);

} // namespace wyner
