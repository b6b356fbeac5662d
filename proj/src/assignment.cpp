#include "wyner/assignment.hpp"

#include <algorithm>
#include <cstdint>

#include "wyner/error.hpp"

namespace wyner {

TransmitSet::TransmitSet(std::initializer_list<int> transmitters)
{
    for (int t : transmitters) {
        insert(t);
    }
}

void TransmitSet::insert(int t)
{
    if (contains(t)) {
        return;
    }
    if (size_ == kCapacity) {
        throw ParameterError("a message can be held by at most two transmitters");
    }
    items_[size_++] = t;
    std::sort(items_.begin(), items_.begin() + size_);
}

bool TransmitSet::contains(int t) const noexcept
{
    return std::find(begin(), end(), t) != end();
}

MessageAssignment::MessageAssignment(std::vector<TransmitSet> sets) : sets_(std::move(sets))
{
    int const k = this->k();
    for (int i = 1; i <= k; ++i) {
        for (int t : sets_[i - 1]) {
            if (t < 1 || t > k) {
                throw ParameterError("T_" + std::to_string(i) + " names transmitter " +
                                     std::to_string(t) + " outside [1," + std::to_string(k) + "]");
            }
        }
    }
}

MessageAssignment MessageAssignment::without_transmitter(int t) const
{
    std::vector<TransmitSet> sets;
    sets.reserve(sets_.size());
    for (auto const& s : sets_) {
        TransmitSet kept;
        for (int x : s) {
            if (x != t) {
                kept.insert(x);
            }
        }
        sets.push_back(kept);
    }
    return MessageAssignment(std::move(sets));
}

namespace {

// Exact floor/ceil of a/b for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    return (a % b != 0 && a > 0) ? q + 1 : q;
}

enum class Case { None, First, Last, Stride, Even };

char const* case_name(Case c)
{
    switch (c) {
    case Case::First: return "i = 1";
    case Case::Last: return "i = K";
    case Case::Stride: return "strided helper row";
    case Case::Even: return "even helper row";
    default: return "otherwise";
    }
}

} // namespace

AssignmentBuild build_assignment_diagnosed(int k, Fraction f)
{
    if (k < 3) {
        throw ParameterError("the assignment family needs k >= 3, got " + std::to_string(k));
    }
    std::int64_t const a = f.numerator();
    std::int64_t const b = f.denominator();
    std::int64_t const K = k;

    std::vector<Case> chosen(k + 1, Case::None);
    std::vector<std::string> overlaps;
    auto mark = [&](std::int64_t i, Case c) {
        if (i < 1 || i > K) {
            return;
        }
        if (chosen[i] != Case::None) {
            overlaps.push_back("message " + std::to_string(i) + ": '" + case_name(c) +
                               "' also matches, '" + case_name(chosen[i]) + "' applies");
            return;
        }
        chosen[i] = c;
    };

    mark(1, Case::First);
    mark(K, Case::Last);

    // n in 1..min{fK - 2, floor(K/2) - 1}; fK - 2 = (aK - 2b)/b.
    std::int64_t const stride_count = std::min(floor_div(a * K - 2 * b, b), K / 2 - 1);
    if (stride_count >= 1) {
        // fK >= 3 here, so fK - 1 = (aK - b)/b is positive.
        std::int64_t const stride = std::max<std::int64_t>(2, floor_div(K * b, a * K - b));
        for (std::int64_t n = 1; n <= stride_count; ++n) {
            mark(1 + n * stride, Case::Stride);
        }
    }

    // n in 1..ceil((f - 1/2)K) - 1; (f - 1/2)K = (2a - b)K / 2b.
    std::int64_t const even_count = ceil_div((2 * a - b) * K, 2 * b) - 1;
    for (std::int64_t n = 1; n <= even_count; ++n) {
        mark(2 * n, Case::Even);
    }

    std::vector<TransmitSet> sets(k);
    for (int i = 1; i <= k; ++i) {
        switch (chosen[i]) {
        case Case::First: sets[i - 1] = {1, 2}; break;
        case Case::Last: sets[i - 1] = {k - 2, k - 1}; break;
        case Case::Stride:
        case Case::Even: sets[i - 1] = {i, i + 1}; break;
        case Case::None: sets[i - 1] = {i - 1, i}; break;
        }
    }
    return {MessageAssignment(std::move(sets)), std::move(overlaps)};
}

MessageAssignment build_assignment(int k, Fraction f)
{
    return build_assignment_diagnosed(k, f).assignment;
}

Fraction helper_fraction(MessageAssignment const& a)
{
    std::int64_t count = 0;
    for (int i = 1; i <= a.k(); ++i) {
        auto const& t = a.transmit_set(i);
        int connected = (i >= 2 && t.contains(i - 1) ? 1 : 0) + (t.contains(i) ? 1 : 0);
        if (t.size() == 2 && connected == 1) {
            ++count;
        }
    }
    return {count, a.k()};
}

MessageAssignment restrict_to_cluster(MessageAssignment const& a, Cluster const& c)
{
    if (c.start < 1 || c.end > a.k() || c.start > c.end) {
        throw ParameterError("cluster [" + std::to_string(c.start) + "," + std::to_string(c.end) +
                             "] does not fit a " + std::to_string(a.k()) + "-user assignment");
    }
    std::vector<TransmitSet> local(c.size());
    for (int i = c.start; i <= c.end; ++i) {
        for (int t : a.transmit_set(i)) {
            if (c.contains(t)) {
                local[i - c.start].insert(t - c.start + 1);
            }
        }
    }
    return MessageAssignment(std::move(local));
}

std::string assignment_label(int k, Fraction f)
{
    return "K=" + std::to_string(k) + ",f=" + f.str();
}

std::string format_assignment(MessageAssignment const& a)
{
    std::string out;
    for (int i = 1; i <= a.k(); ++i) {
        out += std::to_string(i) + ":";
        auto const& t = a.transmit_set(i);
        if (t.empty()) {
            out += " -";
        }
        char sep = ' ';
        for (int x : t) {
            out += sep;
            out += std::to_string(x);
            sep = ',';
        }
        out += '\n';
    }
    return out;
}

} // namespace wyner
