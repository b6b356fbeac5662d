#include "wyner/schedule.hpp"

#include "wyner/error.hpp"

namespace wyner {

Schedule::Schedule(int k) : rows_(k > 0 ? k : 0)
{
    if (k < 1) {
        throw ParameterError("schedule needs at least one user");
    }
}

bool Schedule::get(int i, int j) const noexcept
{
    int const off = j - i + 2;
    if (i < 1 || i > k() || j < 1 || j > k() || off < 0 || off > 3) {
        return false;
    }
    return rows_[i - 1][off];
}

void Schedule::set(int i, int j)
{
    int const off = j - i + 2;
    if (i < 1 || i > k() || j < 1 || j > k() || off < 0 || off > 3) {
        throw InvariantError("decision b(" + std::to_string(i) + "," + std::to_string(j) +
                             ") is outside the scheduling window");
    }
    rows_[i - 1][off] = true;
}

std::vector<int> Schedule::delivered() const
{
    std::vector<int> out;
    for (int i = 1; i <= k(); ++i) {
        if (is_delivered(i)) {
            out.push_back(i);
        }
    }
    return out;
}

bool Schedule::transmitter_active(int t) const noexcept
{
    for (int i = t - 1; i <= t + 2; ++i) {
        if (get(i, t)) {
            return true;
        }
    }
    return false;
}

std::vector<std::pair<int, int>> Schedule::decisions() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= k(); ++i) {
        for (int j = i - 2; j <= i + 1; ++j) {
            if (get(i, j)) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

Schedule schedule_cluster(std::vector<bool> const& direct, MessageAssignment const& local)
{
    int const n = static_cast<int>(direct.size());
    if (n < 1) {
        throw ParameterError("cluster must contain at least one user");
    }
    if (local.k() != n) {
        throw ParameterError("cluster has " + std::to_string(n) + " users but its assignment has " +
                             std::to_string(local.k()));
    }

    Schedule s(n);
    auto knows = [&](int i, int t) { return i >= 1 && i <= n && local.transmit_set(i).contains(t); };
    auto has_direct = [&](int i) { return i >= 1 && i <= n && direct[i - 1]; };
    auto b = [&](int i, int j) { return s.get(i, j); };

    if (has_direct(1) && knows(1, 1)) {
        s.set(1, 1);
    }

    if (n >= 2) {
        // H(2,1) is present inside a cluster.
        if (knows(2, 1) && !b(1, 1)) {
            s.set(2, 1);
        } else if (has_direct(2) && knows(2, 2)) {
            if (!b(1, 1)) {
                s.set(2, 2);
            } else if (knows(1, 2)) {
                s.set(2, 2);
                s.set(1, 2);
            }
        }
    }

    for (int i = 3; i <= n; ++i) {
        // Deliver W_i from transmitter i-1.
        if (knows(i, i - 1) && !b(i - 1, i - 1)) {
            if (!has_direct(i - 1) || !b(i - 1, i - 2)) {
                s.set(i, i - 1);
            } else if (knows(i, i - 2) &&
                       (!has_direct(i - 2) || (!b(i - 2, i - 2) && !b(i - 2, i - 3)))) {
                // Transmitter i-2 cancels W_i at the active receiver i-1.
                s.set(i, i - 1);
                s.set(i, i - 2);
            }
        }

        // Deliver W_i from transmitter i.
        if (has_direct(i) && knows(i, i) && !b(i, i - 1) && !b(i - 2, i - 1)) {
            if (!b(i - 1, i - 1)) {
                s.set(i, i);
            } else if (knows(i - 1, i)) {
                // Transmitter i cancels W_{i-1} at receiver i.
                s.set(i, i);
                s.set(i - 1, i);
            }
        }
    }
    return s;
}

Schedule schedule_network(NetworkRealization const& r, MessageAssignment const& a)
{
    if (r.k() != a.k()) {
        throw ParameterError("realization has K=" + std::to_string(r.k()) +
                             " but assignment has K=" + std::to_string(a.k()));
    }
    Schedule global(r.k());
    for (auto const& c : partition_into_clusters(r)) {
        std::vector<bool> direct(c.size());
        for (int i = c.start; i <= c.end; ++i) {
            direct[i - c.start] = r.direct(i);
        }
        Schedule local = schedule_cluster(direct, restrict_to_cluster(a, c));
        int const shift = c.start - 1;
        for (auto [i, j] : local.decisions()) {
            global.set(i + shift, j + shift);
        }
    }
    return global;
}

int dof(Schedule const& s) noexcept
{
    int n = 0;
    for (int i = 1; i <= s.k(); ++i) {
        n += s.is_delivered(i) ? 1 : 0;
    }
    return n;
}

std::vector<std::string> schedule_violations(Schedule const& s, MessageAssignment const& a)
{
    std::vector<std::string> out;
    auto name = [](int i, int j) {
        return "b(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    if (s.k() != a.k()) {
        out.push_back("schedule and assignment sizes differ");
        return out;
    }
    for (auto [i, j] : s.decisions()) {
        if (!a.transmit_set(i).contains(j)) {
            out.push_back(name(i, j) + " set but transmitter " + std::to_string(j) +
                          " does not know W_" + std::to_string(i));
        }
    }
    for (int i = 1; i <= s.k(); ++i) {
        if (s.get(i, i - 1) && s.get(i, i)) {
            out.push_back("W_" + std::to_string(i) + " delivered over two paths");
        }
        if (s.get(i, i - 2) && !s.get(i, i - 1)) {
            out.push_back(name(i, i - 2) + " set without " + name(i, i - 1));
        }
        if (s.get(i, i + 1) && !(s.get(i, i) && s.get(i + 1, i + 1))) {
            out.push_back(name(i, i + 1) + " set without " + name(i, i) + " and " +
                          name(i + 1, i + 1));
        }
    }
    return out;
}

} // namespace wyner
