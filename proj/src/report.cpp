#include "wyner/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "wyner/error.hpp"

namespace wyner {

std::string format_real(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_sweep_csv(std::ostream& out, std::vector<SweepRow> const& rows)
{
    out << kSweepCsvHeader << '\n';
    for (auto const& r : rows) {
        out << format_real(r.p) << ",\"" << r.assignment << "\"," << r.k << ','
            << r.f.numerator() << ',' << r.f.denominator() << ',' << r.trials << ',' << r.seed
            << ',' << format_real(r.mean) << ',' << format_real(r.std_error) << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char const c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) {
        throw ParseError("unterminated quote");
    }
    fields.push_back(std::move(cur));
    return fields;
}

template <class T>
T parse_number(std::string const& s, char const* field)
{
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(std::string(field) + ": '" + s + "' is not a valid number");
    }
    return v;
}

} // namespace

std::vector<SweepRow> read_sweep_csv(std::istream& in, std::string const& source)
{
    std::string line;
    std::size_t line_no = 0;
    auto error = [&](std::string const& what) {
        return ParseError(source + ":" + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            break;
        }
    }
    if (line_no == 0 || line.empty()) {
        throw ParseError(source + ": empty file, expected header '" +
                         std::string(kSweepCsvHeader) + "'");
    }
    if (line != kSweepCsvHeader) {
        throw error("header mismatch, expected '" + std::string(kSweepCsvHeader) + "'");
    }

    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        try {
            auto const f = split_csv_line(line);
            if (f.size() != 9) {
                throw ParseError("expected 9 fields, got " + std::to_string(f.size()));
            }
            SweepRow r;
            r.p = parse_number<double>(f[0], "p");
            r.assignment = f[1];
            r.k = parse_number<int>(f[2], "k");
            r.f = Fraction(parse_number<std::int64_t>(f[3], "f_num"),
                           parse_number<std::int64_t>(f[4], "f_den"));
            r.trials = parse_number<std::int64_t>(f[5], "trials");
            r.seed = parse_number<std::uint64_t>(f[6], "seed");
            r.mean = parse_number<double>(f[7], "pudof_mean");
            r.std_error = parse_number<double>(f[8], "pudof_stderr");
            if (!(r.p >= 0.0 && r.p <= 1.0)) {
                throw ParseError("p outside [0,1]");
            }
            if (!(r.mean >= 0.0 && r.mean <= 1.0) || !(r.std_error >= 0.0)) {
                throw ParseError("puDoF statistics out of range");
            }
            if (r.trials < 1 || r.k < 1) {
                throw ParseError("k and trials must be positive");
            }
            if (r.assignment != assignment_label(r.k, r.f)) {
                throw ParseError("assignment label '" + r.assignment +
                                 "' disagrees with k/f_num/f_den");
            }
            rows.push_back(std::move(r));
        } catch (ParseError const& e) {
            throw error(e.what());
        } catch (ParameterError const& e) {
            throw error(e.what());
        }
    }
    if (rows.empty()) {
        throw ParseError(source + ": no data rows");
    }
    return rows;
}

namespace {

// Grid points are compared at the CSV's printed resolution.
long long p_key(double p)
{
    return std::llround(p * 1e9);
}

} // namespace

std::vector<TableRow> best_assignment_table(std::vector<SweepRow> const& rows)
{
    if (rows.empty()) {
        throw ParameterError("no results to tabulate");
    }
    std::vector<std::string> order;
    std::map<long long, std::vector<SweepRow const*>> by_p;
    std::map<std::string, std::set<long long>> grid_of;
    for (auto const& r : rows) {
        if (std::find(order.begin(), order.end(), r.assignment) == order.end()) {
            order.push_back(r.assignment);
        }
        by_p[p_key(r.p)].push_back(&r);
        grid_of[r.assignment].insert(p_key(r.p));
    }
    auto const& reference = grid_of.begin()->second;
    for (auto const& [name, grid] : grid_of) {
        if (grid != reference) {
            throw ParameterError("assignment " + name + " does not cover the common p grid");
        }
    }

    std::vector<TableRow> table;
    for (auto const& [key, at_p] : by_p) {
        // Deterministic winner: largest mean, earliest-listed assignment on equality.
        auto rank = [&](SweepRow const* r) {
            return std::find(order.begin(), order.end(), r->assignment) - order.begin();
        };
        SweepRow const* best = nullptr;
        for (auto const* r : at_p) {
            if (!best || r->mean > best->mean || (r->mean == best->mean && rank(r) < rank(best))) {
                best = r;
            }
        }
        TableRow row{best->p, best->assignment, best->mean, best->std_error, {}};
        for (auto const* r : at_p) {
            if (r == best || r->assignment == best->assignment) {
                continue;
            }
            double const combined = std::hypot(best->std_error, r->std_error);
            if (best->mean - r->mean <= 2.0 * combined) {
                row.ties.push_back(r->assignment);
            }
        }
        table.push_back(std::move(row));
    }
    return table;
}

std::vector<WinnerRange> winner_ranges(std::vector<TableRow> const& table)
{
    std::vector<WinnerRange> out;
    for (auto const& row : table) {
        if (!out.empty() && out.back().winner == row.winner) {
            out.back().p_to = row.p;
        } else {
            out.push_back({row.p, row.p, row.winner});
        }
    }
    return out;
}

void write_table_csv(std::ostream& out, std::vector<TableRow> const& table)
{
    out << "p,winner,pudof_mean,pudof_stderr,ties\n";
    for (auto const& row : table) {
        out << format_real(row.p) << ",\"" << row.winner << "\"," << format_real(row.mean) << ','
            << format_real(row.std_error) << ",\"";
        for (std::size_t i = 0; i < row.ties.size(); ++i) {
            out << (i ? ";" : "") << row.ties[i];
        }
        out << "\"\n";
    }
}

void write_winner_ranges(std::ostream& out, std::vector<WinnerRange> const& ranges)
{
    for (auto const& r : ranges) {
        if (r.p_from == r.p_to) {
            out << format_real(r.p_from);
        } else {
            out << format_real(r.p_from) << " to " << format_real(r.p_to);
        }
        out << ": " << r.winner << '\n';
    }
}

} // namespace wyner
