#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wyner/monte_carlo.hpp"

namespace wyner {

inline constexpr std::string_view kSweepCsvHeader =
    "p,assignment,k,f_num,f_den,trials,seed,pudof_mean,pudof_stderr";

/// Writes the header and one row per result. Reals use 6 significant digits;
/// the assignment label is quoted since it contains a comma.
void write_sweep_csv(std::ostream& out, std::vector<SweepRow> const& rows);

/// Parses a sweep CSV. Throws ParseError naming `source` and the 1-based
/// line number of the first offending row.
std::vector<SweepRow> read_sweep_csv(std::istream& in, std::string const& source);

struct TableRow {
    double p = 0.0;
    std::string winner;
    double mean = 0.0;
    double std_error = 0.0;
    /// Assignments whose mean lies within two combined standard errors of
    /// the winner's.
    std::vector<std::string> ties;
};

/// Per grid point, the assignment with the largest mean (first listed wins
/// exact ties). Throws ParameterError for empty input or when assignments
/// do not share a common p grid.
std::vector<TableRow> best_assignment_table(std::vector<SweepRow> const& rows);

struct WinnerRange {
    double p_from = 0.0;
    double p_to = 0.0;
    std::string winner;
};

/// Collapses consecutive grid points with the same winner.
std::vector<WinnerRange> winner_ranges(std::vector<TableRow> const& table);

/// `p,winner,pudof_mean,pudof_stderr,ties` with ties joined by ';'.
void write_table_csv(std::ostream& out, std::vector<TableRow> const& table);
/// "<from> to <to>: <winner>" lines.
void write_winner_ranges(std::ostream& out, std::vector<WinnerRange> const& ranges);

/// printf-style %.6g.
std::string format_real(double v);

} // namespace wyner
