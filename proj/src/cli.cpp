#include "wyner/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "wyner/beamforming.hpp"
#include "wyner/error.hpp"
#include "wyner/monte_carlo.hpp"
#include "wyner/oracle.hpp"
#include "wyner/report.hpp"
#include "wyner/schedule.hpp"
#include "wyner/verification.hpp"

namespace wyner::cli {
namespace {

struct SweepArgs {
    int k = 0;
    std::vector<std::string> fractions;
    double p_start = 0.0;
    double p_end = 1.0;
    double p_step = 0.01;
    std::int64_t trials = 6000;
    std::uint64_t seed = 0;
    bool deactivate_last = true;
    bool crn = false;
    std::string out_path;
    bool quiet = false;
};

struct VerifyArgs {
    int k_min = 3;
    int k_max = 5;
    std::string mode = "exhaustive";
    std::int64_t trials = 10000;
    std::uint64_t seed = 0;
    int random_assignments = 20;
    std::size_t examples = 10;
};

struct TraceArgs {
    std::optional<std::string> realization;
    std::optional<int> k;
    std::optional<double> p;
    std::uint64_t seed = 0;
    std::string fraction;
    bool deactivate_last = false;
};

struct TableArgs {
    std::vector<std::string> inputs;
    std::string out_path;
};

std::string complex_str(Complex z)
{
    return "(" + format_real(z.real()) + "," + format_real(z.imag()) + ")";
}

std::string index_set(std::vector<int> const& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + "}";
}

int cmd_sweep(SweepArgs const& a, std::ostream& out, std::ostream& err)
{
    SweepConfig cfg;
    cfg.p_start = a.p_start;
    cfg.p_end = a.p_end;
    cfg.p_step = a.p_step;
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    cfg.deactivate_last = a.deactivate_last;
    cfg.common_random_numbers = a.crn;
    for (auto const& text : a.fractions) {
        Fraction f = parse_fraction(text);
        auto built = build_assignment_diagnosed(a.k, f);
        for (auto const& w : built.overlaps) {
            err << "warning: " << assignment_label(a.k, f) << ": " << w << '\n';
        }
        cfg.assignments.push_back({a.k, f});
    }

    SweepProgress progress;
    if (!a.quiet) {
        progress = [&err](std::size_t done, std::size_t total) {
            err << "\rsweep " << done << "/" << total << std::flush;
            if (done == total) {
                err << '\n';
            }
        };
    }
    auto const rows = sweep(cfg, progress);

    std::ofstream csv(a.out_path, std::ios::binary);
    if (!csv) {
        throw IoError("cannot open '" + a.out_path + "' for writing");
    }
    write_sweep_csv(csv, rows);
    csv.close();
    if (!csv) {
        throw IoError("failed writing '" + a.out_path + "'");
    }

    std::string const manifest_path = a.out_path + ".manifest";
    std::ofstream manifest(manifest_path, std::ios::binary);
    if (!manifest) {
        throw IoError("cannot open '" + manifest_path + "' for writing");
    }
    std::string fs;
    std::string flags;
    for (auto const& f : cfg.assignments) {
        fs += (fs.empty() ? "" : " ") + f.f.str();
        flags += " --f " + f.f.str();
    }
    manifest << "subcommand=sweep\n"
             << "version=" << kVersion << '\n'
             << "k=" << a.k << '\n'
             << "f=" << fs << '\n'
             << "p_start=" << format_real(a.p_start) << '\n'
             << "p_end=" << format_real(a.p_end) << '\n'
             << "p_step=" << format_real(a.p_step) << '\n'
             << "trials=" << a.trials << '\n'
             << "seed=" << a.seed << '\n'
             << "deactivate_last=" << (a.deactivate_last ? "true" : "false") << '\n'
             << "common_random_numbers=" << (a.crn ? "true" : "false") << '\n'
             << "output=" << a.out_path << '\n'
             << "rows=" << rows.size() << '\n'
             << "command=wynerzf sweep --k " << a.k << flags << " --p-start "
             << format_real(a.p_start) << " --p-end " << format_real(a.p_end) << " --p-step "
             << format_real(a.p_step) << " --trials " << a.trials << " --seed " << a.seed
             << (a.deactivate_last ? " --deactivate-last" : " --no-deactivate-last")
             << (a.crn ? " --crn" : "") << " --out " << a.out_path << '\n';
    if (!manifest) {
        throw IoError("failed writing '" + manifest_path + "'");
    }
    out << "wrote " << rows.size() << " rows to " << a.out_path << '\n';
    return kSuccess;
}

void print_report(std::ostream& out, std::string const& label, VerifyReport const& r)
{
    out << label << " instances=" << r.instances << " mismatches=" << r.mismatches << '\n';
}

int cmd_verify(VerifyArgs const& a, std::ostream& out)
{
    if (a.k_max > kOracleMaxK) {
        throw ParameterError("k-max " + std::to_string(a.k_max) + " refused: the oracle limit is " +
                             std::to_string(kOracleMaxK));
    }
    if (a.k_min < 3 || a.k_min > a.k_max) {
        throw ParameterError("need 3 <= k-min <= k-max");
    }
    VerifyReport total;
    if (a.mode == "exhaustive") {
        for (int k = a.k_min; k <= a.k_max; ++k) {
            auto family = verification_family(k, a.random_assignments, a.seed);
            auto const rep = verify_exhaustive(k, family, a.examples);
            print_report(out,
                         "k=" + std::to_string(k) + " patterns=" +
                             std::to_string(std::int64_t{1} << (2 * k - 1)) +
                             " assignments=" + std::to_string(family.size()),
                         rep);
            merge_into(total, rep, a.examples);
        }
    } else {
        total = verify_random(a.k_min, a.k_max, a.trials, a.seed, a.examples);
    }
    print_report(out, "total", total);
    for (auto const& m : total.examples) {
        out << "counterexample: " << format_mismatch(m);
    }
    return total.mismatches == 0 ? kSuccess : kMismatch;
}

int cmd_trace(TraceArgs const& a, std::ostream& out)
{
    NetworkRealization r = [&] {
        if (a.realization) {
            auto parsed = parse_realization(*a.realization);
            if (a.k && *a.k != parsed.k()) {
                throw ParameterError("--k " + std::to_string(*a.k) +
                                     " disagrees with realization K=" + std::to_string(parsed.k()));
            }
            return parsed;
        }
        if (!a.k || !a.p) {
            throw ParameterError("trace needs a realization string or --k with --p");
        }
        return sample_realization(*a.k, *a.p, a.seed);
    }();
    Fraction const f = parse_fraction(a.fraction);
    MessageAssignment assignment = build_assignment(r.k(), f);
    if (a.deactivate_last) {
        assignment = deactivate_last(assignment);
        r = deactivate_last(r);
    }
    NetworkRealization const rc = attach_generic_coefficients(r, a.seed);
    Schedule const s = schedule_network(rc, assignment);
    BeamformingPlan const plan = build_transmit_signals(s, rc);
    ZfReport const zf = verify_zero_forcing(plan, s, rc);

    out << "realization " << format_realization(r) << '\n';
    out << "assignment " << assignment_label(r.k(), f)
        << (a.deactivate_last ? " (last transmitter deactivated)" : "") << '\n';
    out << format_assignment(assignment);

    for (auto const& c : partition_into_clusters(r)) {
        out << "cluster [" << c.start << "," << c.end << "]\n";
        out << "  decisions";
        bool any = false;
        for (auto [i, j] : s.decisions()) {
            if (c.contains(i)) {
                out << " (" << i << "," << j << ")";
                any = true;
            }
        }
        out << (any ? "" : " none") << '\n';
        std::vector<int> delivered;
        for (int i : s.delivered()) {
            if (c.contains(i)) {
                delivered.push_back(i);
            }
        }
        out << "  delivered " << index_set(delivered) << '\n';
        for (int i = c.start; i <= c.end; ++i) {
            auto it = std::find_if(zf.active.begin(), zf.active.end(),
                                   [i](auto const& res) { return res.receiver == i; });
            if (it == zf.active.end()) {
                out << "  receiver " << i << ": inactive\n";
            } else {
                out << "  receiver " << i << ": desired " << format_real(it->desired)
                    << " residual " << format_real(it->worst_leak) << '\n';
            }
        }
    }

    out << "transmit signals\n";
    for (int t = 1; t <= r.k(); ++t) {
        out << "  transmitter " << t << ":";
        if (plan.carried(t).empty()) {
            out << " silent";
        }
        for (auto const& [m, w] : plan.carried(t)) {
            out << " W_" << m << "=" << complex_str(w);
        }
        out << '\n';
    }
    if (zf.active.empty()) {
        out << "no active receivers\n";
    }
    out << "dof " << dof(s) << " of " << r.k() << '\n';
    out << "zero-forcing " << (zf.pass ? "PASS" : "FAIL") << '\n';
    for (auto const& fl : zf.failures) {
        out << "  receiver " << fl.receiver << ": " << fl.reason << " ("
            << format_real(fl.magnitude) << ")\n";
    }
    return zf.pass ? kSuccess : kMismatch;
}

int cmd_table(TableArgs const& a, std::ostream& out)
{
    std::vector<SweepRow> rows;
    for (auto const& path : a.inputs) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw IoError("cannot open '" + path + "'");
        }
        auto part = read_sweep_csv(in, path);
        rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
    }
    auto const table = best_assignment_table(rows);
    auto write = [&](std::ostream& o) {
        write_table_csv(o, table);
        o << '\n';
        write_winner_ranges(o, winner_ranges(table));
    };
    if (a.out_path.empty()) {
        write(out);
    } else {
        std::ofstream file(a.out_path, std::ios::binary);
        if (!file) {
            throw IoError("cannot open '" + a.out_path + "' for writing");
        }
        write(file);
        out << "wrote " << table.size() << " rows to " << a.out_path << '\n';
    }
    return kSuccess;
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Zero-forcing DoF scheduling and Monte Carlo sweeps for linear interference "
                 "networks with block erasures",
                 "wynerzf"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP worker count (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo puDoF over a p grid");
    sweep_cmd->add_option("--k", sw.k, "Network size K")->required()->check(CLI::Range(3, 1 << 20));
    sweep_cmd->add_option("--f", sw.fractions, "Helper fraction num/den (repeatable)")
        ->required();
    sweep_cmd->add_option("--p-start", sw.p_start)->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--p-end", sw.p_end)->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--p-step", sw.p_step)->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--trials", sw.trials)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", sw.seed);
    sweep_cmd->add_flag("--deactivate-last,!--no-deactivate-last", sw.deactivate_last,
                        "Switch off transmitter K (default on)");
    sweep_cmd->add_flag("--crn", sw.crn, "Share realizations between assignments");
    sweep_cmd->add_option("--out", sw.out_path, "CSV output path")->required();
    sweep_cmd->add_flag("--quiet", sw.quiet, "No progress output");

    VerifyArgs vf;
    auto* verify_cmd = app.add_subcommand("verify", "Greedy scheduler versus brute-force oracle");
    verify_cmd->add_option("--k-min", vf.k_min);
    verify_cmd->add_option("--k-max", vf.k_max);
    verify_cmd->add_option("--mode", vf.mode)
        ->check(CLI::IsMember({"exhaustive", "random"}));
    verify_cmd->add_option("--trials", vf.trials)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", vf.seed);
    verify_cmd->add_option("--random-assignments", vf.random_assignments)
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--examples", vf.examples, "Counterexamples to print");

    TraceArgs tr;
    auto* trace_cmd = app.add_subcommand("trace", "Step-by-step schedule for one realization");
    trace_cmd->add_option("realization", tr.realization, "K;direct-bits;cross-bits");
    trace_cmd->add_option("--k", tr.k);
    trace_cmd->add_option("--p", tr.p)->check(CLI::Range(0.0, 1.0));
    trace_cmd->add_option("--seed", tr.seed, "Sampling and coefficient seed");
    trace_cmd->add_option("--f", tr.fraction, "Helper fraction num/den")->required();
    trace_cmd->add_flag("--deactivate-last", tr.deactivate_last);

    TableArgs tb;
    auto* table_cmd = app.add_subcommand("table", "Best assignment per p from sweep CSVs");
    table_cmd->add_option("--in", tb.inputs, "Sweep CSV (repeatable)")->required();
    table_cmd->add_option("--out", tb.out_path, "Write here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::ParseError const& e) {
        std::ostringstream o;
        std::ostringstream e_;
        int const code = app.exit(e, o, e_);
        out << o.str();
        err << e_.str();
        return code == 0 ? kSuccess : kUsage;
    }

    if (threads > 0) {
        omp_set_num_threads(threads);
    }

    try {
        if (*sweep_cmd) {
            return cmd_sweep(sw, out, err);
        }
        if (*verify_cmd) {
            return cmd_verify(vf, out);
        }
        if (*trace_cmd) {
            return cmd_trace(tr, out);
        }
        return cmd_table(tb, out);
    } catch (ParameterError const& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (IoError const& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (ParseError const& e) {
        err << "parse error: " << e.what() << '\n';
        // Malformed command-line values are usage errors; malformed files are I/O errors.
        return *table_cmd ? kIo : kUsage;
    }
}

} // namespace wyner::cli
