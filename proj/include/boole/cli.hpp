#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boole/identity.hpp"
#include "boole/matrix.hpp"
#include "boole/rational.hpp"
#include "boole/report_io.hpp"
#include "boole/sampling.hpp"
#include "boole/vandermonde.hpp"

namespace boole::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kUsageError = 2,
};

enum class Command { verify, solve, det, stirling, bench };
enum class Format { json, csv, text };

struct RunConfig {
    Command command = Command::verify;
    Rational a = 0;
    Rational b = 1;
    unsigned n = 2;
    unsigned n_max = 10;
    unsigned m_max = 10;
    std::uint64_t seed = 0;
    unsigned trials = 0;
    std::optional<std::string> output_path;
    Format format = Format::text;
    /// Test hook: perturb the closed-form side of every m == n case.
    bool corrupt_expected = false;
};

namespace detail {

inline Json rational_array(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

// Moves every case of `from` into `into` as an auxiliary check of `kind`.
inline void append_as_checks(VerificationReport& into, const VerificationReport& from, const std::string& kind) {
    for (const auto& r : from.results()) {
        into.add_check({kind, r.input.n, r.input.m, r.input.a, r.input.b, r.lhs, r.rhs, r.pass});
    }
    for (const auto& c : from.checks()) into.add_check(c);
    for (const auto& note : from.notes()) into.add_note(note);
}

template <typename F>
std::int64_t median_ns(F&& f, int repetitions = 5) {
    std::vector<std::int64_t> samples;
    samples.reserve(repetitions);
    for (int i = 0; i < repetitions; ++i) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    }
    std::nth_element(samples.begin(), samples.begin() + repetitions / 2, samples.end());
    return samples[repetitions / 2];
}

}  // namespace detail

/**
 * Theorem sweep over the configured (a, b) followed by `trials` seeded
 * random pairs. Cases are the theorem comparisons only. Checks carry the
 * system substitution rows, the Cramer/solver comparisons at n = n_max for
 * every pair with b != 0, and the Stirling and finite-difference grid for
 * m, n <= n_max.
 */
inline VerificationReport run_verify_sweep(const RunConfig& cfg) {
    ExpectedValueFn expected = expected_value;
    if (cfg.corrupt_expected) {
        expected = [](const Rational& a, const Rational& b, unsigned n, unsigned m) {
            Rational v = expected_value(a, b, n, m);
            return m == n ? v + Rational(1) : v;
        };
    }

    std::vector<std::pair<Rational, Rational>> pairs{{cfg.a, cfg.b}};
    RationalSampler sampler(cfg.seed);
    for (unsigned t = 0; t < cfg.trials; ++t) pairs.push_back(sampler.next_pair());

    VerificationReport report;
    for (const auto& [a, b] : pairs) report.append(verify_theorem(a, b, cfg.n_max, expected));
    for (const auto& [a, b] : pairs) {
        if (b.is_zero()) continue;
        detail::append_as_checks(report, verify_cramer(a, b, cfg.n_max), "cramer_ratio");
    }
    detail::append_as_checks(report, verify_stirling(cfg.n_max, cfg.n_max), "stirling");
    return report;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const VerificationReport report = run_verify_sweep(cfg);
    const ReportParams params{cfg.a, cfg.b, cfg.n_max, cfg.seed};
    switch (cfg.format) {
        case Format::json: out << report_to_json("verify", params, report).dump(2) << '\n'; break;
        case Format::csv: out << report_to_csv(report); break;
        case Format::text: out << report_to_text("verify", params, report); break;
    }
    return report.passed() ? kSuccess : kCheckFailed;
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const LinearSystem sys = build_system({cfg.a, cfg.b, cfg.n});
    std::vector<Rational> solved;
    try {
        solved = solve_exact(sys);
    } catch (const SingularMatrixError& e) {
        err << "error: " << e.what() << " (b = " << cfg.b << " makes the nodes coincide)\n";
        return kCheckFailed;
    }
    std::vector<Rational> closed;
    for (auto& c : closed_form_solution(cfg.n)) closed.emplace_back(std::move(c));
    const bool agree = solved == closed;

    switch (cfg.format) {
        case Format::json: {
            Json doc;
            doc["command"] = "solve";
            doc["params"] = {{"a", to_string(cfg.a)}, {"b", to_string(cfg.b)}, {"n", cfg.n}};
            doc["solver"] = detail::rational_array(solved);
            doc["closed_form"] = detail::rational_array(closed);
            doc["agree"] = agree;
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "k,solver,closed_form,agree\n";
            for (std::size_t k = 0; k < solved.size(); ++k) {
                out << k << ',' << to_string(solved[k]) << ',' << to_string(closed[k]) << ','
                    << (solved[k] == closed[k] ? "true" : "false") << '\n';
            }
            break;
        case Format::text:
            out << "system a=" << cfg.a << " b=" << cfg.b << " n=" << cfg.n << '\n' << format_matrix(sys.matrix);
            out << "rhs:";
            for (const auto& v : sys.rhs) out << ' ' << to_string(v);
            out << "\nsolver:     ";
            for (const auto& v : solved) out << ' ' << v;
            out << "\nclosed form:";
            for (const auto& v : closed) out << ' ' << v;
            out << '\n' << (agree ? "agree" : "MISMATCH") << '\n';
            break;
    }
    if (!agree) err << "error: solver and closed-form solution disagree\n";
    return agree ? kSuccess : kCheckFailed;
}

inline int cmd_det(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const ArithmeticNodes nodes{cfg.a, cfg.b, cfg.n};
    const LinearSystem sys = build_system(nodes);
    const Rational closed = det_vandermonde_closed(cfg.n, cfg.b);
    const Rational pairwise = det_vandermonde_general(nodes.values());
    const Rational bareiss = det_bareiss(sys.matrix);
    bool agree = closed == pairwise && closed == bareiss;

    struct Substituted {
        unsigned k;
        Rational closed, bareiss;
        std::optional<Rational> ratio, expected;
        bool pass;
    };
    std::vector<Substituted> rows;
    const std::vector<BigInteger> signed_binomials = closed_form_solution(cfg.n);
    for (unsigned k = 0; k <= cfg.n; ++k) {
        Substituted row{k, det_vk_closed(cfg.n, k, cfg.b), det_bareiss(sys.matrix.with_column(k, sys.rhs)), {}, {}, false};
        row.pass = row.closed == row.bareiss;
        if (!closed.is_zero()) {
            row.ratio = row.closed / closed;
            row.expected = Rational(signed_binomials[k]);
            row.pass = row.pass && *row.ratio == *row.expected;
        }
        agree = agree && row.pass;
        rows.push_back(std::move(row));
    }

    switch (cfg.format) {
        case Format::json: {
            Json doc;
            doc["command"] = "det";
            doc["params"] = {{"a", to_string(cfg.a)}, {"b", to_string(cfg.b)}, {"n", cfg.n}};
            doc["closed"] = to_string(closed);
            doc["pairwise"] = to_string(pairwise);
            doc["bareiss"] = to_string(bareiss);
            Json sub = Json::array();
            for (const auto& r : rows) {
                sub.push_back({{"k", r.k},
                               {"closed", to_string(r.closed)},
                               {"bareiss", to_string(r.bareiss)},
                               {"ratio", r.ratio ? Json(to_string(*r.ratio)) : Json(nullptr)},
                               {"expected", r.expected ? Json(to_string(*r.expected)) : Json(nullptr)},
                               {"pass", r.pass}});
            }
            doc["substituted"] = std::move(sub);
            doc["agree"] = agree;
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "k,closed,bareiss,ratio,expected,pass\n";
            for (const auto& r : rows) {
                out << r.k << ',' << to_string(r.closed) << ',' << to_string(r.bareiss) << ','
                    << (r.ratio ? to_string(*r.ratio) : "") << ',' << (r.expected ? to_string(*r.expected) : "") << ','
                    << (r.pass ? "true" : "false") << '\n';
            }
            break;
        case Format::text:
            out << "det V  a=" << cfg.a << " b=" << cfg.b << " n=" << cfg.n << '\n';
            out << "  closed form:   " << closed << '\n';
            out << "  pairwise:      " << pairwise << '\n';
            out << "  fraction-free: " << bareiss << '\n';
            for (const auto& r : rows) {
                out << "  det V_" << r.k << ": closed " << r.closed << ", fraction-free " << r.bareiss;
                if (r.ratio) out << ", ratio " << *r.ratio << " (expected " << *r.expected << ')';
                out << (r.pass ? "" : "  FAIL") << '\n';
            }
            out << (agree ? "agree" : "MISMATCH") << '\n';
            break;
    }
    return agree ? kSuccess : kCheckFailed;
}

inline int cmd_stirling(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const StirlingTable table(cfg.m_max, cfg.n_max);
    struct Row {
        unsigned m, n;
        BigInteger s, sum, scaled, diff;
        bool verified;
    };
    std::vector<Row> rows;
    bool all = true;
    for (unsigned m = 0; m <= cfg.m_max; ++m) {
        for (unsigned n = 0; n <= cfg.n_max; ++n) {
            Row r{m, n, table(m, n), boole_sum(n, m), factorial(n) * table(m, n), forward_difference_at_zero(m, n), false};
            r.verified = r.sum == r.scaled && r.sum == r.diff;
            all = all && r.verified;
            rows.push_back(std::move(r));
        }
    }

    switch (cfg.format) {
        case Format::json: {
            Json doc;
            doc["command"] = "stirling";
            doc["params"] = {{"m_max", cfg.m_max}, {"n_max", cfg.n_max}};
            Json arr = Json::array();
            std::size_t failures = 0;
            for (const auto& r : rows) {
                if (!r.verified) ++failures;
                arr.push_back({{"m", r.m},
                               {"n", r.n},
                               {"stirling", r.s.str()},
                               {"boole_sum", r.sum.str()},
                               {"factorial_times_stirling", r.scaled.str()},
                               {"forward_difference", r.diff.str()},
                               {"verified", r.verified}});
            }
            doc["rows"] = std::move(arr);
            doc["summary"] = {{"total", rows.size()}, {"failures", failures}};
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "m,n,stirling,boole_sum,factorial_times_stirling,forward_difference,verified\n";
            for (const auto& r : rows) {
                out << r.m << ',' << r.n << ',' << r.s << ',' << r.sum << ',' << r.scaled << ',' << r.diff << ','
                    << (r.verified ? "true" : "false") << '\n';
            }
            break;
        case Format::text:
            out << "   m   n  S(m,n)  boole_sum = n!*S(m,n)\n";
            for (const auto& r : rows) {
                out << "  " << r.m << ' ' << r.n << "  S=" << r.s << "  " << r.sum << (r.verified ? " = " : " != ")
                    << r.scaled << (r.verified ? "" : "  FAIL") << '\n';
            }
            out << (all ? "all rows verified" : "MISMATCH") << '\n';
            break;
    }
    return all ? kSuccess : kCheckFailed;
}

/// One ladder point of the determinant benchmark.
struct BenchRow {
    unsigned n = 0;
    std::int64_t closed_ns = 0;
    std::int64_t bareiss_ns = 0;
    bool agree = false;
};

/**
 * For n = 1..n_max on one seeded (a, b) with b != 0: compares the closed
 * determinant with fraction-free elimination, then times each (median of
 * five runs). Timings run sequentially.
 */
inline std::vector<BenchRow> run_bench(unsigned n_max, std::uint64_t seed) {
    RationalSampler sampler(seed);
    const auto [a, b] = sampler.next_pair_nonzero_b();
    std::vector<BenchRow> rows;
    for (unsigned n = 1; n <= n_max; ++n) {
        const ExactMatrix matrix = build_system({a, b, n}).matrix;
        BenchRow row;
        row.n = n;
        row.agree = det_vandermonde_closed(n, b) == det_bareiss(matrix);
        row.closed_ns = detail::median_ns([&] { (void)det_vandermonde_closed(n, b); });
        row.bareiss_ns = detail::median_ns([&] { (void)det_bareiss(matrix); });
        rows.push_back(row);
    }
    return rows;
}

inline int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const std::vector<BenchRow> rows = run_bench(cfg.n_max, cfg.seed);
    bool all = true;
    out << "n,closed_ns,bareiss_ns,agree\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.closed_ns << ',' << r.bareiss_ns << ',' << (r.agree ? "true" : "false") << '\n';
        all = all && r.agree;
    }
    return all ? kSuccess : kCheckFailed;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    switch (cfg.command) {
        case Command::verify: return cmd_verify(cfg, out, err);
        case Command::solve: return cmd_solve(cfg, out, err);
        case Command::det: return cmd_det(cfg, out, err);
        case Command::stirling: return cmd_stirling(cfg, out, err);
        case Command::bench: return cmd_bench(cfg, out, err);
    }
    return kUsageError;
}

/**
 * Parses `argv` and runs the selected subcommand. Each subcommand accepts
 * only its own flags; anything else is a usage error (exit 2, usage on
 * `err`). Documents go to `--output` when given, otherwise to `out`.
 */
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of generalized Boole alternating-sum identities", "boole_cli"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string a_text = "0";
    std::string b_text = "1";
    std::string output;
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};

    auto add_ab = [&](CLI::App* sub) {
        sub->add_option("--a", a_text, "node offset a (P/Q or integer)")->capture_default_str();
        sub->add_option("--b", b_text, "node spacing b (P/Q or integer)")->capture_default_str();
    };
    auto add_common = [&](CLI::App* sub, bool with_format) {
        if (with_format) {
            sub->add_option("--format", cfg.format, "output format")
                ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        }
        sub->add_option("--output", output, "write the document to PATH instead of stdout");
    };

    auto* verify = app.add_subcommand("verify", "verify the generalized identity over a sweep");
    add_ab(verify);
    verify->add_option("--n-max", cfg.n_max, "largest n in the sweep")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "seed for random (a, b) pairs")->capture_default_str();
    verify->add_option("--trials", cfg.trials, "number of random (a, b) pairs")->capture_default_str();
    verify->add_flag("--corrupt-expected", cfg.corrupt_expected)->group("");
    add_common(verify, true);

    auto* solve = app.add_subcommand("solve", "solve the system for (a, b, n) two ways");
    add_ab(solve);
    solve->add_option("--n", cfg.n, "order n (system has n+1 unknowns)")->capture_default_str();
    add_common(solve, true);

    auto* det = app.add_subcommand("det", "compare closed-form and generic determinants");
    add_ab(det);
    det->add_option("--n", cfg.n, "order n")->capture_default_str();
    add_common(det, true);

    auto* stirling = app.add_subcommand("stirling", "tabulate S(m,n) against the alternating sum");
    stirling->add_option("--m-max", cfg.m_max, "largest m")->capture_default_str();
    stirling->add_option("--n-max", cfg.n_max, "largest n")->capture_default_str();
    add_common(stirling, true);

    auto* bench = app.add_subcommand("bench", "time closed-form vs fraction-free determinants (CSV)");
    bench->add_option("--n-max", cfg.n_max, "top of the ladder 1..n_max")->capture_default_str()->check(
        CLI::Range(1u, 100000u));
    bench->add_option("--seed", cfg.seed, "seed for (a, b)")->capture_default_str();
    add_common(bench, false);

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(args);
        cfg.a = parse_rational(a_text);
        cfg.b = parse_rational(b_text);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    if (*verify) cfg.command = Command::verify;
    else if (*solve) cfg.command = Command::solve;
    else if (*det) cfg.command = Command::det;
    else if (*stirling) cfg.command = Command::stirling;
    else cfg.command = Command::bench;
    if (!output.empty()) cfg.output_path = output;

    if (!cfg.output_path) return dispatch(cfg, out, err);
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << *cfg.output_path << "' for writing\n";
        return kUsageError;
    }
    return dispatch(cfg, file, err);
}

}  // namespace boole::cli
