#pragma once

// Command-line front end: parse() validates argv into an Invocation,
// execute() runs it and returns the process exit code.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "padic_roots.hpp"
#include "report.hpp"
#include "search.hpp"
#include "verifier.hpp"

namespace cforge::cli {

enum class Command { compute, verify, identities, search };

struct Invocation {
    Command command = Command::verify;
    std::string target;                  // compute / search object
    std::vector<std::uint64_t> numbers;  // positional arguments of compute
    std::vector<std::uint64_t> primes;
    std::vector<std::string> checks;
    Format format = Format::text;
    unsigned jobs = default_jobs();
    std::string out_path;
    bool force = false;
    bool inject_fault = false;
    bool negative_controls = false;
    unsigned mod_exponent = 0;
    std::uint64_t max = 0;
    std::size_t chu_max = 30;
    bool verbose = false;
    KummerWindow window = KummerWindow::definition;
    std::size_t max_index = 0;
    // set when parsing stopped at --help
    std::optional<std::string> help;
};

inline constexpr std::uint64_t default_kummer_prime_cap = 199;

/// "A..B" (odd primes in the range), "A,B,C" or a single prime.
inline std::vector<std::uint64_t> parse_primes(const std::string& text) {
    auto number = [&](const std::string& s) -> std::uint64_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw error(errc::usage, "malformed prime specification '" + text + "'");
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw error(errc::usage, "malformed prime specification '" + text + "'");
        }
    };
    std::vector<std::uint64_t> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const std::uint64_t lo = number(text.substr(0, dots));
        const std::uint64_t hi = number(text.substr(dots + 2));
        if (lo > hi) throw error(errc::usage, "empty prime range '" + text + "'");
        if (hi > 1'000'000) throw error(errc::usage, "prime range bound exceeds 10^6");
        out = odd_primes_in(lo, hi);
        if (out.empty()) throw error(errc::usage, "no odd primes in range '" + text + "'");
        return out;
    }
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const std::uint64_t p = number(item);
        if (p < 3 || !is_prime(p)) throw error(errc::usage, std::to_string(p) + " is not an odd prime");
        out.push_back(p);
    }
    if (out.empty()) throw error(errc::usage, "no primes given");
    return out;
}

inline std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
    std::vector<std::string> ids;
    for (const std::string& r : raw) {
        std::stringstream ss(r);
        for (std::string id; std::getline(ss, id, ',');)
            if (!id.empty()) ids.push_back(id);
    }
    return ids;
}

inline Invocation parse(const std::vector<std::string>& argv) {
    Invocation inv;
    CLI::App app{"Exact Bernoulli, Stirling and harmonic-sum congruence verifier", "cforge"};
    app.require_subcommand(1);
    std::string primes_text = "7..101", format_text = "text", window_text = "definition";
    std::vector<std::string> check_ids;
    std::uint64_t n1 = 0, n2 = 0;

    auto* compute = app.add_subcommand("compute", "Print an exact object");
    compute->require_subcommand(1);
    auto* c_bern = compute->add_subcommand("bernoulli", "B_N as num/den");
    c_bern->add_option("N", n1, "index")->required();
    auto* c_harm = compute->add_subcommand("harmonic", "H_K = sum_{a<P} 1/a^K");
    c_harm->add_option("P", n1, "prime")->required();
    c_harm->add_option("K", n2, "exponent")->required();
    auto* c_pow = compute->add_subcommand("powersum", "S_K = sum_{a<P} a^K");
    c_pow->add_option("P", n1, "prime")->required();
    c_pow->add_option("K", n2, "exponent")->required();
    auto* c_stir = compute->add_subcommand("stirling", "row [P,s], s = 1..P");
    c_stir->add_option("P", n1, "prime")->required();
    c_stir->add_option("--mod", inv.mod_exponent, "print residues mod P^k")->check(CLI::Range(1u, 4u));
    auto* c_mhs = compute->add_subcommand("mhs", "multiple harmonic sums A*_k, k = 1..P-1");
    c_mhs->add_option("P", n1, "prime")->required();
    auto* c_roots = compute->add_subcommand("roots", "roots of X^(P-1) + (P-1)! mod P^3");
    c_roots->add_option("P", n1, "prime")->required();

    auto* verify = app.add_subcommand("verify", "Evaluate registry checks over a prime range");
    verify->add_option("--primes", primes_text, "A..B, A,B,C or A (default 7..101)");
    verify->add_option("--check", check_ids, "check ids, comma separated")->delimiter(',');
    verify->add_option("--format", format_text, "json, csv or text");
    verify->add_option("--jobs", inv.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
    verify->add_option("--out", inv.out_path, "write the report to a file");
    verify->add_flag("--force", inv.force, "evaluate checks below their least applicable prime");
    verify->add_flag("--negative-controls", inv.negative_controls,
                     "force the p >= 7 checks at p = 5 and require that they fail");
    verify->add_flag("--inject-fault", inv.inject_fault, "append a deliberately false check")->group("");

    auto* ident = app.add_subcommand("identities", "Exact identity suite with residuals");
    ident->add_option("--max", inv.max, "largest n (default 60)");
    ident->add_option("--chu-max", inv.chu_max, "bound for m, n, r in Chu-Vandermonde (default 30)");
    ident->add_flag("--verbose", inv.verbose, "print every residual");

    auto* search = app.add_subcommand("search", "Wilson, Kummer and irregular scans");
    search->require_subcommand(1);
    auto* s_wil = search->add_subcommand("wilson", "primes p <= N with (p-1)! = -1 mod p^2");
    s_wil->add_option("--max", inv.max, "scan limit")->required();
    s_wil->add_option("--jobs", inv.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
    auto* s_kum = search->add_subcommand("kummer", "indices 2n with Bd_{2(p-1)-2n} = Bd_{p-1-2n} mod p^2");
    s_kum->add_option("--primes", primes_text, "prime range")->required();
    s_kum->add_option("--window", window_text, "definition ([2, p-3]) or theorem ([4, p-7])");
    s_kum->add_option("--max-index", inv.max_index, "raise the Bernoulli index cap (lifts p <= 199)");
    auto* s_irr = search->add_subcommand("irregular", "even k <= p-3 with p | numerator(B_k)");
    s_irr->add_option("--primes", primes_text, "prime range")->required();
    auto* s_rmk = search->add_subcommand("remark1", "irregular indices are never Kummer indices");
    s_rmk->add_option("--primes", primes_text, "prime range")->required();
    for (auto* s : {s_wil, s_kum, s_irr, s_rmk}) s->add_option("--format", format_text, "json, csv or text");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        inv.help = app.help();
        return inv;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        throw error(errc::usage, msg.empty() ? "invalid arguments" : msg);
    }

    inv.format = parse_format(format_text);
    if (*compute) {
        inv.command = Command::compute;
        for (auto* s : compute->get_subcommands()) inv.target = s->get_name();
        inv.numbers = {n1, n2};
        if (inv.target != "bernoulli" && (n1 < 3 || !is_prime(n1)))
            throw error(errc::usage, std::to_string(n1) + " is not an odd prime");
    } else if (*verify) {
        inv.command = Command::verify;
        inv.primes = parse_primes(primes_text);
        inv.checks = split_ids(check_ids);
        const std::size_t cap = bernoulli_table().cap();
        for (std::uint64_t p : inv.primes)
            if (bernoulli_index_needed(p) > cap + 3)
                throw error(errc::usage, "prime " + std::to_string(p) +
                                             " needs Bernoulli numbers beyond the cap; raise CONGRUENCE_FORGE_MAX_INDEX");
        for (const std::string& id : inv.checks)
            if (!find_check(id) && !(inv.inject_fault && id == "FAULT"))
                throw error(errc::usage, "unknown check id '" + id + "'");
    } else if (*ident) {
        inv.command = Command::identities;
        if (inv.max == 0) inv.max = 60;
    } else {
        inv.command = Command::search;
        for (auto* s : search->get_subcommands()) inv.target = s->get_name();
        if (inv.target == "wilson") {
            if (inv.max < 3) throw error(errc::usage, "--max must be at least 3");
        } else {
            inv.primes = parse_primes(primes_text);
            for (std::uint64_t p : inv.primes)
                if (p < 5) throw error(errc::usage, "scans need primes p >= 5");
        }
        if (inv.target == "kummer") {
            if (window_text == "definition") inv.window = KummerWindow::definition;
            else if (window_text == "theorem") inv.window = KummerWindow::theorem;
            else throw error(errc::usage, "--window must be definition or theorem");
            for (std::uint64_t p : inv.primes) {
                if (inv.max_index == 0 && p > default_kummer_prime_cap)
                    throw error(errc::usage, "Kummer scan is capped at p <= 199; pass --max-index to lift it");
                if (inv.max_index != 0 && 2 * p - 2 > inv.max_index)
                    throw error(errc::usage, "--max-index must be at least 2p-2 = " + std::to_string(2 * p - 2));
            }
        }
    }
    return inv;
}

inline Invocation parse(int argc, const char* const* argv) {
    return parse(std::vector<std::string>(argv + 1, argv + argc));
}

namespace detail {

inline int run_compute(const Invocation& inv, std::ostream& out) {
    const std::uint64_t a = inv.numbers[0], k = inv.numbers[1];
    if (inv.target == "bernoulli") {
        out << to_string(bernoulli(a)) << '\n';
    } else if (inv.target == "harmonic") {
        if (k == 0) throw error(errc::usage, "harmonic sums need K >= 1");
        out << to_string(harmonic_power_sum(a, k)) << '\n';
    } else if (inv.target == "powersum") {
        out << to_string(power_sum(a, k)) << '\n';
    } else if (inv.target == "stirling") {
        const StirlingRow row = stirling_row_exact(a);
        for (std::size_t s = 1; s <= a; ++s) {
            out << '[' << a << ',' << s << "] = ";
            if (inv.mod_exponent) out << mod_reduce(row.cycles(s), PrimeModulus(a, inv.mod_exponent)).to_string();
            else out << to_string(row.cycles(s));
            out << '\n';
        }
    } else if (inv.target == "mhs") {
        const MhsRow row = mhs_row_newton(a);
        for (std::size_t j = 1; j < a; ++j) out << "A*_" << j << " = " << to_string(row.at(j)) << '\n';
    } else if (inv.target == "roots") {
        const RootSet rs = lift_roots(a);
        out << "i  root mod " << a << "^3  t0  t1\n";
        for (std::size_t i = 0; i + 1 < a; ++i)
            out << i + 1 << "  " << rs.roots[i].value << "  " << rs.t0[i].value << "  " << rs.t1[i].value << '\n';
    }
    return 0;
}

inline int write_report(const Invocation& inv, const std::vector<CheckOutcome>& outcomes, std::ostream& out) {
    if (inv.out_path.empty()) {
        emit(out, outcomes, inv.format);
    } else {
        std::ofstream f(inv.out_path);
        if (!f) throw error(errc::io_failure, "cannot open '" + inv.out_path + "' for writing");
        emit(f, outcomes, inv.format);
        if (!f) throw error(errc::io_failure, "failed writing '" + inv.out_path + "'");
    }
    return any_fail(outcomes) ? 1 : 0;
}

inline int run_verify(const Invocation& inv, std::ostream& out) {
    if (inv.negative_controls) {
        const std::vector<CheckOutcome> audit = negative_control_audit();
        write_report(inv, audit, out);
        const bool all_fail = std::all_of(audit.begin(), audit.end(),
                                          [](const CheckOutcome& o) { return o.status == CheckStatus::fail; });
        return all_fail ? 0 : 1;
    }
    const RunOptions opts{inv.jobs, inv.force};
    const std::vector<CheckOutcome> outcomes =
        inv.inject_fault ? run_checks(registry_with_fault(), inv.primes, inv.checks, opts)
                         : run_checks(inv.primes, inv.checks, opts);
    return write_report(inv, outcomes, out);
}

inline int run_identities(const Invocation& inv, std::ostream& out) {
    long nonzero = 0;
    auto suite = [&](const char* name, std::size_t lo, std::size_t hi, auto residual) {
        long bad = 0;
        for (std::size_t n = lo; n <= hi; ++n) {
            const Rational r = residual(n);
            if (r != 0) ++bad;
            if (inv.verbose || r != 0) out << name << ' ' << n << ' ' << to_string(r) << '\n';
        }
        out << name << " n=" << lo << ".." << hi << ": " << (hi >= lo ? hi - lo + 1 : 0) << " checked, " << bad
            << " nonzero\n";
        nonzero += bad;
    };
    const std::size_t m = inv.max;
    suite("euler", 1, m, euler_residual);
    suite("miki", 3, m, miki_residual);
    suite("dunne-schubert", 2, m, dunne_schubert_residual);
    suite("spivey", 1, m, spivey_residual);
    long chu_bad = 0;
    for (unsigned long a = 0; a <= inv.chu_max; ++a)
        for (unsigned long b = 0; b <= inv.chu_max; ++b)
            for (unsigned long r = 0; r <= inv.chu_max; ++r) {
                const Rational res = chu_residual(a, b, r);
                if (res != 0) {
                    ++chu_bad;
                    out << "chu " << a << ' ' << b << ' ' << r << ' ' << to_string(res) << '\n';
                }
            }
    out << "chu m,n,r<=" << inv.chu_max << ": " << chu_bad << " nonzero\n";
    nonzero += chu_bad;
    out << "control: dunne-schubert n=1 residual " << to_string(dunne_schubert_residual_unchecked(1)) << '\n';
    return nonzero ? 1 : 0;
}

inline int run_search(const Invocation& inv, std::ostream& out) {
    if (inv.target == "remark1") {
        const std::vector<CheckOutcome> outcomes = remark1_audit(inv.primes);
        emit(out, outcomes, inv.format);
        return any_fail(outcomes) ? 1 : 0;
    }
    std::vector<SearchRecord> records;
    if (inv.target == "wilson") {
        records = wilson_scan(inv.max, inv.jobs);
    } else if (inv.target == "kummer") {
        if (inv.max_index) bernoulli_table().set_cap(std::max(inv.max_index, bernoulli_table().cap()));
        for (std::uint64_t p : inv.primes) {
            auto r = kummer_records(p, inv.window);
            records.insert(records.end(), r.begin(), r.end());
        }
    } else {
        for (std::uint64_t p : inv.primes) {
            auto r = irregular_records(p);
            records.insert(records.end(), r.begin(), r.end());
        }
    }
    emit(out, records, inv.format);
    return 0;
}

}  // namespace detail

inline int execute(const Invocation& inv, std::ostream& out, std::ostream& err) {
    if (inv.help) {
        out << *inv.help;
        return 0;
    }
    try {
        switch (inv.command) {
        case Command::compute: return detail::run_compute(inv, out);
        case Command::verify: return detail::run_verify(inv, out);
        case Command::identities: return detail::run_identities(inv, out);
        case Command::search: return detail::run_search(inv, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

// parse + execute with usage errors mapped to exit code 2
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Invocation inv;
    try {
        inv = parse(argc, argv);
    } catch (const std::exception& e) {
        err << "usage error: " << e.what() << "\nrun 'cforge --help' for usage\n";
        return 2;
    }
    return execute(inv, out, err);
}

}  // namespace cforge::cli
