#include "narayana/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "narayana/combinatorics.hpp"
#include "narayana/output.hpp"
#include "narayana/powers.hpp"
#include "narayana/squares.hpp"

namespace narayana::cli {

namespace {

unsigned resolve_workers(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("NARAYANA_WORKERS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

int emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return exit_ok;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return exit_io;
    }
    f << content;
    f.flush();
    if (!f.good()) {
        std::cerr << "error: write to " << out_path << " failed\n";
        return exit_io;
    }
    return exit_ok;
}

std::string pair_list(const std::vector<pell::Representative>& reps) {
    std::string s;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (i) s += ' ';
        s += "(" + reps[i].nprime.get_str() + "," + reps[i].mprime.get_str() + ")";
    }
    return s.empty() ? std::string("(none)") : s;
}

int cmd_squares(std::uint64_t b, std::uint64_t a_max, const std::string& format,
                const std::string& out, bool verify, bool do_crosscheck) {
    arith::SquarefreeDecomposition dec = arith::squarefree_decompose(b);
    if (dec.d == 1)
        std::cerr << "note: b = " << b << " = " << dec.s << "^2 has squarefree part d = 1; "
                  << "the solution set is a finite degenerate enumeration\n";

    std::vector<squares::SquareHit> hits = squares::squares_for_b(b, a_max);

    if (verify) {
        for (const auto& h : hits) {
            arith::Int value = combinatorics::narayana({h.a, h.b});
            if (h.root * h.root != value) {
                std::cerr << "verification FAILED at a=" << h.a << "\n";
                return exit_falsified;
            }
        }
        std::cerr << "verified " << hits.size() << " rows by exact square root\n";
    }

    squares::CrosscheckReport report;
    if (do_crosscheck) report = squares::crosscheck(b, a_max);

    std::string content;
    if (format == "json") {
        content = output::squares_json(hits);
    } else {
        content = output::squares_csv(hits);
        if (do_crosscheck) content += output::crosscheck_comment(report);
    }
    int rc = emit(content, out);
    if (rc != exit_ok) return rc;
    if (do_crosscheck && !report.equal) {
        std::cerr << "crosscheck DISCREPANCY: the two solvers disagree\n";
        return exit_falsified;
    }
    return exit_ok;
}

int cmd_pell(std::uint64_t d, std::uint64_t z, std::uint64_t n_limit, const std::string& out) {
    std::ostringstream os;
    if (d == 1) {
        os << "d=1 is degenerate: n^2 - m^2 = " << z << "^2 has finitely many solutions\n";
        os << "solutions with m even (all of them):\n";
        for (const auto& sol : pell::solve_degenerate(z))
            os << "(" << sol.n.get_str() << ", " << sol.m.get_str() << ")\n";
        return emit(os.str(), out);
    }

    arith::SquarefreeDecomposition dec = arith::squarefree_decompose(d);
    if (dec.s != 1) {
        std::cerr << "error: d = " << d << " = " << dec.d << "*" << dec.s
                  << "^2 is not squarefree; pass d = " << dec.d << "\n";
        return exit_usage;
    }

    pell::SurdExpansion se = pell::sqrt_cf(d);
    os << "sqrt(" << d << ") = [" << se.a0 << "; ";
    for (std::size_t i = 0; i < se.period.size(); ++i) {
        if (i) os << ",";
        os << se.period[i];
    }
    os << "]\n";

    pell::FundamentalSolution f = pell::fundamental_solution(d);
    os << "fundamental: (" << f.n1.get_str() << ", " << f.m1.get_str() << ")\n";

    pell::PellInstance inst{d, z};
    os << "representatives: " << pair_list(pell::representatives(inst)) << "\n";
    os << "deduplicated: " << pair_list(pell::representatives_deduped(inst)) << "\n";

    os << "solutions with m even, n <= " << n_limit << ":\n";
    for (const auto& sol : pell::solutions_even_m(inst, arith::Int(static_cast<unsigned long>(n_limit))))
        os << "(" << sol.n.get_str() << ", " << sol.m.get_str() << ")\n";
    return emit(os.str(), out);
}

int cmd_catalan(std::uint64_t n_max, const std::string& format, const std::string& out) {
    std::vector<powers::PowerCertificate> witnesses;
    bool all_pass = true;
    std::string csv = "n,rule,p,valuation,value\n";
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (n <= 5) {
            bool ok = powers::catalan_not_power(n);
            all_pass = all_pass && ok;
            csv += std::to_string(n) + ",direct,,," + combinatorics::catalan(n).get_str() + "\n";
        } else {
            try {
                powers::PowerCertificate w = powers::catalan_witness(n);
                witnesses.push_back(w);
                csv += std::to_string(n) + "," + w.rule + "," + std::to_string(w.p) + "," +
                       std::to_string(w.valuation) + ",\n";
            } catch (const falsified_step& e) {
                all_pass = false;
                csv += std::to_string(n) + ",FAILED,,,\n";
                std::cerr << "falsified at n=" << n << ": " << e.what() << "\n";
            }
        }
    }
    std::string content =
        format == "json" ? output::certificates_json(witnesses) : csv;
    int rc = emit(content, out);
    if (rc != exit_ok) return rc;
    return all_pass ? exit_ok : exit_falsified;
}

int cmd_scan(std::uint64_t a_max, const std::string& format, const std::string& out,
             unsigned workers) {
    powers::ScanReport report = powers::conjecture_scan(a_max, resolve_workers(workers));
    std::string content =
        format == "json" ? output::scan_json(report) : output::scan_csv(report);
    int rc = emit(content, out);
    if (rc != exit_ok) return rc;
    return report.higher_power_hits.empty() ? exit_ok : exit_falsified;
}

int cmd_certify(std::uint64_t a, std::uint64_t b, const std::string& format,
                const std::string& out) {
    std::vector<powers::PowerCertificate> certs;

    if (2 * b <= a) {
        if (auto c = powers::prop_bound(a, b)) certs.push_back(*c);
    }
    try {
        certs.push_back(powers::thm1_certify(a, b));
    } catch (const precondition_error&) {
        // hypothesis not met; not applicable
    }
    try {
        certs.push_back(powers::thm2_certify(a, b));
    } catch (const precondition_error&) {
        // hypothesis not met; not applicable
    } catch (const powers::bound_exception&) {
        std::cerr << "note: (" << a << ", " << b << ") is a known small-pair exception to the "
                  << "greatest-prime-factor bound; no certificate from that rule\n";
    }

    std::string content =
        format == "csv" ? output::certificates_csv(certs) : output::certificates_json(certs);
    int rc = emit(content, out);
    if (rc != exit_ok) return rc;
    if (certs.empty()) {
        std::cerr << "no certificate applies: (" << a << ", " << b
                  << ") lies in the uncertified gap region\n";
        return exit_no_certificate;
    }
    return exit_ok;
}

int cmd_figure1(std::uint64_t a_max, const std::string& format, const std::string& out,
                unsigned workers) {
    auto rows = squares::figure1_data(a_max, resolve_workers(workers));
    std::string content;
    if (format == "json")
        content = output::figure1_json(rows);
    else if (format == "svg")
        content = output::figure1_svg(rows, a_max);
    else
        content = output::figure1_csv(rows);
    return emit(content, out);
}

int cmd_figure2(std::uint64_t a_max, const std::string& format, const std::string& out) {
    auto rows = powers::figure2_data(a_max);
    std::string content;
    if (format == "json")
        content = output::figure2_json(rows);
    else if (format == "svg")
        content = output::figure2_svg(rows, a_max);
    else
        content = output::figure2_csv(rows);
    return emit(content, out);
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"exact enumeration of perfect squares and exponent certificates "
                 "for Catalan and Narayana numbers"};
    app.require_subcommand(1);

    // squares
    std::uint64_t sq_b = 0, sq_amax = 0;
    std::string sq_format = "csv", sq_out;
    bool sq_verify = false, sq_crosscheck = false;
    CLI::App* sq = app.add_subcommand("squares", "all a <= a-max with N(a, b) a perfect square");
    sq->add_option("--b", sq_b, "fixed second index b (> 1)")
        ->required()
        ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    sq->add_option("--a-max", sq_amax, "upper bound for a")->required()->check(CLI::PositiveNumber);
    sq->add_option("--format", sq_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sq->add_option("--out", sq_out, "output path (default stdout)");
    sq->add_flag("--verify", sq_verify, "re-check each row by exact square root");
    sq->add_flag("--crosscheck", sq_crosscheck, "compare against the brute-force oracle");

    // pell
    std::uint64_t pl_d = 0, pl_z = 0, pl_nlimit = 1000000;
    std::string pl_out;
    CLI::App* pl = app.add_subcommand("pell", "solve n^2 - d*m^2 = z^2 for even m");
    pl->add_option("--d", pl_d, "squarefree d >= 1")->required()->check(CLI::PositiveNumber);
    pl->add_option("--z", pl_z, "right-hand side z >= 1")->required()->check(CLI::PositiveNumber);
    pl->add_option("--n-limit", pl_nlimit, "emit solutions with n <= this bound");
    pl->add_option("--out", pl_out, "output path (default stdout)");

    // catalan
    std::uint64_t ct_nmax = 0;
    std::string ct_format = "csv", ct_out;
    CLI::App* ct = app.add_subcommand("catalan", "audit that no C_n is a perfect power");
    ct->add_option("--n-max", ct_nmax, "audit n = 1..n-max")->required()->check(CLI::PositiveNumber);
    ct->add_option("--format", ct_format, "output format")->check(CLI::IsMember({"csv", "json"}));
    ct->add_option("--out", ct_out, "output path (default stdout)");

    // scan
    std::uint64_t sc_amax = 0;
    std::string sc_format = "csv", sc_out;
    unsigned sc_workers = 0;
    CLI::App* sc = app.add_subcommand("scan", "scan for higher perfect powers among N(a, b)");
    sc->add_option("--a-max", sc_amax, "scan a = 1..a-max")->required()->check(CLI::PositiveNumber);
    sc->add_option("--format", sc_format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sc->add_option("--out", sc_out, "output path (default stdout)");
    sc->add_option("--workers", sc_workers, "worker thread count (default: auto)");

    // certify
    std::uint64_t ce_a = 0, ce_b = 0;
    std::string ce_format = "json", ce_out;
    CLI::App* ce = app.add_subcommand("certify", "exponent-bound certificates for N(a, b) = m^k");
    ce->add_option("a", ce_a, "first index a")->required();
    ce->add_option("b", ce_b, "second index b")->required();
    ce->add_option("--format", ce_format, "output format")->check(CLI::IsMember({"csv", "json"}));
    ce->add_option("--out", ce_out, "output path (default stdout)");

    // figures
    std::uint64_t f1_amax = 0, f2_amax = 0;
    std::string f1_format = "csv", f1_out, f2_format = "csv", f2_out;
    unsigned f1_workers = 0;
    CLI::App* f1 = app.add_subcommand("figure1", "square pairs (a, b) up to a-max");
    f1->add_option("--a-max", f1_amax, "upper bound for a")->required()->check(CLI::PositiveNumber);
    f1->add_option("--format", f1_format, "output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    f1->add_option("--out", f1_out, "output path (default stdout)");
    f1->add_option("--workers", f1_workers, "worker thread count (default: auto)");

    CLI::App* f2 = app.add_subcommand("figure2", "per-a certificate thresholds up to a-max");
    f2->add_option("--a-max", f2_amax, "upper bound for a")->required()->check(CLI::PositiveNumber);
    f2->add_option("--format", f2_format, "output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    f2->add_option("--out", f2_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (sq->parsed())
            return cmd_squares(sq_b, sq_amax, sq_format, sq_out, sq_verify, sq_crosscheck);
        if (pl->parsed()) return cmd_pell(pl_d, pl_z, pl_nlimit, pl_out);
        if (ct->parsed()) return cmd_catalan(ct_nmax, ct_format, ct_out);
        if (sc->parsed()) return cmd_scan(sc_amax, sc_format, sc_out, sc_workers);
        if (ce->parsed()) {
            if (!(ce_a > ce_b && ce_b > 1)) {
                std::cerr << "error: certify requires a > b > 1\n";
                return exit_usage;
            }
            return cmd_certify(ce_a, ce_b, ce_format, ce_out);
        }
        if (f1->parsed()) return cmd_figure1(f1_amax, f1_format, f1_out, f1_workers);
        if (f2->parsed()) return cmd_figure2(f2_amax, f2_format, f2_out);
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const degenerate_surd& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const falsified_step& e) {
        std::cerr << "falsified: " << e.what() << "\n";
        return exit_falsified;
    }
    return exit_usage;
}

}  // namespace narayana::cli
