// Command-line surface over the library: every pipeline as a subcommand with
// reproducible CSV/JSON output. Exit codes: 0 success, 1 failed pass-flag or
// computation error (error record written to the output path), 2 usage error.
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tauberlab/arith.hpp"
#include "tauberlab/pnt.hpp"
#include "tauberlab/report.hpp"
#include "tauberlab/stepfn.hpp"
#include "tauberlab/tauber.hpp"
#include "tauberlab/zeta.hpp"

namespace {

using namespace tauberlab;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string path;     // resolved file path
    std::string format;   // csv | json
};

int usage_error(const std::string& field, const std::string& reason) {
    std::cerr << "usage error: invalid " << field << ": " << reason << "\n";
    return kExitUsage;
}

// generic table: fixed header, numeric rows (pass flags already 0/1)
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

void write_table(const Table& t, const Output& out) {
    std::ofstream os(out.path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output path " + out.path);
    if (out.format == "csv") {
        for (std::size_t i = 0; i < t.header.size(); ++i)
            os << t.header[i] << (i + 1 < t.header.size() ? "," : "\n");
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << format_double(row[i]) << (i + 1 < row.size() ? "," : "\n");
        }
    } else {
        os << "[\n";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            os << "  {";
            for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
                os << '"' << t.header[i] << "\": " << format_double(t.rows[r][i]);
                if (i + 1 < t.rows[r].size()) os << ", ";
            }
            os << (r + 1 < t.rows.size() ? "},\n" : "}\n");
        }
        os << "]\n";
    }
}

void write_failure(const Output& out, const std::string& type, const std::string& what) {
    std::ofstream os(out.path, std::ios::binary);
    if (os) write_error_record(type, what, os);
}

std::vector<double> decade_grid(double x_max, double first = 100.0) {
    std::vector<double> xs;
    for (double x = first; x <= x_max; x *= 10.0) xs.push_back(x);
    if (xs.empty() || xs.back() != x_max) xs.push_back(x_max);
    return xs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"transform and prime-counting laboratory"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "csv";
    std::uint64_t seed = 0;  // reserved for sampling subcommands
    app.add_option("--out", out_path, "output path (default: <subcommand>.<format>)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", seed, "sampling seed (reserved)");

    // sieve
    auto* cmd_sieve = app.add_subcommand("sieve", "enumerate primes up to a limit");
    std::uint64_t sieve_limit = 1000;
    std::uint64_t segment = kDefaultSegmentCandidates;
    cmd_sieve->add_option("--limit", sieve_limit, "sieve bound N")->required();
    cmd_sieve->add_option("--segment", segment, "odd candidates per segment");

    // psi
    auto* cmd_psi = app.add_subcommand("psi", "Chebyshev psi at a point");
    double psi_x = 10.0;
    cmd_psi->add_option("--x", psi_x, "evaluation point")->required();

    // pi
    auto* cmd_pi = app.add_subcommand("pi", "prime count at a point");
    double pi_x = 100.0;
    cmd_pi->add_option("--x", pi_x, "evaluation point")->required();

    // zeta
    auto* cmd_zeta = app.add_subcommand("zeta", "zeta and zeta' at one point");
    double zeta_sigma = 2.0, zeta_t = 0.0;
    cmd_zeta->add_option("--sigma", zeta_sigma, "real part")->required();
    cmd_zeta->add_option("--t", zeta_t, "imaginary part")->required();

    // scan-line
    auto* cmd_scan = app.add_subcommand("scan-line", "grid minimum of |zeta(1+it)|");
    double scan_lo = 0.5, scan_hi = 50.0, scan_step = 0.01;
    cmd_scan->add_option("--t-lo", scan_lo, "window start")->required();
    cmd_scan->add_option("--t-hi", scan_hi, "window end")->required();
    cmd_scan->add_option("--step", scan_step, "grid step")->required();

    // crosscheck
    auto* cmd_cross = app.add_subcommand("crosscheck",
                                         "zeta side vs transform side of the identity");
    double cross_sigma = 2.0, cross_t = 0.0, cross_xmax = 1e6;
    cmd_cross->add_option("--sigma", cross_sigma, "real part, > 1")->required();
    cmd_cross->add_option("--t", cross_t, "imaginary part")->required();
    cmd_cross->add_option("--x-max", cross_xmax, "sieve reach");

    // residue
    auto* cmd_residue = app.add_subcommand("residue",
                                           "extrapolated residue of -zeta'/(s zeta)");
    double res_alpha = 1.0, res_h0 = 0.5;
    int res_levels = 8;
    cmd_residue->add_option("--alpha", res_alpha, "pole location");
    cmd_residue->add_option("--h0", res_h0, "largest node offset");
    cmd_residue->add_option("--levels", res_levels, "extrapolation levels (2..12)");

    // tauber-table
    auto* cmd_tauber = app.add_subcommand("tauber-table",
                                          "scaled psi(e^T) against the residue");
    double tauber_alpha = 1.0, tauber_xmax = 1e6;
    cmd_tauber->add_option("--alpha", tauber_alpha, "scaling rate");
    cmd_tauber->add_option("--x-max", tauber_xmax, "sieve reach");

    // ka
    auto* cmd_ka = app.add_subcommand("ka", "integral of |psi(x)-x|/x^2 over [1, A]");
    double ka_a = 2.0, ka_xmax = 1e6;
    cmd_ka->add_option("--a", ka_a, "upper limit A, >= 1")->required();
    cmd_ka->add_option("--x-max", ka_xmax, "sieve reach");

    // pnt-table
    auto* cmd_pnt = app.add_subcommand("pnt-table", "psi and pi convergence table");
    double pnt_xmax = 1e7;
    bool pnt_huge = false;
    cmd_pnt->add_option("--x-max", pnt_xmax, "largest table point");
    cmd_pnt->add_flag("--huge", pnt_huge, "allow x-max beyond 1e7");

    // --out/--format/--seed stay valid after the subcommand name
    for (CLI::App* sub : {cmd_sieve, cmd_psi, cmd_pi, cmd_zeta, cmd_scan, cmd_cross,
                          cmd_residue, cmd_tauber, cmd_ka, cmd_pnt})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App* cmd = app.get_subcommands().front();
    Output out;
    out.format = format;
    out.path = out_path.empty() ? cmd->get_name() + "." + format : out_path;

    // validate every parameter before any computation starts
    if (cmd == cmd_sieve) {
        if (sieve_limit < 2) return usage_error("--limit", "must be at least 2");
        if (segment == 0) return usage_error("--segment", "must be positive");
    } else if (cmd == cmd_psi) {
        if (!(psi_x >= 1.0)) return usage_error("--x", "must be >= 1");
    } else if (cmd == cmd_pi) {
        if (!(pi_x >= 0.0)) return usage_error("--x", "must be nonnegative");
    } else if (cmd == cmd_zeta) {
        if (!(zeta_sigma > 0.0)) return usage_error("--sigma", "must be > 0");
        if (zeta_sigma == 1.0 && zeta_t == 0.0)
            return usage_error("--sigma", "s = 1 is the pole of zeta");
    } else if (cmd == cmd_scan) {
        if (!(scan_lo > 0.0)) return usage_error("--t-lo", "must be > 0");
        if (!(scan_hi >= scan_lo)) return usage_error("--t-hi", "must be >= --t-lo");
        if (!(scan_step > 0.0)) return usage_error("--step", "must be > 0");
    } else if (cmd == cmd_cross) {
        if (!(cross_sigma > 1.0)) return usage_error("--sigma", "validated on sigma > 1 only");
        if (!(cross_xmax >= 2.0)) return usage_error("--x-max", "must be >= 2");
    } else if (cmd == cmd_residue) {
        if (!(res_h0 > 0.0)) return usage_error("--h0", "must be > 0");
        if (res_levels < 2 || res_levels > 12)
            return usage_error("--levels", "must lie in [2, 12]");
    } else if (cmd == cmd_tauber) {
        if (!(tauber_alpha >= 0.0)) return usage_error("--alpha", "must be >= 0");
        if (!(tauber_xmax >= 10.0)) return usage_error("--x-max", "must be >= 10");
    } else if (cmd == cmd_ka) {
        if (!(ka_a >= 1.0)) return usage_error("--a", "must be >= 1");
        if (!(ka_xmax >= ka_a)) return usage_error("--x-max", "must be >= --a");
    } else if (cmd == cmd_pnt) {
        if (!(pnt_xmax >= 100.0)) return usage_error("--x-max", "must be >= 100");
        if (pnt_xmax > 1e7 && !pnt_huge)
            return usage_error("--x-max", "beyond 1e7 requires --huge");
        if (pnt_xmax > 1e9) return usage_error("--x-max", "must not exceed 1e9");
    }

    try {
        bool failed_pass_flag = false;

        if (cmd == cmd_sieve) {
            const PrimeTable table = sieve_primes(sieve_limit, segment);
            Table t;
            t.header = {"p"};
            table.for_each_prime(2, sieve_limit, [&](std::uint64_t p) {
                t.rows.push_back({static_cast<double>(p)});
            });
            write_table(t, out);
            std::cout << "sieve: " << t.rows.size() << " primes <= " << sieve_limit
                      << " -> " << out.path << "\n";
        } else if (cmd == cmd_psi) {
            const PrimeTable table =
                sieve_primes(std::max<std::uint64_t>(2, static_cast<std::uint64_t>(psi_x)));
            const PsiJumpList jumps = psi_jumps(psi_x, table);
            const double value = jumps.psi(psi_x);
            Table t;
            t.header = {"x", "psi"};
            t.rows.push_back({psi_x, value});
            write_table(t, out);
            std::cout << "psi(" << format_double(psi_x) << ") = " << format_double(value)
                      << " -> " << out.path << "\n";
        } else if (cmd == cmd_pi) {
            const PrimeTable table =
                sieve_primes(std::max<std::uint64_t>(2, static_cast<std::uint64_t>(pi_x)));
            const std::uint64_t count = pi_count(pi_x, table);
            Table t;
            t.header = {"x", "pi"};
            t.rows.push_back({pi_x, static_cast<double>(count)});
            write_table(t, out);
            std::cout << count << "\n";
        } else if (cmd == cmd_zeta) {
            const ComplexPoint s{zeta_sigma, zeta_t};
            const ZetaValue z = zeta_em(s);
            const ZetaValue zp = zeta_prime_em(s);
            Table t;
            t.header = {"sigma", "t",        "zeta_re",       "zeta_im",
                        "zeta_err", "zeta_prime_re", "zeta_prime_im", "zeta_prime_err"};
            t.rows.push_back({zeta_sigma, zeta_t, z.value.real(), z.value.imag(),
                              z.error_estimate, zp.value.real(), zp.value.imag(),
                              zp.error_estimate});
            write_table(t, out);
            std::cout << "zeta(" << format_double(zeta_sigma) << " + "
                      << format_double(zeta_t) << "i) = " << format_double(z.value.real())
                      << " + " << format_double(z.value.imag()) << "i -> " << out.path
                      << "\n";
        } else if (cmd == cmd_scan) {
            const LineScanResult scan = line_min_scan(scan_lo, scan_hi, scan_step);
            Table t;
            t.header = {"t_lo", "t_hi", "step", "points", "argmin_t", "min_abs"};
            t.rows.push_back({scan_lo, scan_hi, scan_step,
                              static_cast<double>(scan.points), scan.argmin_t,
                              scan.min_abs});
            write_table(t, out);
            std::cout << "scan-line: min |zeta(1+it)| = " << format_double(scan.min_abs)
                      << " at t = " << format_double(scan.argmin_t) << " over "
                      << scan.points
                      << " points (grid evidence at this resolution, not a proof) -> "
                      << out.path << "\n";
        } else if (cmd == cmd_cross) {
            const PrimeTable table =
                sieve_primes(static_cast<std::uint64_t>(cross_xmax));
            const CrosscheckRow row =
                crosscheck(ComplexPoint{cross_sigma, cross_t}, cross_xmax, table);
            if (out.format == "json") {
                PntReport report;
                report.x_max = cross_xmax;
                report.crosscheck.push_back(row);
                std::ofstream os(out.path, std::ios::binary);
                write_report_json(report, os);
            } else {
                std::ofstream os(out.path, std::ios::binary);
                write_crosscheck_csv({&row, 1}, os);
            }
            failed_pass_flag = !row.pass;
            std::cout << "crosscheck s = " << format_double(cross_sigma) << " + "
                      << format_double(cross_t) << "i, X = " << format_double(cross_xmax)
                      << ": |diff| = " << format_double(row.abs_diff)
                      << (row.pass ? " PASS" : " FAIL") << " -> " << out.path << "\n";
        } else if (cmd == cmd_residue) {
            const auto F = [](double s) {
                return zeta_log_deriv_scaled(ComplexPoint{s, 0.0}).value;
            };
            const ResidueEstimate est = residue_extrapolate(F, res_alpha, res_h0, res_levels);
            Table t;
            t.header = {"level", "h", "raw", "diagonal"};
            for (std::size_t k = 0; k < est.levels.size(); ++k)
                t.rows.push_back({static_cast<double>(k), est.levels[k].h,
                                  est.levels[k].raw, est.table[k][k]});
            write_table(t, out);
            std::cout << "residue at " << format_double(res_alpha) << ": "
                      << format_double(est.value) << " +/- "
                      << format_double(est.uncertainty) << " -> " << out.path << "\n";
        } else if (cmd == cmd_tauber) {
            const PrimeTable table =
                sieve_primes(static_cast<std::uint64_t>(tauber_xmax));
            const StepFunction rho = build_rho(tauber_xmax, table);
            const auto F = [](double s) {
                return zeta_log_deriv_scaled(ComplexPoint{s, 0.0}).value;
            };
            const ResidueEstimate ref = residue_extrapolate(F, tauber_alpha);
            std::vector<double> ts;
            for (double x = 10.0; x <= tauber_xmax; x *= 10.0) ts.push_back(std::log(x));
            if (ts.empty() || ts.back() < rho.t_max()) ts.push_back(rho.t_max());
            const LimitTable lt = tauber_limit_table(rho, tauber_alpha, ts, ref);
            Table t;
            t.header = {"T", "scaled_value", "reference", "relative_gap"};
            for (const LimitRow& r : lt.rows)
                t.rows.push_back({r.abscissa, r.scaled_value, r.reference, r.relative_gap});
            write_table(t, out);
            std::cout << "tauber-table: gap at T = "
                      << format_double(lt.rows.back().abscissa) << " is "
                      << format_double(lt.rows.back().relative_gap) << " -> " << out.path
                      << "\n";
        } else if (cmd == cmd_ka) {
            const PrimeTable table = sieve_primes(
                std::max<std::uint64_t>(2, static_cast<std::uint64_t>(ka_xmax)));
            const double value = k_a_integral(ka_a, ka_xmax, table);
            Table t;
            t.header = {"a", "k_a"};
            t.rows.push_back({ka_a, value});
            write_table(t, out);
            std::cout << "K_A(" << format_double(ka_a) << ") = " << format_double(value)
                      << " -> " << out.path << "\n";
        } else if (cmd == cmd_pnt) {
            const PrimeTable table =
                sieve_primes(static_cast<std::uint64_t>(pnt_xmax));
            const std::vector<double> xs = decade_grid(pnt_xmax);
            const auto rows = convergence_table(xs, table);
            if (out.format == "json") {
                PntReport report;
                report.x_max = pnt_xmax;
                report.convergence = rows;
                std::ofstream os(out.path, std::ios::binary);
                write_report_json(report, os);
            } else {
                std::ofstream os(out.path, std::ios::binary);
                write_convergence_csv(rows, os);
            }
            std::cout << "pnt-table: psi(x)/x = " << format_double(rows.back().psi_over_x)
                      << " at x = " << format_double(rows.back().x) << " -> " << out.path
                      << "\n";
        }

        return failed_pass_flag ? kExitComputation : kExitOk;
    } catch (const insufficient_table_error& e) {
        write_failure(out, "insufficient_table_error", e.what());
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const no_certificate_error& e) {
        write_failure(out, "no_certificate_error", e.what());
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const pole_error& e) {
        write_failure(out, "pole_error", e.what());
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const out_of_region_error& e) {
        write_failure(out, "out_of_region_error", e.what());
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const near_zero_error& e) {
        write_failure(out, "near_zero_error", e.what());
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const evaluator_error& e) {
        write_failure(out, "evaluator_error", e.what());
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        write_failure(out, "error", e.what());
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
