#include "tauberlab/pnt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tauberlab/summation.hpp"

namespace tauberlab {

StepFunction rho_from_jumps(const PsiJumpList& jumps, double X) {
    std::vector<double> times, heights;
    times.reserve(jumps.jumps().size());
    heights.reserve(jumps.jumps().size());
    for (const PsiJump& j : jumps.jumps()) {
        times.push_back(static_cast<double>(j.exponent) * j.weight);  // k log p
        heights.push_back(j.weight);
    }
    // log X can land an ulp under the last jump time when X is itself a prime
    // power; t_max absorbs that
    double t_max = std::log(X);
    if (!times.empty()) t_max = std::max(t_max, times.back());
    return StepFunction(std::move(times), std::move(heights), t_max);
}

StepFunction build_rho(double X, const PrimeTable& table) {
    return rho_from_jumps(psi_jumps(X, table), X);
}

CrosscheckRow crosscheck(ComplexPoint s, const StepFunction& rho, double X,
                         const EMParams& params) {
    if (!(s.sigma > 1.0))
        throw out_of_region_error("crosscheck: validated on sigma > 1 only");
    if (rho.total_mass() > kChebyshevC * X)
        throw std::logic_error("crosscheck: psi(X) exceeded the C x envelope");

    const double T = rho.t_max();
    const ScaledLogDeriv zeta_side = zeta_log_deriv_scaled(s, params);
    const std::complex<double> laplace_side = laplace_truncated(rho, s, T);
    const TailCertificate cert = tail_bound(kChebyshevC, 1.0, s, T);

    CrosscheckRow row;
    row.s = s;
    row.zeta_side = zeta_side.value;
    row.laplace_side = laplace_side;
    row.tail_bound = cert.bound;
    row.zeta_certificate = zeta_side.certificate;
    row.abs_diff = std::abs(zeta_side.value - laplace_side);
    row.pass = row.abs_diff <= cert.bound + zeta_side.certificate;
    return row;
}

CrosscheckRow crosscheck(ComplexPoint s, double X, const PrimeTable& table,
                         const EMParams& params) {
    return crosscheck(s, build_rho(X, table), X, params);
}

namespace {

// integral of |c - x| / x^2 over [a, b]; antiderivative of (c - x)/x^2 is
// -c/x - log x, split at x = c when the sign changes inside
double abs_deficit_integral(double c, double a, double b) {
    const auto c_above = [c](double lo, double hi) {
        return c * (1.0 / lo - 1.0 / hi) - std::log(hi / lo);
    };
    if (c <= a) return -c_above(a, b);
    if (c >= b) return c_above(a, b);
    return c_above(a, c) - c_above(c, b);
}

}  // namespace

double k_a_integral(double A, const PsiJumpList& jumps) {
    if (!(A >= 1.0)) throw std::domain_error("k_a_integral: A must be >= 1");
    if (A > jumps.cutoff())
        throw std::domain_error("k_a_integral: A exceeds the enumerated cutoff");

    CompensatedSum acc;
    double a = 1.0;
    double c = 0.0;
    const auto& js = jumps.jumps();
    const auto prefix = jumps.prefix_sums();
    for (std::size_t i = 0; i < js.size(); ++i) {
        const auto b = static_cast<double>(js[i].location);
        if (b > A) break;
        if (b > a) acc.add(abs_deficit_integral(c, a, b));
        a = b;
        c = prefix[i];
    }
    if (A > a) acc.add(abs_deficit_integral(c, a, A));
    return acc.value();
}

double k_a_integral(double A, double X, const PrimeTable& table) {
    if (!(A >= 1.0)) throw std::domain_error("k_a_integral: A must be >= 1");
    if (!(A <= X)) throw std::domain_error("k_a_integral: A must not exceed X");
    if (X > static_cast<double>(table.limit()))
        throw insufficient_table_error(X, table.limit());
    return k_a_integral(A, psi_jumps(A, table));
}

std::vector<ScaledLimitRow> scaled_line_limits(double tau, std::span<const double> sigma_seq,
                                               const EMParams& params) {
    if (sigma_seq.empty())
        throw std::invalid_argument("scaled_line_limits: empty sigma sequence");
    for (std::size_t i = 0; i < sigma_seq.size(); ++i) {
        if (!(sigma_seq[i] > 1.0))
            throw std::domain_error("scaled_line_limits: every sigma must exceed 1");
        if (i > 0 && !(sigma_seq[i] < sigma_seq[i - 1]))
            throw std::invalid_argument(
                "scaled_line_limits: sigma must strictly decrease toward 1");
    }
    std::vector<ScaledLimitRow> rows;
    rows.reserve(sigma_seq.size());
    for (double sigma : sigma_seq) {
        const ScaledLogDeriv f = zeta_log_deriv_scaled({sigma, tau}, params);
        rows.push_back({sigma, (sigma - 1.0) * f.value});
    }
    return rows;
}

std::vector<ConvergenceRow> convergence_table(std::span<const double> x_values,
                                              const PrimeTable& table) {
    for (double x : x_values) {
        if (!(x >= 1.0)) throw std::domain_error("convergence_table: x must be >= 1");
        if (x > static_cast<double>(table.limit()))
            throw insufficient_table_error(x, table.limit());
    }

    // psi streamed over ascending order, rows reported in input order
    std::vector<std::size_t> order(x_values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return x_values[a] < x_values[b]; });
    std::vector<double> sorted_x(x_values.size());
    for (std::size_t i = 0; i < order.size(); ++i) sorted_x[i] = x_values[order[i]];
    const std::vector<double> psi_sorted = psi_values(sorted_x, table);

    std::vector<ConvergenceRow> rows(x_values.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t idx = order[i];
        const double x = x_values[idx];
        const double psi = psi_sorted[i];
        const std::uint64_t pi = pi_count(x, table);
        rows[idx] = {x, psi, psi / x, pi,
                     static_cast<double>(pi) * std::log(x) / x};
    }
    return rows;
}

}  // namespace tauberlab
