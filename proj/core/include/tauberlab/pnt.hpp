#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "tauberlab/arith.hpp"
#include "tauberlab/stepfn.hpp"
#include "tauberlab/zeta.hpp"

namespace tauberlab {

// Chebyshev envelope psi(x) <= C x used by the tail certificates; asserted
// against the sieve on the computed range at every use.
inline constexpr double kChebyshevC = 1.04;

// rho(t) = psi(e^t) as a step function: a jump of height log p at t = k log p
// for every prime power p^k <= X; t_max = log X.
StepFunction build_rho(double X, const PrimeTable& table);
StepFunction rho_from_jumps(const PsiJumpList& jumps, double X);

struct CrosscheckRow {
    ComplexPoint s;
    std::complex<double> zeta_side;     // -zeta'(s) / (s zeta(s))
    std::complex<double> laplace_side;  // truncated transform of rho at s
    double tail_bound;
    double zeta_certificate;
    double abs_diff;
    bool pass;  // abs_diff <= tail_bound + zeta_certificate
};

// Both sides of the central identity computed independently and compared
// under the tail certificate. Validated on sigma > 1 only, where the integral
// converges.
CrosscheckRow crosscheck(ComplexPoint s, double X, const PrimeTable& table,
                         const EMParams& params);
CrosscheckRow crosscheck(ComplexPoint s, const StepFunction& rho, double X,
                         const EMParams& params);
inline CrosscheckRow crosscheck(ComplexPoint s, double X, const PrimeTable& table) {
    return crosscheck(s, X, table, EMParams::for_point(s));
}

// Integral of |psi(x) - x| / x^2 over [1, A], evaluated in closed form on each
// constancy interval of psi with an exact split where the integrand changes
// sign. A >= 1; psi is enumerated up to A.
double k_a_integral(double A, double X, const PrimeTable& table);
double k_a_integral(double A, const PsiJumpList& jumps);

struct ScaledLimitRow {
    double sigma;
    std::complex<double> value;  // (sigma - 1) * F(sigma + i tau)
};

// Rows of (sigma - 1) F(sigma + i tau) along sigma decreasing toward 1; the
// quantity that tends to 1 at tau = 0 and to 0 where zeta(1 + i tau) != 0.
std::vector<ScaledLimitRow> scaled_line_limits(double tau, std::span<const double> sigma_seq,
                                               const EMParams& params);

struct ConvergenceRow {
    double x;
    double psi;
    double psi_over_x;
    std::uint64_t pi;
    double pi_logx_over_x;
};

std::vector<ConvergenceRow> convergence_table(std::span<const double> x_values,
                                              const PrimeTable& table);

struct LineScanSummary {
    double t_lo = 0.0;
    double t_hi = 0.0;
    double step = 0.0;
    double argmin_t = 0.0;
    double min_abs = 0.0;
    std::uint64_t points = 0;
};

struct KaRow {
    double a;
    double value;
};

struct PntReport {
    double x_max = 0.0;
    std::vector<ConvergenceRow> convergence;
    std::vector<CrosscheckRow> crosscheck;
    std::vector<KaRow> k_a;
    std::vector<LineScanSummary> line_scans;
};

}  // namespace tauberlab
