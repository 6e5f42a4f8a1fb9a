#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "tauberlab/errors.hpp"
#include "tauberlab/stepfn.hpp"

namespace tauberlab {

// B_2, B_4, ..., B_32 as exact rationals rendered to double. The extra entry
// beyond B_30 backs the first-omitted-term estimate at the maximum order.
inline constexpr std::array<double, 16> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
};

// Euler-Maclaurin evaluation parameters: direct terms n < series_cutoff, then
// correction_terms Bernoulli corrections (1..15).
struct EMParams {
    int series_cutoff = 20;
    int correction_terms = 10;

    // N = max(20, ceil(10 + 2|t|)), M = 10: comfortable at double precision
    // for |t| up to a few hundred.
    static EMParams for_point(ComplexPoint s) noexcept;
};

struct ZetaValue {
    std::complex<double> value;
    // magnitude of the first omitted correction term, scaled by the classical
    // |s + 2M + 1| / (sigma + 2M + 1) envelope
    double error_estimate;
};

// zeta(s) on {sigma > 0}, s != 1, by Euler-Maclaurin continuation.
ZetaValue zeta_em(ComplexPoint s, const EMParams& params);
inline ZetaValue zeta_em(ComplexPoint s) { return zeta_em(s, EMParams::for_point(s)); }

// zeta'(s) by term-wise analytic differentiation of the same formula.
ZetaValue zeta_prime_em(ComplexPoint s, const EMParams& params);
inline ZetaValue zeta_prime_em(ComplexPoint s) {
    return zeta_prime_em(s, EMParams::for_point(s));
}

inline constexpr double kZetaNearZeroGuard = 1e-12;

struct ScaledLogDeriv {
    std::complex<double> value;  // -zeta'(s) / (s zeta(s))
    double certificate;          // propagated Euler-Maclaurin error estimates
};

// -zeta'(s) / (s zeta(s)) on {sigma > 0} \ {0, 1}; refuses to divide when
// |zeta(s)| is under kZetaNearZeroGuard.
ScaledLogDeriv zeta_log_deriv_scaled(ComplexPoint s, const EMParams& params);
inline ScaledLogDeriv zeta_log_deriv_scaled(ComplexPoint s) {
    return zeta_log_deriv_scaled(s, EMParams::for_point(s));
}

struct LineScanResult {
    double argmin_t = 0.0;
    double min_abs = 0.0;
    std::size_t points = 0;
    double step = 0.0;
};

// Grid minimum of |zeta(1 + it)| on [t_lo, t_hi]. Numerical evidence at the
// grid resolution, not a proof. t_lo == t_hi degenerates to one evaluation.
LineScanResult line_min_scan(double t_lo, double t_hi, double step);

}  // namespace tauberlab
