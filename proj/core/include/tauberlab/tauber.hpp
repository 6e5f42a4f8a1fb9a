#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "tauberlab/stepfn.hpp"

namespace tauberlab {

// Target function sampled along the real axis only; expected real-valued
// there (conjugate-symmetric transforms are).
using RealAxisEvaluator = std::function<std::complex<double>(double)>;

struct ResidueLevel {
    double h;    // node offset, h0 * 2^-k
    double raw;  // h * F(alpha + h)
};

// Extrapolated residue of a simple pole at alpha with level diagnostics.
// table[k] holds the Richardson row built from nodes h_0..h_k; value is the
// last diagonal entry and uncertainty the gap between the last two diagonals.
struct ResidueEstimate {
    double alpha = 0.0;
    double value = 0.0;
    std::vector<ResidueLevel> levels;
    std::vector<std::vector<double>> table;
    double uncertainty = 0.0;
};

// lim_{h -> 0+} h F(alpha + h) by Richardson extrapolation on the geometric
// nodes h_k = h0 * 2^-k. For F = simple pole + analytic remainder the error is
// O(h0 * 2^-levels). Evaluator exceptions surface as evaluator_error with the
// failing node attached. 2 <= levels <= 12.
ResidueEstimate residue_extrapolate(const RealAxisEvaluator& F, double alpha,
                                    double h0 = 0.5, int levels = 8);

// Checks the substitution L_rho(s) = L_g(s - alpha) for g(t) = rho(t) e^{-alpha t}
// numerically: the left side is the truncated transform of rho at s, the right
// side the per-interval closed forms of rho(t) e^{-alpha t} e^{-(s-alpha) t}.
// Returns the worst relative residual over s_values; each sigma must exceed alpha.
double shifted_transform_check(const StepFunction& f, double alpha,
                               std::span<const ComplexPoint> s_values, double T);

struct LimitRow {
    double abscissa;      // T
    double scaled_value;  // rho(T) e^{-alpha T}
    double reference;     // extrapolated residue
    double relative_gap;
};

struct LimitTable {
    std::vector<LimitRow> rows;
};

// Tabulates g(T) = rho(T) e^{-alpha T} against a reference residue. No
// convergence is asserted here; callers judge the gaps.
LimitTable tauber_limit_table(const StepFunction& f, double alpha,
                              std::span<const double> abscissae,
                              const ResidueEstimate& reference);

}  // namespace tauberlab
