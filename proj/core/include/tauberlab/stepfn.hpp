#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "tauberlab/errors.hpp"

namespace tauberlab {

// Transform evaluation point s = sigma + i t.
struct ComplexPoint {
    double sigma = 0.0;
    double t = 0.0;

    std::complex<double> value() const noexcept { return {sigma, t}; }
    bool is_zero() const noexcept { return sigma == 0.0 && t == 0.0; }
};

// Truncation point T plus a rigorous bound on the discarded integral tail,
// valid whenever rho(t) <= growth_C * exp(growth_alpha * t) on [T, inf).
struct TailCertificate {
    double T = 0.0;
    double bound = 0.0;
    double growth_alpha = 0.0;
    double growth_C = 0.0;
};

// Right-continuous nondecreasing pure-jump function with rho(0) = 0:
// rho(t) = sum of the heights of all jumps at times <= t. Evaluation is an
// exact partial sum; there is no interpolation. Immutable after construction.
class StepFunction {
public:
    StepFunction() = default;  // identically zero, t_max = 0
    StepFunction(std::vector<double> jump_times, std::vector<double> jump_heights);
    StepFunction(std::vector<double> jump_times, std::vector<double> jump_heights,
                 double t_max);

    std::size_t jump_count() const noexcept { return times_.size(); }
    std::span<const double> jump_times() const noexcept { return times_; }
    std::span<const double> jump_heights() const noexcept { return heights_; }
    std::span<const double> prefix_sums() const noexcept { return prefix_; }
    double t_max() const noexcept { return t_max_; }

    // rho(t); requires 0 <= t <= t_max
    double eval(double t) const;

    // rho(t_max) = total variation of rho on [0, t_max]
    double total_mass() const noexcept { return prefix_.empty() ? 0.0 : prefix_.back(); }

private:
    void finish();

    std::vector<double> times_;
    std::vector<double> heights_;
    std::vector<double> prefix_;
    double t_max_ = 0.0;
};

// Jump union; heights at coincident times add. t_max is the larger of the two.
StepFunction merge(const StepFunction& a, const StepFunction& b);

// Integral of rho(t) e^{-wt} over [0, T] as the exact closed-form sum over
// constancy intervals; only rounding error, no quadrature. w = 0 returns the
// s -> 0 limit (sum of value * width). T <= t_max.
std::complex<double> laplace_truncated(const StepFunction& f, std::complex<double> w,
                                       double T);
std::complex<double> laplace_truncated(const StepFunction& f, ComplexPoint s, double T);

// Jump-sum form of the Laplace-Stieltjes transform over [0, T]:
// sum of h_j e^{-s t_j} for t_j <= T. At s = 0 this collapses to rho(T),
// returned bit-identically to eval(f, T).
std::complex<double> laplace_stieltjes_truncated(const StepFunction& f, ComplexPoint s,
                                                 double T);

// |LS_T(s) - rho(T) e^{-sT} - s L_T(s)|: the truncated integration-by-parts
// identity with its boundary term. Algebraically zero at every finite T;
// the return value measures rounding accumulation only.
double parts_identity_residual(const StepFunction& f, ComplexPoint s, double T);

// bound = C e^{(alpha - sigma) T} / (sigma - alpha); requires sigma > alpha.
TailCertificate tail_bound(double growth_C, double growth_alpha, ComplexPoint s, double T);

inline constexpr std::size_t kVariationGridPoints = 1024;

// Discrete total variation of g(t) = rho(t) e^{-alpha t} over a partition of
// [0, T]. The default partition is the jump times joined with a uniform grid
// of kVariationGridPoints points plus the endpoints. Nondecreasing under
// refinement; never exceeds the exact variation of g (the jump part plus the
// decay part, each at most rho(T)); equals rho(T) at alpha = 0.
double total_variation_scaled(const StepFunction& f, double alpha, double T);
double total_variation_scaled(const StepFunction& f, double alpha,
                              std::span<const double> partition);

// Fixture-exchange CSV: header "t,h", one row per jump, 17 significant digits.
void write_csv(const StepFunction& f, std::ostream& os);
StepFunction read_step_function_csv(std::istream& is);

}  // namespace tauberlab
