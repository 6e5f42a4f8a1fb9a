#pragma once

#include <cmath>
#include <complex>
#include <span>

namespace tauberlab {

// Neumaier variant of compensated summation: keeps the recovery term even
// when an addend exceeds the running sum.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double compensated_total(std::span<const double> xs) noexcept;

// Pairwise reduction with a fixed tree shape. The result depends only on the
// input order, never on chunking or thread count, so parallel producers can
// feed it without losing bitwise reproducibility.
double pairwise_total(std::span<const double> xs) noexcept;
std::complex<double> pairwise_total(std::span<const std::complex<double>> xs) noexcept;

}  // namespace tauberlab
