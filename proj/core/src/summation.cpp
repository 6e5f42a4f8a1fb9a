#include "tauberlab/summation.hpp"

namespace tauberlab {

double compensated_total(std::span<const double> xs) noexcept {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

namespace {

template <typename T>
T pairwise_impl(std::span<const T> xs) {
    if (xs.size() <= 8) {
        T acc{};
        for (const T& x : xs) acc += x;
        return acc;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_impl(xs.first(half)) + pairwise_impl(xs.subspan(half));
}

}  // namespace

double pairwise_total(std::span<const double> xs) noexcept {
    return pairwise_impl(xs);
}

std::complex<double> pairwise_total(std::span<const std::complex<double>> xs) noexcept {
    return pairwise_impl(xs);
}

}  // namespace tauberlab
