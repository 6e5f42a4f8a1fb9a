#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tauberlab/arith.hpp"
#include "tauberlab/zeta.hpp"

using namespace tauberlab;
using cd = std::complex<double>;

TEST_CASE("zeta(2) against the analytic identity") {
    const double pi = std::numbers::pi;
    const ZetaValue z = zeta_em(ComplexPoint{2.0, 0.0});
    CHECK(std::abs(z.value - cd{pi * pi / 6.0, 0.0}) <= 1e-10);
    CHECK(z.error_estimate < 1e-12);
}

TEST_CASE("zeta(3) and zeta(4) against brute-force partial sums") {
    const ZetaValue z3 = zeta_em(ComplexPoint{3.0, 0.0});
    const cd direct = oracles::zeta_partial_sum(cd{3.0, 0.0}, 10'000'000);
    CHECK(std::abs(z3.value - direct) <= 1e-10);

    const double pi = std::numbers::pi;
    const ZetaValue z4 = zeta_em(ComplexPoint{4.0, 0.0});
    CHECK(std::abs(z4.value - cd{pi * pi * pi * pi / 90.0, 0.0}) <= 1e-12);
}

TEST_CASE("zeta at a complex point against a partial sum") {
    const ComplexPoint s{3.0, 2.0};
    const ZetaValue z = zeta_em(s);
    const cd direct = oracles::zeta_partial_sum(s.value(), 100'000);
    // tail of the direct sum is below K^{-2}/2 = 5e-11
    CHECK(std::abs(z.value - direct) <= 2e-10);
}

TEST_CASE("simple pole of residue 1 at s = 1") {
    double drift = 1.0;
    for (double eps : {1e-2, 1e-4, 1e-6}) {
        const ZetaValue z = zeta_em(ComplexPoint{1.0 + eps, 0.0});
        const double next = std::abs(eps * z.value - 1.0);
        CHECK(next < drift);
        drift = next;
    }
    CHECK(drift <= 1e-5);
    // |(s-1) zeta(s) - 1| <= 10 |s-1| near the pole, off-axis included
    for (const cd offset : {cd{0.1, 0.0}, cd{0.01, 0.0}, cd{0.0, 0.1}, cd{0.05, -0.05}}) {
        const cd s = 1.0 + offset;
        const ZetaValue z = zeta_em(ComplexPoint{s.real(), s.imag()});
        CHECK(std::abs(offset * z.value - 1.0) <= 10.0 * std::abs(offset));
    }
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(zeta_em(ComplexPoint{1.0, 0.0}), pole_error);
    CHECK_THROWS_AS(zeta_em(ComplexPoint{0.0, 2.0}), out_of_region_error);
    CHECK_THROWS_AS(zeta_em(ComplexPoint{-1.0, 0.0}), out_of_region_error);
    CHECK_THROWS_AS(zeta_em(ComplexPoint{2.0, 0.0}, EMParams{1, 10}), std::invalid_argument);
    CHECK_THROWS_AS(zeta_em(ComplexPoint{2.0, 0.0}, EMParams{20, 16}), std::invalid_argument);
    CHECK_THROWS_AS(zeta_log_deriv_scaled(ComplexPoint{0.0, 0.0}), pole_error);
    CHECK_THROWS_AS(zeta_log_deriv_scaled(ComplexPoint{1.0, 0.0}), pole_error);
}

TEST_CASE("zeta'(2) against the differentiated Dirichlet series") {
    const ZetaValue zp = zeta_prime_em(ComplexPoint{2.0, 0.0});
    const double direct = oracles::zeta_prime_series_real(2.0, 10'000'000);
    CHECK(std::abs(zp.value.real() - direct) <= 1e-8);
    CHECK(std::abs(zp.value.imag()) <= 1e-14);
}

TEST_CASE("zeta' against central finite differences on random points") {
    std::mt19937_64 rng(0x5eed0201);
    std::uniform_real_distribution<double> sigma_dist(0.5, 4.0);
    std::uniform_real_distribution<double> t_dist(-50.0, 50.0);
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
        const ComplexPoint s{sigma_dist(rng), t_dist(rng)};
        const EMParams params = EMParams::for_point(s);
        const cd up = zeta_em(ComplexPoint{s.sigma + h, s.t}, params).value;
        const cd down = zeta_em(ComplexPoint{s.sigma - h, s.t}, params).value;
        const cd fd = (up - down) / (2.0 * h);
        const cd exact = zeta_prime_em(s, params).value;
        CHECK(std::abs(exact - fd) <= 1e-6 * std::abs(exact));
    }
}

TEST_CASE("conjugate symmetry") {
    std::mt19937_64 rng(0x5eed0202);
    std::uniform_real_distribution<double> sigma_dist(0.5, 4.0);
    std::uniform_real_distribution<double> t_dist(0.1, 40.0);
    for (int i = 0; i < 50; ++i) {
        const ComplexPoint s{sigma_dist(rng), t_dist(rng)};
        const cd z = zeta_em(s).value;
        const cd zc = zeta_em(ComplexPoint{s.sigma, -s.t}).value;
        CHECK(std::abs(zc - std::conj(z)) <= 1e-15 * std::abs(z));
        const cd p = zeta_prime_em(s).value;
        const cd pc = zeta_prime_em(ComplexPoint{s.sigma, -s.t}).value;
        CHECK(std::abs(pc - std::conj(p)) <= 1e-15 * std::abs(p));
    }
}

TEST_CASE("doubling the cutoff moves the value by less than the reported estimate") {
    std::mt19937_64 rng(0x5eed0203);
    std::uniform_real_distribution<double> sigma_dist(0.5, 4.0);
    std::uniform_real_distribution<double> t_dist(-50.0, 50.0);
    for (int i = 0; i < 100; ++i) {
        const ComplexPoint s{sigma_dist(rng), t_dist(rng)};
        // a deliberately coarse cutoff so truncation dominates rounding
        const int n0 = std::max(12, static_cast<int>(std::ceil(std::abs(s.t) / 2.0)));
        const EMParams coarse{n0, 3};
        const EMParams fine{2 * n0, 3};
        const ZetaValue a = zeta_em(s, coarse);
        const ZetaValue b = zeta_em(s, fine);
        const double floor = 64 * 1e-16 * (1.0 + std::abs(a.value));
        CHECK(std::abs(a.value - b.value) <= a.error_estimate + floor);
    }
}

TEST_CASE("scaled log-derivative against the von Mangoldt Dirichlet series") {
    // F(2) = (1/2) sum Lambda(n) / n^2, truncated with its own tail envelope
    const std::uint64_t cutoff = 200'000;
    long double series = 0.0L;
    for (std::uint64_t n = cutoff; n >= 2; --n) {
        const double lam = oracles::mangoldt_by_factoring(n);
        if (lam != 0.0)
            series += static_cast<long double>(lam) /
                      (static_cast<long double>(n) * static_cast<long double>(n));
    }
    const double tail = 2.08 / static_cast<double>(cutoff);  // psi <= 1.04 x by parts
    const ScaledLogDeriv f = zeta_log_deriv_scaled(ComplexPoint{2.0, 0.0});
    CHECK(std::abs(f.value.real() - static_cast<double>(series) / 2.0) <=
          tail / 2.0 + f.certificate);
    CHECK(std::abs(f.value.imag()) <= 1e-14);
}

TEST_CASE("(sigma - 1) F(sigma) approaches the residue 1") {
    double prev_gap = 1.0;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        const ScaledLogDeriv f = zeta_log_deriv_scaled(ComplexPoint{1.0 + eps, 0.0});
        const double gap = std::abs(eps * f.value.real() - 1.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap <= 2e-3);
}

TEST_CASE("line scan stays positive") {
    const LineScanResult single = line_min_scan(14.0, 14.0, 0.01);
    CHECK(single.points == 1);
    CHECK(single.min_abs > 0.0);
    CHECK(single.argmin_t == 14.0);

    // window around the ordinate of the first critical zero: the zero sits on
    // sigma = 1/2, the 1-line stays clear of it
    const LineScanResult window = line_min_scan(14.0, 14.3, 0.001);
    CHECK(window.min_abs > 0.0);
    CHECK(window.points == 301);

    CHECK_THROWS_AS(line_min_scan(-1.0, 2.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(line_min_scan(2.0, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(line_min_scan(1.0, 2.0, 0.0), std::invalid_argument);
}
