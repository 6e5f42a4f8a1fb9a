#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tauberlab/arith.hpp"
#include "tauberlab/pnt.hpp"
#include "tauberlab/tauber.hpp"
#include "tauberlab/zeta.hpp"

using namespace tauberlab;
using cd = std::complex<double>;

namespace {

const PrimeTable& table_1e6() {
    static const PrimeTable t = sieve_primes(1'000'000);
    return t;
}

StepFunction random_bounded_step_function(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> count_dist(1, 20);
    std::uniform_real_distribution<double> time_dist(0.05, 6.0);
    std::uniform_real_distribution<double> height_dist(0.1, 2.0);
    std::vector<double> times(count_dist(rng));
    for (double& t : times) t = time_dist(rng);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    std::vector<double> heights(times.size());
    for (double& h : heights) h = height_dist(rng);
    return StepFunction(std::move(times), std::move(heights), 8.0);
}

}  // namespace

TEST_CASE("pure simple pole recovers its residue almost exactly") {
    const ResidueEstimate est =
        residue_extrapolate([](double s) { return cd{1.0 / (s - 0.7), 0.0}; }, 0.7);
    CHECK(std::abs(est.value - 1.0) <= 1e-12);
    CHECK(est.uncertainty <= 1e-10);
    CHECK(est.levels.size() == 8);
    CHECK(est.table.back().size() == 8);
    CHECK(est.levels.front().h == 0.5);
    CHECK(est.levels.back().h == 0.5 / 128.0);
}

TEST_CASE("analytic remainder is cancelled by the extrapolation") {
    const ResidueEstimate est = residue_extrapolate(
        [](double s) { return cd{3.0 / (s - 2.0) + std::sin(s), 0.0}; }, 2.0);
    CHECK(std::abs(est.value - 3.0) <= 1e-8);
}

TEST_CASE("polynomial remainders of admissible degree are eliminated exactly") {
    std::mt19937_64 rng(0x5eed0301);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int levels = 3; levels <= 10; ++levels) {
        const int degree = levels - 2;
        std::vector<double> cs(static_cast<std::size_t>(degree) + 1);
        for (double& c : cs) c = coeff(rng);
        const double residue = 1.0 + std::abs(coeff(rng));
        const auto F = [&, residue](double s) {
            const double h = s - 1.0;
            double poly = 0.0;
            for (std::size_t i = cs.size(); i-- > 0;) poly = poly * h + cs[i];
            return cd{residue / h + poly, 0.0};
        };
        const ResidueEstimate est = residue_extrapolate(F, 1.0, 0.5, levels);
        CHECK(std::abs(est.value - residue) <= 1e-12 * (1.0 + residue));
    }
}

TEST_CASE("halving h0 stays within the reported uncertainty band") {
    const auto F = [](double s) { return cd{2.5 / (s - 1.0) + std::cos(s), 0.0}; };
    const ResidueEstimate a = residue_extrapolate(F, 1.0, 0.5, 8);
    const ResidueEstimate b = residue_extrapolate(F, 1.0, 0.25, 8);
    const double band = 10.0 * std::max({a.uncertainty, b.uncertainty, 1e-15});
    CHECK(std::abs(a.value - b.value) <= band);
}

TEST_CASE("evaluator failures carry the offending node") {
    const auto F = [](double s) -> cd {
        if (s > 1.3) throw std::runtime_error("synthetic failure");
        return cd{1.0 / (s - 1.0), 0.0};
    };
    try {
        residue_extrapolate(F, 1.0, 0.5, 8);
        FAIL("expected evaluator_error");
    } catch (const evaluator_error& e) {
        CHECK(e.node() == doctest::Approx(1.5));  // first node h0 = 0.5
    }
}

TEST_CASE("parameter validation") {
    const auto F = [](double s) { return cd{1.0 / s, 0.0}; };
    CHECK_THROWS_AS(residue_extrapolate(F, 0.0, -1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(residue_extrapolate(F, 0.0, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(residue_extrapolate(F, 0.0, 0.5, 13), std::invalid_argument);
}

TEST_CASE("zeta target: residue 1 at the pole") {
    const auto F = [](double s) {
        return zeta_log_deriv_scaled(ComplexPoint{s, 0.0}).value;
    };
    const ResidueEstimate est = residue_extrapolate(F, 1.0);
    CHECK(std::abs(est.value - 1.0) <= 1e-3);
    CHECK(est.uncertainty <= 1e-3);
}

TEST_CASE("bounded step functions: the transform residue at 0 is the limit of rho") {
    std::mt19937_64 rng(0x5eed0302);
    for (int i = 0; i < 50; ++i) {
        const StepFunction f = random_bounded_step_function(rng);
        // eventually-constant rho: L(s) = LS_T(s)/s with T past the last jump
        const auto F = [&](double s) {
            return laplace_stieltjes_truncated(f, ComplexPoint{s, 0.0}, f.t_max()) / s;
        };
        const ResidueEstimate est = residue_extrapolate(F, 0.0);
        CHECK(std::abs(est.value - f.total_mass()) <= 1e-8 * (1.0 + f.total_mass()));
    }
}

TEST_CASE("shifted transform check") {
    const StepFunction single({1.0}, {3.0}, 8.0);

    SUBCASE("alpha = 0 is the degenerate identity") {
        const ComplexPoint pts[] = {{1.0, 0.0}, {2.0, 3.0}, {0.5, -1.0}};
        CHECK(shifted_transform_check(single, 0.0, pts, 8.0) == 0.0);
    }

    SUBCASE("single jump, unit shift") {
        const ComplexPoint pts[] = {{2.0, 0.0}};
        CHECK(shifted_transform_check(single, 1.0, pts, 8.0) <= 1e-14);
    }

    SUBCASE("psi-based rho") {
        const StepFunction rho = build_rho(1e6, table_1e6());
        const ComplexPoint pts[] = {{1.5, 0.0}, {2.0, 0.0}, {2.0, 3.0}};
        CHECK(shifted_transform_check(rho, 1.0, pts, std::log(1e6)) <= 1e-10);
    }

    SUBCASE("sigma at or below alpha is rejected") {
        const ComplexPoint pts[] = {{1.0, 0.0}};
        CHECK_THROWS_AS(shifted_transform_check(single, 1.0, pts, 8.0), std::domain_error);
    }
}

TEST_CASE("limit table for an eventually constant function") {
    const StepFunction f({1.0}, {5.0}, 20.0);
    const auto F = [&](double s) {
        return laplace_stieltjes_truncated(f, ComplexPoint{s, 0.0}, f.t_max()) / s;
    };
    const ResidueEstimate ref = residue_extrapolate(F, 0.0);
    const std::vector<double> ts = {1.0, 2.0, 5.0, 10.0, 20.0};
    const LimitTable table = tauber_limit_table(f, 0.0, ts, ref);
    REQUIRE(table.rows.size() == 5);
    for (const LimitRow& row : table.rows) {
        CHECK(row.scaled_value == 5.0);
        CHECK(row.relative_gap <= 1e-8);
    }
    const std::vector<double> unsorted = {2.0, 1.0};
    CHECK_THROWS_AS(tauber_limit_table(f, 0.0, unsorted, ref), std::invalid_argument);
}

TEST_CASE("psi-based rho scaled by e^{-T} sits near 1 at the table edge") {
    const StepFunction rho = build_rho(1e6, table_1e6());
    ResidueEstimate ref;
    ref.alpha = 1.0;
    ref.value = 1.0;
    const std::vector<double> ts = {std::log(1e4), std::log(1e5), std::log(1e6)};
    const LimitTable table = tauber_limit_table(rho, 1.0, ts, ref);
    CHECK(table.rows.back().relative_gap <= 0.01);
}
