#include "tauberlab/zeta.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tauberlab/summation.hpp"

namespace tauberlab {

using cd = std::complex<double>;

EMParams EMParams::for_point(ComplexPoint s) noexcept {
    const int n = static_cast<int>(std::ceil(10.0 + 2.0 * std::abs(s.t)));
    return {n < 20 ? 20 : n, 10};
}

namespace {

void validate(ComplexPoint s, const EMParams& params) {
    if (!(s.sigma > 0.0))
        throw out_of_region_error("zeta_em: defined on sigma > 0 only");
    if (s.sigma == 1.0 && s.t == 0.0) throw pole_error("zeta_em: s = 1 is the pole");
    if (params.series_cutoff < 2)
        throw std::invalid_argument("EMParams: series cutoff must be >= 2");
    if (params.correction_terms < 1 || params.correction_terms > 15)
        throw std::invalid_argument("EMParams: correction terms must lie in [1, 15]");
}

}  // namespace

ZetaValue zeta_em(ComplexPoint sp, const EMParams& params) {
    validate(sp, params);
    const cd s = sp.value();
    const int n_cut = params.series_cutoff;
    const int m = params.correction_terms;

    std::vector<cd> terms;
    terms.reserve(static_cast<std::size_t>(n_cut));
    terms.push_back(1.0);
    for (int n = 2; n < n_cut; ++n)
        terms.push_back(std::exp(-s * std::log(static_cast<double>(n))));
    cd acc = pairwise_total(std::span<const cd>(terms));

    const double ln_n = std::log(static_cast<double>(n_cut));
    acc += std::exp((1.0 - s) * ln_n) / (s - 1.0);
    acc += 0.5 * std::exp(-s * ln_n);

    // corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    cd poch = s;                                   // (s)_1
    double factorial = 2.0;                        // (2k)!
    cd npow = std::exp(-(s + 1.0) * ln_n);         // N^{-s-1}
    const double inv_n2 = 1.0 / (static_cast<double>(n_cut) * static_cast<double>(n_cut));
    for (int k = 1; k <= m; ++k) {
        if (k > 1) {
            poch *= (s + static_cast<double>(2 * k - 3)) * (s + static_cast<double>(2 * k - 2));
            factorial *= static_cast<double>(2 * k) * static_cast<double>(2 * k - 1);
            npow *= inv_n2;
        }
        acc += kBernoulliEven[static_cast<std::size_t>(k - 1)] / factorial * poch * npow;
    }

    const cd poch_next =
        poch * (s + static_cast<double>(2 * m - 1)) * (s + static_cast<double>(2 * m));
    const double factorial_next =
        factorial * static_cast<double>(2 * m + 2) * static_cast<double>(2 * m + 1);
    const double omitted = std::abs(kBernoulliEven[static_cast<std::size_t>(m)] /
                                    factorial_next * poch_next * (npow * inv_n2));
    const double envelope =
        std::abs(s + static_cast<double>(2 * m + 1)) / (sp.sigma + static_cast<double>(2 * m + 1));
    return {acc, omitted * envelope};
}

ZetaValue zeta_prime_em(ComplexPoint sp, const EMParams& params) {
    validate(sp, params);
    const cd s = sp.value();
    const int n_cut = params.series_cutoff;
    const int m = params.correction_terms;

    std::vector<cd> terms;
    terms.reserve(static_cast<std::size_t>(n_cut));
    for (int n = 2; n < n_cut; ++n) {
        const double ln = std::log(static_cast<double>(n));
        terms.push_back(-ln * std::exp(-s * ln));
    }
    cd acc = pairwise_total(std::span<const cd>(terms));

    const double ln_n = std::log(static_cast<double>(n_cut));
    const cd pole_term = std::exp((1.0 - s) * ln_n) / (s - 1.0);
    acc += -ln_n * pole_term - pole_term / (s - 1.0);
    acc += -ln_n * 0.5 * std::exp(-s * ln_n);

    // d/ds [P(s) N^{-s-2k+1}] = (P' - ln(N) P) N^{-s-2k+1}, with the
    // Pochhammer product and its derivative tracked incrementally
    cd poch = s;
    cd poch_d = 1.0;
    double factorial = 2.0;
    cd npow = std::exp(-(s + 1.0) * ln_n);
    const double inv_n2 = 1.0 / (static_cast<double>(n_cut) * static_cast<double>(n_cut));
    for (int k = 1; k <= m; ++k) {
        if (k > 1) {
            const cd fa = s + static_cast<double>(2 * k - 3);
            const cd fb = s + static_cast<double>(2 * k - 2);
            poch_d = poch_d * fa * fb + poch * (fa + fb);
            poch *= fa * fb;
            factorial *= static_cast<double>(2 * k) * static_cast<double>(2 * k - 1);
            npow *= inv_n2;
        }
        acc += kBernoulliEven[static_cast<std::size_t>(k - 1)] / factorial *
               (poch_d - ln_n * poch) * npow;
    }

    const cd fa = s + static_cast<double>(2 * m - 1);
    const cd fb = s + static_cast<double>(2 * m);
    const cd poch_d_next = poch_d * fa * fb + poch * (fa + fb);
    const cd poch_next = poch * fa * fb;
    const double factorial_next =
        factorial * static_cast<double>(2 * m + 2) * static_cast<double>(2 * m + 1);
    const double omitted =
        std::abs(kBernoulliEven[static_cast<std::size_t>(m)] / factorial_next *
                 (poch_d_next - ln_n * poch_next) * (npow * inv_n2));
    const double envelope =
        std::abs(s + static_cast<double>(2 * m + 1)) / (sp.sigma + static_cast<double>(2 * m + 1));
    return {acc, omitted * envelope};
}

ScaledLogDeriv zeta_log_deriv_scaled(ComplexPoint sp, const EMParams& params) {
    if (sp.sigma == 0.0 && sp.t == 0.0)
        throw pole_error("zeta_log_deriv_scaled: the 1/s factor has a pole at s = 0");
    const ZetaValue z = zeta_em(sp, params);
    const ZetaValue zp = zeta_prime_em(sp, params);
    const double z_abs = std::abs(z.value);
    if (z_abs < kZetaNearZeroGuard)
        throw near_zero_error(
            "zeta_log_deriv_scaled: |zeta(s)| under the near-zero guard; refusing to amplify",
            z_abs);
    const cd s = sp.value();
    const cd value = -zp.value / (s * z.value);
    const double s_abs = std::abs(s);
    const double certificate =
        zp.error_estimate / (s_abs * z_abs) + std::abs(value) * z.error_estimate / z_abs;
    return {value, certificate};
}

LineScanResult line_min_scan(double t_lo, double t_hi, double step) {
    if (!(t_lo > 0.0)) throw std::invalid_argument("line_min_scan: t_lo must be > 0");
    if (!(t_hi >= t_lo)) throw std::invalid_argument("line_min_scan: t_hi must be >= t_lo");
    if (!(step > 0.0)) throw std::invalid_argument("line_min_scan: step must be > 0");

    const auto count =
        static_cast<std::size_t>(std::floor((t_hi - t_lo) / step + 1e-9)) + 1;
    LineScanResult out;
    out.points = count;
    out.step = step;
    out.min_abs = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < count; ++k) {
        const double t = t_lo + static_cast<double>(k) * step;
        const double a = std::abs(zeta_em({1.0, t}).value);
        if (a < out.min_abs) {
            out.min_abs = a;
            out.argmin_t = t;
        }
    }
    return out;
}

}  // namespace tauberlab
