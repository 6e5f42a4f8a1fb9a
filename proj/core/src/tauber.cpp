#include "tauberlab/tauber.hpp"

#include <cmath>
#include <stdexcept>

namespace tauberlab {

ResidueEstimate residue_extrapolate(const RealAxisEvaluator& F, double alpha, double h0,
                                    int levels) {
    if (!(h0 > 0.0)) throw std::invalid_argument("residue_extrapolate: h0 must be > 0");
    if (levels < 2 || levels > 12)
        throw std::invalid_argument("residue_extrapolate: levels must lie in [2, 12]");

    ResidueEstimate est;
    est.alpha = alpha;
    est.levels.reserve(static_cast<std::size_t>(levels));
    est.table.reserve(static_cast<std::size_t>(levels));

    for (int k = 0; k < levels; ++k) {
        const double h = std::ldexp(h0, -k);
        std::complex<double> fv;
        try {
            fv = F(alpha + h);
        } catch (const std::exception& e) {
            throw evaluator_error(alpha + h, e.what());
        }
        const double raw = h * fv.real();
        est.levels.push_back({h, raw});

        std::vector<double> row(static_cast<std::size_t>(k) + 1);
        row[0] = raw;
        for (int j = 1; j <= k; ++j) {
            const double pw = std::ldexp(1.0, j);  // 2^j
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                (row[static_cast<std::size_t>(j - 1)] -
                 est.table[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)]) /
                    (pw - 1.0);
        }
        est.table.push_back(std::move(row));
    }

    const auto last = static_cast<std::size_t>(levels - 1);
    est.value = est.table[last][last];
    est.uncertainty = std::abs(est.table[last][last] - est.table[last - 1][last - 1]);
    return est;
}

double shifted_transform_check(const StepFunction& f, double alpha,
                               std::span<const ComplexPoint> s_values, double T) {
    double worst = 0.0;
    for (const ComplexPoint& s : s_values) {
        if (!(s.sigma > alpha))
            throw std::domain_error("shifted_transform_check: requires sigma > alpha");
        const std::complex<double> lhs = laplace_truncated(f, s.value(), T);
        const std::complex<double> z = s.value() - alpha;  // argument seen by L_g
        const std::complex<double> rhs = laplace_truncated(f, z + alpha, T);
        const double scale = 1.0 + std::max(std::abs(lhs), std::abs(rhs));
        const double residual = std::abs(lhs - rhs) / scale;
        if (residual > worst) worst = residual;
    }
    return worst;
}

LimitTable tauber_limit_table(const StepFunction& f, double alpha,
                              std::span<const double> abscissae,
                              const ResidueEstimate& reference) {
    for (std::size_t i = 1; i < abscissae.size(); ++i)
        if (!(abscissae[i - 1] < abscissae[i]))
            throw std::invalid_argument("tauber_limit_table: abscissae must increase");

    LimitTable out;
    out.rows.reserve(abscissae.size());
    for (double T : abscissae) {
        const double g = f.eval(T) * std::exp(-alpha * T);
        const double ref = reference.value;
        const double gap = ref != 0.0 ? std::abs(g - ref) / std::abs(ref) : std::abs(g);
        out.rows.push_back({T, g, ref, gap});
    }
    return out;
}

}  // namespace tauberlab
