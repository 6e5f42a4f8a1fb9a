#include "tauberlab/stepfn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "tauberlab/summation.hpp"

namespace tauberlab {

StepFunction::StepFunction(std::vector<double> jump_times, std::vector<double> jump_heights)
    : times_(std::move(jump_times)), heights_(std::move(jump_heights)) {
    t_max_ = times_.empty() ? 0.0 : times_.back();
    finish();
}

StepFunction::StepFunction(std::vector<double> jump_times, std::vector<double> jump_heights,
                           double t_max)
    : times_(std::move(jump_times)), heights_(std::move(jump_heights)), t_max_(t_max) {
    finish();
}

void StepFunction::finish() {
    if (times_.size() != heights_.size())
        throw std::invalid_argument("StepFunction: times and heights differ in length");
    if (!std::isfinite(t_max_) || t_max_ < 0.0)
        throw std::invalid_argument("StepFunction: t_max must be finite and nonnegative");
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (!std::isfinite(times_[i]) || times_[i] <= 0.0)
            throw std::invalid_argument("StepFunction: jump times must be finite and > 0");
        if (!std::isfinite(heights_[i]) || heights_[i] <= 0.0)
            throw std::invalid_argument("StepFunction: jump heights must be finite and > 0");
        if (i > 0 && !(times_[i - 1] < times_[i]))
            throw std::invalid_argument("StepFunction: jump times must be strictly increasing");
    }
    if (!times_.empty() && t_max_ < times_.back())
        throw std::invalid_argument("StepFunction: t_max precedes the last jump");

    prefix_.clear();
    prefix_.reserve(heights_.size());
    CompensatedSum acc;
    for (double h : heights_) {
        acc.add(h);
        prefix_.push_back(acc.value());
    }
}

double StepFunction::eval(double t) const {
    if (!(t >= 0.0) || t > t_max_)
        throw std::domain_error("StepFunction::eval: argument outside [0, t_max]");
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    const auto k = static_cast<std::size_t>(it - times_.begin());
    return k == 0 ? 0.0 : prefix_[k - 1];
}

StepFunction merge(const StepFunction& a, const StepFunction& b) {
    std::vector<double> times, heights;
    times.reserve(a.jump_count() + b.jump_count());
    heights.reserve(a.jump_count() + b.jump_count());
    std::size_t i = 0, j = 0;
    const auto ta = a.jump_times(), ha = a.jump_heights();
    const auto tb = b.jump_times(), hb = b.jump_heights();
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && ta[i] < tb[j])) {
            times.push_back(ta[i]);
            heights.push_back(ha[i]);
            ++i;
        } else if (i == ta.size() || tb[j] < ta[i]) {
            times.push_back(tb[j]);
            heights.push_back(hb[j]);
            ++j;
        } else {
            times.push_back(ta[i]);
            heights.push_back(ha[i] + hb[j]);
            ++i;
            ++j;
        }
    }
    return StepFunction(std::move(times), std::move(heights),
                        std::max(a.t_max(), b.t_max()));
}

namespace {

// integral of e^{-wt} over [a, b); switches to a short series when |w|(b-a)
// is tiny, where the direct difference of exponentials cancels
std::complex<double> interval_factor(std::complex<double> w, double a, double b) {
    const double width = b - a;
    if (w == 0.0) return width;
    const std::complex<double> ea = std::exp(-w * a);
    if (std::abs(w) * width < 1e-8) {
        const std::complex<double> z = w * width;
        return ea * width * (1.0 - z / 2.0 + z * z / 6.0);
    }
    return (ea - std::exp(-w * b)) / w;
}

}  // namespace

std::complex<double> laplace_truncated(const StepFunction& f, std::complex<double> w,
                                       double T) {
    if (!(T >= 0.0) || T > f.t_max())
        throw std::domain_error("laplace_truncated: T outside [0, t_max]");
    const auto times = f.jump_times();
    const auto prefix = f.prefix_sums();
    const auto it = std::upper_bound(times.begin(), times.end(), T);
    const auto k = static_cast<std::size_t>(it - times.begin());

    std::vector<std::complex<double>> terms;
    terms.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double a = times[i];
        const double b = i + 1 < k ? times[i + 1] : T;
        if (!(b > a)) continue;
        terms.push_back(prefix[i] * interval_factor(w, a, b));
    }
    return pairwise_total(std::span<const std::complex<double>>(terms));
}

std::complex<double> laplace_truncated(const StepFunction& f, ComplexPoint s, double T) {
    return laplace_truncated(f, s.value(), T);
}

std::complex<double> laplace_stieltjes_truncated(const StepFunction& f, ComplexPoint s,
                                                 double T) {
    if (!(T >= 0.0) || T > f.t_max())
        throw std::domain_error("laplace_stieltjes_truncated: T outside [0, t_max]");
    if (s.is_zero()) return f.eval(T);  // total mass; the s = 0 limit object
    const std::complex<double> w = s.value();
    const auto times = f.jump_times();
    const auto heights = f.jump_heights();
    const auto it = std::upper_bound(times.begin(), times.end(), T);
    const auto k = static_cast<std::size_t>(it - times.begin());

    std::vector<std::complex<double>> terms;
    terms.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        terms.push_back(heights[i] * std::exp(-w * times[i]));
    return pairwise_total(std::span<const std::complex<double>>(terms));
}

double parts_identity_residual(const StepFunction& f, ComplexPoint s, double T) {
    const std::complex<double> w = s.value();
    const std::complex<double> lst = laplace_stieltjes_truncated(f, s, T);
    const std::complex<double> lt = laplace_truncated(f, w, T);
    const std::complex<double> boundary = f.eval(T) * std::exp(-w * T);
    return std::abs(lst - boundary - w * lt);
}

TailCertificate tail_bound(double growth_C, double growth_alpha, ComplexPoint s, double T) {
    if (!(growth_C >= 0.0))
        throw std::domain_error("tail_bound: growth constant must be nonnegative");
    if (!(s.sigma > growth_alpha))
        throw no_certificate_error(
            "tail_bound: sigma <= alpha, the discarded tail has no finite bound");
    TailCertificate cert;
    cert.T = T;
    cert.growth_alpha = growth_alpha;
    cert.growth_C = growth_C;
    cert.bound = growth_C * std::exp((growth_alpha - s.sigma) * T) / (s.sigma - growth_alpha);
    return cert;
}

double total_variation_scaled(const StepFunction& f, double alpha, double T) {
    if (!(T >= 0.0) || T > f.t_max())
        throw std::domain_error("total_variation_scaled: T outside [0, t_max]");
    if (T == 0.0) return 0.0;
    std::vector<double> partition;
    partition.reserve(f.jump_count() + kVariationGridPoints + 2);
    partition.push_back(0.0);
    for (double t : f.jump_times()) {
        if (t > T) break;
        partition.push_back(t);
    }
    for (std::size_t i = 1; i < kVariationGridPoints; ++i)
        partition.push_back(T * static_cast<double>(i) /
                            static_cast<double>(kVariationGridPoints));
    partition.push_back(T);
    std::sort(partition.begin(), partition.end());
    partition.erase(std::unique(partition.begin(), partition.end()), partition.end());
    return total_variation_scaled(f, alpha, partition);
}

double total_variation_scaled(const StepFunction& f, double alpha,
                              std::span<const double> partition) {
    if (!(alpha >= 0.0))
        throw std::domain_error("total_variation_scaled: alpha must be nonnegative");
    if (partition.size() < 2)
        throw std::invalid_argument("total_variation_scaled: partition needs two points");
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (!(partition[i] >= 0.0) || partition[i] > f.t_max())
            throw std::domain_error("total_variation_scaled: partition point outside domain");
        if (i > 0 && !(partition[i - 1] < partition[i]))
            throw std::invalid_argument("total_variation_scaled: partition must increase");
    }
    CompensatedSum acc;
    double prev = f.eval(partition[0]) * std::exp(-alpha * partition[0]);
    for (std::size_t i = 1; i < partition.size(); ++i) {
        const double cur = f.eval(partition[i]) * std::exp(-alpha * partition[i]);
        acc.add(std::abs(cur - prev));
        prev = cur;
    }
    return acc.value();
}

void write_csv(const StepFunction& f, std::ostream& os) {
    os << "t,h\n";
    char buf[64];
    const auto times = f.jump_times();
    const auto heights = f.jump_heights();
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", times[i], heights[i]);
        os << buf;
    }
}

StepFunction read_step_function_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("step function csv: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t,h") throw std::runtime_error("step function csv: header must be 't,h'");

    std::vector<double> times, heights;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("step function csv: malformed row '" + line + "'");
        char* end = nullptr;
        const double t = std::strtod(line.c_str(), &end);
        if (end != line.c_str() + comma)
            throw std::runtime_error("step function csv: bad jump time in '" + line + "'");
        const double h = std::strtod(line.c_str() + comma + 1, &end);
        if (end != line.c_str() + line.size())
            throw std::runtime_error("step function csv: bad jump height in '" + line + "'");
        times.push_back(t);
        heights.push_back(h);
    }
    return StepFunction(std::move(times), std::move(heights));
}

}  // namespace tauberlab
