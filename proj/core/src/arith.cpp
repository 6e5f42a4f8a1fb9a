#include "tauberlab/arith.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "tauberlab/summation.hpp"

namespace tauberlab {

namespace {

std::uint64_t integer_sqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

bool PrimeTable::is_prime(std::uint64_t n) const {
    if (n > limit_) throw std::domain_error("is_prime: n exceeds sieve limit");
    if (n < 2) return false;
    if (n == 2) return true;
    if ((n & 1) == 0) return false;
    const std::uint64_t i = n >> 1;
    return (words_[i >> 6] >> (i & 63)) & 1;
}

std::uint64_t PrimeTable::count_primes(double x) const {
    if (x > static_cast<double>(limit_)) throw insufficient_table_error(x, limit_);
    if (x < 2.0) return 0;
    const auto m = static_cast<std::uint64_t>(std::floor(x));
    if (m < 3) return 1;
    const std::uint64_t last = (m - 1) >> 1;
    const std::uint64_t wlast = last >> 6;
    std::uint64_t count = 1;  // the prime 2
    for (std::uint64_t w = 0; w <= wlast; ++w) {
        std::uint64_t word = words_[w];
        if (w == wlast) word &= ~std::uint64_t{0} >> (63 - (last & 63));
        count += static_cast<std::uint64_t>(std::popcount(word));
    }
    return count;
}

std::vector<std::uint64_t> PrimeTable::primes_upto(std::uint64_t n) const {
    std::vector<std::uint64_t> out;
    for_each_prime(2, n, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

PrimeTable sieve_primes(std::uint64_t limit, std::uint64_t segment_candidates) {
    if (limit < 2) throw std::domain_error("sieve_primes: limit must be at least 2");
    if (segment_candidates == 0)
        throw std::invalid_argument("sieve_primes: segment size must be positive");

    PrimeTable table;
    table.limit_ = limit;
    const std::uint64_t nbits = (limit + 1) / 2;  // odd candidates 1, 3, ..., <= limit
    table.words_.assign((nbits + 63) / 64, ~std::uint64_t{0});
    table.words_[0] &= ~std::uint64_t{1};  // 1 is not prime

    // mask the slack beyond the last candidate
    if (nbits & 63) table.words_.back() &= ~std::uint64_t{0} >> (64 - (nbits & 63));

    // base primes up to sqrt(limit) via a plain byte sieve
    const std::uint64_t root = integer_sqrt(limit);
    std::vector<std::uint8_t> composite(root + 1, 0);
    std::vector<std::uint64_t> base;
    for (std::uint64_t p = 3; p <= root; p += 2) {
        if (composite[p]) continue;
        base.push_back(p);
        for (std::uint64_t q = p * p; q <= root; q += 2 * p) composite[q] = 1;
    }

    // Segments are disjoint index ranges of the shared bit array; the marked
    // set is identical for every segmentation.
    for (std::uint64_t seg_lo = 0; seg_lo < nbits; seg_lo += segment_candidates) {
        const std::uint64_t seg_hi = std::min(nbits, seg_lo + segment_candidates);
        const std::uint64_t lo_value = 2 * seg_lo + 1;
        const std::uint64_t hi_value = 2 * (seg_hi - 1) + 1;
        for (std::uint64_t p : base) {
            std::uint64_t start = ((lo_value + p - 1) / p) * p;
            if ((start & 1) == 0) start += p;
            if (start < p * p) start = p * p;
            for (std::uint64_t v = start; v <= hi_value; v += 2 * p)
                table.words_[v >> 7] &= ~(std::uint64_t{1} << ((v >> 1) & 63));
        }
    }
    return table;
}

double mangoldt(std::uint64_t n, const PrimeTable& table) {
    if (n < 1 || n > table.limit())
        throw std::domain_error("mangoldt: n outside the sieved range");
    if (n == 1) return 0.0;
    if (table.is_prime(n)) return std::log(static_cast<double>(n));

    // Composite prime powers p^k (k >= 2) have p <= sqrt(n); the smallest
    // divisor > 1 is automatically prime.
    std::uint64_t p = 0;
    if ((n & 1) == 0) {
        p = 2;
    } else {
        for (std::uint64_t d = 3; d * d <= n; d += 2) {
            if (n % d == 0) {
                p = d;
                break;
            }
        }
    }
    if (p == 0) return 0.0;  // unreachable: composite n has a factor <= sqrt(n)

    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

double PsiJumpList::psi(double x) const {
    if (x > cutoff_) throw std::domain_error("psi: x exceeds the enumerated cutoff");
    std::size_t lo = 0, hi = jumps_.size();  // first index with location > x
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (static_cast<double>(jumps_[mid].location) <= x)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo == 0 ? 0.0 : prefix_[lo - 1];
}

PsiJumpList psi_jumps(double cutoff, const PrimeTable& table) {
    if (!(cutoff >= 1.0)) throw std::domain_error("psi_jumps: cutoff must be >= 1");
    if (cutoff > static_cast<double>(table.limit()))
        throw insufficient_table_error(cutoff, table.limit());

    PsiJumpList out;
    out.cutoff_ = cutoff;
    const auto x_int = static_cast<std::uint64_t>(std::floor(cutoff));
    if (x_int >= 2) {
        table.for_each_prime(2, x_int, [&](std::uint64_t p) {
            const double w = std::log(static_cast<double>(p));
            unsigned __int128 pk = p;
            std::uint32_t k = 1;
            while (pk <= x_int) {
                out.jumps_.push_back({static_cast<std::uint64_t>(pk), p, k, w});
                pk *= p;
                ++k;
            }
        });
        std::sort(out.jumps_.begin(), out.jumps_.end(),
                  [](const PsiJump& a, const PsiJump& b) { return a.location < b.location; });
        for (std::size_t i = 1; i < out.jumps_.size(); ++i)
            assert(out.jumps_[i - 1].location < out.jumps_[i].location);

        out.prefix_.reserve(out.jumps_.size());
        CompensatedSum acc;
        for (const PsiJump& j : out.jumps_) {
            acc.add(j.weight);
            out.prefix_.push_back(acc.value());
        }
    }
    return out;
}

std::uint64_t pi_count(double x, const PrimeTable& table) {
    return table.count_primes(x);
}

std::vector<double> psi_values(std::span<const double> ascending_x, const PrimeTable& table) {
    std::vector<double> out(ascending_x.size());
    if (ascending_x.empty()) return out;
    for (std::size_t i = 1; i < ascending_x.size(); ++i)
        if (ascending_x[i] < ascending_x[i - 1])
            throw std::invalid_argument("psi_values: sample points must be ascending");
    const double x_max = ascending_x.back();
    if (x_max > static_cast<double>(table.limit()))
        throw insufficient_table_error(x_max, table.limit());

    const std::uint64_t m = x_max < 2.0 ? 1 : static_cast<std::uint64_t>(std::floor(x_max));

    // Higher powers p^k, k >= 2, are few: p <= sqrt(m).
    std::vector<std::pair<std::uint64_t, double>> powers;
    if (m >= 4) {
        table.for_each_prime(2, integer_sqrt(m), [&](std::uint64_t p) {
            const double w = std::log(static_cast<double>(p));
            unsigned __int128 pk = static_cast<unsigned __int128>(p) * p;
            while (pk <= m) {
                powers.emplace_back(static_cast<std::uint64_t>(pk), w);
                pk *= p;
            }
        });
        std::sort(powers.begin(), powers.end());
    }

    CompensatedSum acc;
    std::size_t xi = 0, pw = 0;
    auto flush_below = [&](double loc) {
        while (xi < out.size() && ascending_x[xi] < loc) out[xi++] = acc.value();
    };
    if (m >= 2) {
        table.for_each_prime(2, m, [&](std::uint64_t p) {
            while (pw < powers.size() && powers[pw].first < p) {
                flush_below(static_cast<double>(powers[pw].first));
                acc.add(powers[pw].second);
                ++pw;
            }
            flush_below(static_cast<double>(p));
            acc.add(std::log(static_cast<double>(p)));
        });
    }
    while (pw < powers.size()) {
        flush_below(static_cast<double>(powers[pw].first));
        acc.add(powers[pw].second);
        ++pw;
    }
    while (xi < out.size()) out[xi++] = acc.value();
    return out;
}

}  // namespace tauberlab
