#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "tauberlab/errors.hpp"

namespace tauberlab {

inline constexpr std::uint64_t kDefaultSegmentCandidates = std::uint64_t{1} << 20;

// Primality of [2, limit], one bit per odd candidate plus the special case 2.
// Built once by sieve_primes, immutable afterwards; safe for concurrent reads.
class PrimeTable {
public:
    std::uint64_t limit() const noexcept { return limit_; }

    // n <= limit; false below 2
    bool is_prime(std::uint64_t n) const;

    // #{p prime : p <= x}; x <= limit
    std::uint64_t count_primes(double x) const;

    std::vector<std::uint64_t> primes_upto(std::uint64_t n) const;

    // Calls fn(p) for every prime p in [lo, hi], ascending.
    template <typename Fn>
    void for_each_prime(std::uint64_t lo, std::uint64_t hi, Fn&& fn) const {
        if (hi > limit_) throw insufficient_table_error(static_cast<double>(hi), limit_);
        if (lo <= 2 && 2 <= hi) fn(std::uint64_t{2});
        if (hi < 3) return;
        const std::uint64_t first = lo < 3 ? 3 : (lo | 1);
        if (first > hi) return;
        std::uint64_t i = first >> 1;
        const std::uint64_t last = (hi - 1) >> 1;  // index of largest odd <= hi
        std::uint64_t wi = i >> 6;
        std::uint64_t word = words_[wi] & (~std::uint64_t{0} << (i & 63));
        const std::uint64_t wlast = last >> 6;
        for (;;) {
            if (wi == wlast) word &= ~std::uint64_t{0} >> (63 - (last & 63));
            while (word != 0) {
                const int b = std::countr_zero(word);
                fn(((wi << 6) + static_cast<std::uint64_t>(b)) * 2 + 1);
                word &= word - 1;
            }
            if (wi == wlast) break;
            word = words_[++wi];
        }
    }

    // Tables from equal limits are bit-identical regardless of segmentation.
    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    friend PrimeTable sieve_primes(std::uint64_t, std::uint64_t);

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> words_;  // bit i <-> 2i+1 is prime
};

// Segmented sieve of Eratosthenes. segment_candidates is the number of odd
// candidates processed per segment; the resulting table does not depend on it.
PrimeTable sieve_primes(std::uint64_t limit,
                        std::uint64_t segment_candidates = kDefaultSegmentCandidates);

// log p if n = p^k, else 0. 1 <= n <= table.limit().
double mangoldt(std::uint64_t n, const PrimeTable& table);

struct PsiJump {
    std::uint64_t location;  // p^k
    std::uint64_t prime;
    std::uint32_t exponent;
    double weight;  // log p, computed once per prime
};

// Every jump of the Chebyshev psi function up to a cutoff, sorted ascending by
// location. Distinct (p, k) give distinct locations by unique factorization;
// construction asserts it. Prefix sums are compensated so that psi(x) is the
// exact-order partial sum of the weights.
class PsiJumpList {
public:
    PsiJumpList() = default;

    double cutoff() const noexcept { return cutoff_; }
    const std::vector<PsiJump>& jumps() const noexcept { return jumps_; }
    std::span<const double> prefix_sums() const noexcept { return prefix_; }

    // sum of weights at locations <= x; requires x <= cutoff
    double psi(double x) const;

    double total() const noexcept { return prefix_.empty() ? 0.0 : prefix_.back(); }

private:
    friend PsiJumpList psi_jumps(double, const PrimeTable&);

    double cutoff_ = 1.0;
    std::vector<PsiJump> jumps_;
    std::vector<double> prefix_;
};

// Complete enumeration of prime powers <= cutoff. 1 <= cutoff <= table.limit().
PsiJumpList psi_jumps(double cutoff, const PrimeTable& table);

// Exact count of primes <= x.
std::uint64_t pi_count(double x, const PrimeTable& table);

// psi at each ascending sample point, streamed off the table without
// materializing the jump list; suited to limits where the list would not fit.
std::vector<double> psi_values(std::span<const double> ascending_x, const PrimeTable& table);

}  // namespace tauberlab
