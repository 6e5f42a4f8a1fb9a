#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tauberlab {

// Query beyond the sieved range; the caller must re-sieve with a larger limit.
class insufficient_table_error : public std::domain_error {
public:
    insufficient_table_error(double requested, std::uint64_t limit)
        : std::domain_error("requested " + std::to_string(requested) +
                            " exceeds sieve limit " + std::to_string(limit)),
          requested_(requested),
          limit_(limit) {}

    double requested() const noexcept { return requested_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    double requested_;
    std::uint64_t limit_;
};

// sigma <= alpha: the discarded tail admits no finite exponential bound.
class no_certificate_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation at a pole of the target function.
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Argument outside the half-plane where the evaluation is defined or validated.
class out_of_region_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// |zeta(s)| fell under the near-zero guard; refusing to divide by it.
class near_zero_error : public std::runtime_error {
public:
    near_zero_error(const std::string& what, double magnitude)
        : std::runtime_error(what), magnitude_(magnitude) {}

    double magnitude() const noexcept { return magnitude_; }

private:
    double magnitude_;
};

// A caller-supplied evaluator threw; identifies the offending node.
class evaluator_error : public std::runtime_error {
public:
    evaluator_error(double node, const std::string& cause)
        : std::runtime_error("evaluator failed at s = " + std::to_string(node) +
                             ": " + cause),
          node_(node) {}

    double node() const noexcept { return node_; }

private:
    double node_;
};

}  // namespace tauberlab
