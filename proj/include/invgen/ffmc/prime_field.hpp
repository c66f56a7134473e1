#pragma once

#include <cstdint>

namespace invgen::ffmc {

/// Prime field F_p, p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
public:
    // degree > 1 (prime powers) is not enabled in this build and raises RangeError.
    explicit PrimeField(std::uint64_t p, int degree = 1);

    std::uint64_t p() const { return p_; }
    std::uint64_t q() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;  // throws on 0
    std::uint64_t reduce(std::int64_t v) const;

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace invgen::ffmc
