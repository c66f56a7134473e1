#include "invgen/ffmc/prime_field.hpp"

#include <string>

#include "invgen/errors.hpp"

namespace invgen::ffmc {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t p, int degree) : p_(p) {
    if (degree != 1) throw RangeError("prime-power fields are not enabled; use a prime q");
    if (p >= (1ULL << 31)) throw RangeError("field characteristic must be below 2^31");
    if (!is_prime(p)) throw RangeError("q = " + std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_, b = a % p_;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw ContractError("inverse of zero");
    return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

}  // namespace invgen::ffmc
