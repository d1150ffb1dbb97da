// Arbitrary-precision integer alias and small helpers on top of GMP.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace pdyn {

using BigInt = mpz_class;

/// base^exp for a non-negative machine exponent.
inline BigInt pow_ui(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// Non-negative representative of x mod m (m > 0).
inline BigInt mod_floor(const BigInt& x, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divisible(const BigInt& x, const BigInt& d) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient x/d; caller guarantees d | x.
inline BigInt divexact(const BigInt& x, const BigInt& d) {
    BigInt r;
    mpz_divexact(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return r;
}

/// |x| > |bound|?
inline bool abs_greater(const BigInt& x, const BigInt& bound) {
    return mpz_cmpabs(x.get_mpz_t(), bound.get_mpz_t()) > 0;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// FNV-1a over the limbs, so BigInt can key unordered containers.
struct BigIntHash {
    std::size_t operator()(const BigInt& x) const {
        const std::size_t n = mpz_size(x.get_mpz_t());
        std::size_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < n; ++i) {
            h ^= static_cast<std::size_t>(mpz_getlimbn(x.get_mpz_t(), i));
            h *= 1099511628211ull;
        }
        h ^= static_cast<std::size_t>(mpz_sgn(x.get_mpz_t()) + 2);
        return h * 1099511628211ull;
    }
};

}  // namespace pdyn
