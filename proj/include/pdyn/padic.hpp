// Truncated p-adic integers (residues mod p^K) and the finite-precision
// check of the orbit series identity
//   -n = sum_i term(alpha_i) * p^i   in Z_p.
#pragma once

#include <stdexcept>
#include <vector>

#include "pdyn/bigint.hpp"
#include "pdyn/mapdef.hpp"

namespace pdyn {

enum class PadicErrorKind { PrecisionMismatch, ModulusMismatch, UnsupportedMap };

class PadicError : public std::runtime_error {
public:
    PadicError(PadicErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    PadicErrorKind kind() const { return kind_; }

private:
    PadicErrorKind kind_;
};

/// A p-adic integer known mod p^K. The value is a single reduced residue;
/// the digit expansion is a view for display. Negative integers map to the
/// all-high-digit tails characteristic of Z_p.
class PadicTrunc {
public:
    PadicTrunc(BigInt p, unsigned precision, const BigInt& value);

    static PadicTrunc from_integer(const BigInt& n, const BigInt& p,
                                   unsigned precision);

    const BigInt& base() const { return p_; }
    unsigned precision() const { return precision_; }
    const BigInt& residue() const { return residue_; }
    const BigInt& modulus() const { return modulus_; }  // p^K
    bool is_zero() const { return residue_ == 0; }

    /// Little-endian base-p digits, exactly K of them.
    std::vector<BigInt> digits() const;

    /// The same value truncated to a smaller precision.
    PadicTrunc truncated(unsigned precision) const;

    friend bool operator==(const PadicTrunc& x, const PadicTrunc& y) {
        return x.p_ == y.p_ && x.precision_ == y.precision_ &&
               x.residue_ == y.residue_;
    }

private:
    BigInt p_;
    unsigned precision_;
    BigInt modulus_;
    BigInt residue_;
};

PadicTrunc add(const PadicTrunc& x, const PadicTrunc& y);
PadicTrunc mul(const PadicTrunc& x, const PadicTrunc& y);
PadicTrunc neg(const PadicTrunc& x);

/// (1 - p^m)^{-1} mod p^K via the finite geometric sum of p^{l*m} over
/// l*m < K. Multiplying back by (1 - p^m) gives 1 mod p^K.
PadicTrunc geom_inverse(const BigInt& p, unsigned m, unsigned precision);

/// Partial series sum_{i<K} term(alpha_i) p^i minus (-n), all mod p^K.
/// Zero for every valid map and every integer seed. The orbit is iterated
/// on residues mod p^{2K}: each division by p costs one digit, so after
/// i < K steps the terms are still exact mod p^{K-i}, which is all the
/// weight p^i leaves visible.
PadicTrunc correspondence_residual(const PiecewiseMap& map, const BigInt& n,
                                   unsigned precision);

/// Map-level entry; SpecialMap is rejected with UnsupportedMap.
PadicTrunc correspondence_residual(const Map& map, const BigInt& n,
                                   unsigned precision);

}  // namespace pdyn
