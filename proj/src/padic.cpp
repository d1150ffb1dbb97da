#include "pdyn/padic.hpp"

#include <cassert>

namespace pdyn {

namespace {

void require_compatible(const PadicTrunc& x, const PadicTrunc& y) {
    if (x.base() != y.base())
        throw PadicError(PadicErrorKind::ModulusMismatch,
                         "mixed p-adic bases " + to_string(x.base()) + " and " +
                             to_string(y.base()));
    if (x.precision() != y.precision())
        throw PadicError(PadicErrorKind::PrecisionMismatch,
                         "mixed precisions " + std::to_string(x.precision()) +
                             " and " + std::to_string(y.precision()));
}

}  // namespace

PadicTrunc::PadicTrunc(BigInt p, unsigned precision, const BigInt& value)
    : p_(std::move(p)), precision_(precision) {
    if (p_ < 2) throw std::invalid_argument("p-adic base must be >= 2");
    if (precision_ < 1) throw std::invalid_argument("precision must be >= 1");
    modulus_ = pow_ui(p_, precision_);
    residue_ = mod_floor(value, modulus_);
}

PadicTrunc PadicTrunc::from_integer(const BigInt& n, const BigInt& p,
                                    unsigned precision) {
    return PadicTrunc(p, precision, n);
}

std::vector<BigInt> PadicTrunc::digits() const {
    std::vector<BigInt> out;
    out.reserve(precision_);
    BigInt rest = residue_;
    for (unsigned i = 0; i < precision_; ++i) {
        BigInt q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(),
                    p_.get_mpz_t());
        out.push_back(r);
        rest = q;
    }
    return out;
}

PadicTrunc PadicTrunc::truncated(unsigned precision) const {
    if (precision > precision_)
        throw PadicError(PadicErrorKind::PrecisionMismatch,
                         "cannot truncate upward");
    return PadicTrunc(p_, precision, residue_);
}

PadicTrunc add(const PadicTrunc& x, const PadicTrunc& y) {
    require_compatible(x, y);
    return PadicTrunc(x.base(), x.precision(), x.residue() + y.residue());
}

PadicTrunc mul(const PadicTrunc& x, const PadicTrunc& y) {
    require_compatible(x, y);
    return PadicTrunc(x.base(), x.precision(), x.residue() * y.residue());
}

PadicTrunc neg(const PadicTrunc& x) {
    return PadicTrunc(x.base(), x.precision(), -x.residue());
}

PadicTrunc geom_inverse(const BigInt& p, unsigned m, unsigned precision) {
    if (m < 1) throw std::invalid_argument("cycle length m must be >= 1");
    PadicTrunc acc(p, precision, 0);
    const BigInt pm = pow_ui(p, m);
    BigInt pe = 1;
    for (unsigned long l = 0; l * static_cast<unsigned long>(m) < precision;
         ++l) {
        acc = add(acc, PadicTrunc(p, precision, pe));
        pe = mod_floor(pe * pm, acc.modulus());
    }
    return acc;
}

PadicTrunc correspondence_residual(const PiecewiseMap& map, const BigInt& n,
                                   unsigned precision) {
    const unsigned K = precision;
    const BigInt work_mod = pow_ui(map.p, 2 * K);
    const BigInt out_mod = pow_ui(map.p, K);

    BigInt alpha = mod_floor(n, work_mod);  // alpha_i mod p^{2K-i}
    BigInt partial = 0;                     // series mod p^K
    BigInt weight = 1;                      // p^i
    for (unsigned i = 0; i < K; ++i) {
        partial = mod_floor(partial + identity_term(map, alpha) * weight,
                            out_mod);
        weight = mod_floor(weight * map.p, out_mod);

        // One map step on residues. Branch selection only needs alpha mod p,
        // which stays exact throughout.
        EvalResult step = eval(map, alpha);
        alpha = mod_floor(step.value, work_mod);
    }

    return PadicTrunc(map.p, K, partial + n);
}

PadicTrunc correspondence_residual(const Map& map, const BigInt& n,
                                   unsigned precision) {
    const auto* pw = std::get_if<PiecewiseMap>(&map);
    if (pw == nullptr)
        throw PadicError(PadicErrorKind::UnsupportedMap,
                         "the orbit series identity needs a coefficient map; "
                         "special maps are not supported");
    return correspondence_residual(*pw, n, precision);
}

}  // namespace pdyn
