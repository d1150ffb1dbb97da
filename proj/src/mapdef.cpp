#include "pdyn/mapdef.hpp"

#include <cassert>

namespace pdyn {

namespace {

// Drop trailing zeros but keep a lone zero coefficient.
void normalize_coeffs(std::vector<BigInt>& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
}

BigInt horner(const std::vector<BigInt>& c, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigInt coeff(const std::vector<BigInt>& c, size_t i) {
    return i < c.size() ? c[i] : BigInt(0);
}

}  // namespace

PiecewiseMap validate(BigInt p, std::vector<BigInt> a, std::vector<BigInt> b,
                      std::string name) {
    if (a.empty() || b.empty())
        throw MapError(MapErrorKind::EmptyCoefficients,
                       "coefficient sequences must be non-empty");
    if (p < 2)
        throw MapError(MapErrorKind::ModulusTooSmall,
                       "modulus p must be >= 2, got " + to_string(p));
    if (!divisible(a[0], p))
        throw MapError(MapErrorKind::NonIntegralBranch,
                       "p must divide a0 so the divisible branch stays "
                       "integral (p=" + to_string(p) +
                       ", a0=" + to_string(a[0]) + ")");
    normalize_coeffs(a);
    normalize_coeffs(b);
    return PiecewiseMap{std::move(p), std::move(a), std::move(b),
                        std::move(name)};
}

BranchTag classify(const PiecewiseMap& map, const BigInt& x) {
    return divisible(x, map.p) ? BranchTag::Divisible : BranchTag::NonDivisible;
}

BranchTag classify(const SpecialMap&, const BigInt& x) {
    // (n-1)/3 branch: n even and 3 | n-1.
    const bool even = mpz_even_p(x.get_mpz_t()) != 0;
    return (even && divisible(x - 1, 3)) ? BranchTag::Divisible
                                         : BranchTag::NonDivisible;
}

BranchTag classify(const Map& map, const BigInt& x) {
    return std::visit([&](const auto& m) { return classify(m, x); }, map);
}

EvalResult eval(const PiecewiseMap& map, const BigInt& x) {
    if (classify(map, x) == BranchTag::Divisible) {
        BigInt s = horner(map.a, x);
        assert(divisible(s, map.p));
        return {divexact(s, map.p), BranchTag::Divisible};
    }
    return {horner(map.b, x), BranchTag::NonDivisible};
}

EvalResult eval(const SpecialMap& map, const BigInt& x) {
    if (classify(map, x) == BranchTag::Divisible)
        return {divexact(x - 1, 3), BranchTag::Divisible};
    return {2 * x, BranchTag::NonDivisible};
}

EvalResult eval(const Map& map, const BigInt& x) {
    return std::visit([&](const auto& m) { return eval(m, x); }, map);
}

Map builtin(std::string_view name) {
    if (name == "collatz")
        return validate(2, {0, 1}, {1, 3}, "collatz");
    if (name == "inverse-collatz") return SpecialMap{};
    throw MapError(MapErrorKind::UnknownBuiltin,
                   "unknown builtin map '" + std::string(name) + "'");
}

bool is_collatz(const PiecewiseMap& map) {
    return map == std::get<PiecewiseMap>(builtin("collatz"));
}

bool is_collatz(const Map& map) {
    const auto* pw = std::get_if<PiecewiseMap>(&map);
    return pw != nullptr && is_collatz(*pw);
}

std::string map_label(const Map& map) {
    if (const auto* pw = std::get_if<PiecewiseMap>(&map)) {
        if (!pw->name.empty()) return pw->name;
        return "p=" + to_string(pw->p);
    }
    return "inverse-collatz";
}

BigInt identity_term(const PiecewiseMap& map, const BigInt& x) {
    BigInt t;
    if (classify(map, x) == BranchTag::Divisible) {
        t = coeff(map.a, 0) + (coeff(map.a, 1) - 1) * x;
        BigInt xk = x * x;
        for (size_t k = 2; k < map.a.size(); ++k, xk *= x) t += map.a[k] * xk;
    } else {
        t = map.p * coeff(map.b, 0) + (map.p * coeff(map.b, 1) - 1) * x;
        BigInt xk = x * x;
        for (size_t k = 2; k < map.b.size(); ++k, xk *= x)
            t += map.p * map.b[k] * xk;
    }
    return t;
}

}  // namespace pdyn
