// Piecewise polynomial integer maps: validation, evaluation, builtins.
//
// A PiecewiseMap sends x to (sum a_i x^i)/p when p | x and to sum b_i x^i
// otherwise. Validation guarantees both branches are integer-valued on all
// of Z. The inverse Collatz map does not fit this shape (its branch
// condition mixes parity with a divisibility test on n-1), so it lives in
// its own SpecialMap kind.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pdyn/bigint.hpp"

namespace pdyn {

/// Which branch of a map fired. For a PiecewiseMap, Divisible <=> p | x.
/// For InverseCollatz, Divisible names the (n-1)/3 branch.
enum class BranchTag { Divisible, NonDivisible };

struct PiecewiseMap {
    BigInt p;                // modulus, >= 2
    std::vector<BigInt> a;   // branch A numerator coefficients, p | a[0]
    std::vector<BigInt> b;   // branch B coefficients
    std::string name;        // optional label, not part of identity

    friend bool operator==(const PiecewiseMap& x, const PiecewiseMap& y) {
        return x.p == y.p && x.a == y.a && x.b == y.b;
    }
};

enum class SpecialMapKind { InverseCollatz };

struct SpecialMap {
    SpecialMapKind kind = SpecialMapKind::InverseCollatz;

    friend bool operator==(const SpecialMap& x, const SpecialMap& y) {
        return x.kind == y.kind;
    }
};

using Map = std::variant<PiecewiseMap, SpecialMap>;

enum class MapErrorKind {
    ModulusTooSmall,
    NonIntegralBranch,
    EmptyCoefficients,
    UnknownBuiltin,
};

class MapError : public std::runtime_error {
public:
    MapError(MapErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    MapErrorKind kind() const { return kind_; }

private:
    MapErrorKind kind_;
};

/// Checks the type invariants (p >= 2, p | a0, non-empty branches),
/// normalizes trailing zero coefficients, and returns the map.
PiecewiseMap validate(BigInt p, std::vector<BigInt> a, std::vector<BigInt> b,
                      std::string name = "");

struct EvalResult {
    BigInt value;
    BranchTag branch;
};

EvalResult eval(const PiecewiseMap& map, const BigInt& x);
EvalResult eval(const SpecialMap& map, const BigInt& x);
EvalResult eval(const Map& map, const BigInt& x);

/// Branch a term would take, without evaluating.
BranchTag classify(const PiecewiseMap& map, const BigInt& x);
BranchTag classify(const SpecialMap& map, const BigInt& x);
BranchTag classify(const Map& map, const BigInt& x);

/// "collatz" or "inverse-collatz".
Map builtin(std::string_view name);

bool is_collatz(const PiecewiseMap& map);
bool is_collatz(const Map& map);

/// Display label: the map's name if set, else its canonical text.
std::string map_label(const Map& map);

/// The per-term quantity of the orbit/cycle identities:
///   p | x:  a0 + (a1 - 1) x + sum_{k>=2} a_k x^k
///   p∤x:    p b0 + (p b1 - 1) x + sum_{k>=2} p b_k x^k
/// Missing coefficients count as zero.
BigInt identity_term(const PiecewiseMap& map, const BigInt& x);

}  // namespace pdyn
