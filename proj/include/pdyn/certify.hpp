// Exact integer certificates for the cycle and orbit identities of
// piecewise polynomial maps, plus the inverse-Collatz certificates and the
// orbit gap scan. Everything here is exact big-integer arithmetic; there
// are no tolerances.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdyn/bigint.hpp"
#include "pdyn/mapdef.hpp"
#include "pdyn/orbit.hpp"

namespace pdyn {

enum class CertifyErrorKind { NotCollatz, NotAnInverseCycle, UnsupportedMap };

class CertifyError : public std::runtime_error {
public:
    CertifyError(CertifyErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    CertifyErrorKind kind() const { return kind_; }

private:
    CertifyErrorKind kind_;
};

enum class CheckStatus { Pass, Fail, NotApplicable, Unresolved };

/// One compared pair inside a certificate: a rotation, a sub-identity, an
/// inequality side.
struct CheckLine {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    BigInt lhs;
    BigInt rhs;
};

/// Statistics of an inverse-Collatz cycle. The D branch is (n-1)/3 (its
/// images are the odd members of the forward cycle); dbl is doubling.
struct InverseCycleStats {
    BigInt sum = 0;        // S over all members
    BigInt sum_d = 0;      // S_D
    BigInt count_d = 0;    // N_D
    BigInt sum_dbl = 0;    // S_dbl
    BigInt count_dbl = 0;  // N_dbl
};

struct CertificateReport {
    std::string check;
    CheckStatus status = CheckStatus::Pass;
    BigInt lhs;  // headline values: first failing line if any, else first
    BigInt rhs;
    std::vector<CheckLine> lines;
    std::optional<CycleStats> stats;
    std::optional<InverseCycleStats> inverse_stats;
    std::string note;

    bool ok() const {
        return status == CheckStatus::Pass ||
               status == CheckStatus::NotApplicable;
    }
};

/// For every rotation j of the cycle, checks the exact identity
///   alpha_j (p^m - 1) = sum_{i<m} term(alpha_{i+j}) p^i
/// over the integers. One line per j; the note names the first failing j.
CertificateReport verify_rotation_identity(const PiecewiseMap& map,
                                           const Cycle& cycle);

/// Checks (p-1) S against both evaluations of the unweighted sum: the
/// per-term form sum_i term(alpha_i) and the statistics form
///   a0 N_div + (a1-1) S_div + sum_k a_k S_div^(k)
///   + p b0 N_nondiv + (p b1 - 1) S_nondiv + sum_k p b_k S_nondiv^(k).
/// Their agreement pins the power-sum reading of the branch statistics.
CertificateReport verify_sum_identity(const PiecewiseMap& map,
                                      const Cycle& cycle);

/// Collatz shortcut S = 5 S_odd + 2 N_odd (odd = non-divisible at p = 2).
CertificateReport verify_eq1(const Cycle& cycle);

InverseCycleStats inverse_cycle_stats(const Cycle& cycle);

/// (i) the exact identity 3S = 5 S_D + N_D, which every integer
/// inverse-Collatz cycle satisfies (sum invariance of the cycle under the
/// map); (ii) the inequality 2S <= 5 S_D - N_dbl, asserted only when all
/// members are positive and reported NotApplicable otherwise.
CertificateReport verify_inverse_identities(const Cycle& cycle);

/// Iterates the Collatz orbit n, ..., 2 (stop target included) and checks
///   S - (5 S_odd + 2 N_odd) = 2 (n - 1)
/// exactly. Unresolved if the limits fire before the orbit reaches 2.
CertificateReport orbit_identity_check(const BigInt& n,
                                       const OrbitLimits& limits = {});

struct GapRow {
    BigInt n;
    BigInt gap;
};

/// For each seed whose orbit reaches absorbing_value within the limits:
///   gap = (p-1) S_orbit - sum_i term(alpha_i)
/// over the whole orbit including both endpoints. For Collatz with
/// absorbing value 2 the gap is 2(n-1). Data for inspection, not a check.
std::vector<GapRow> orbit_gap_scan(const PiecewiseMap& map, const BigInt& lo,
                                   const BigInt& hi,
                                   const BigInt& absorbing_value,
                                   const OrbitLimits& limits = {});

/// Gap of one finished orbit (reason TargetReached); shared by the scan
/// and the CLI.
BigInt orbit_gap(const PiecewiseMap& map, const Orbit& orbit);

}  // namespace pdyn
