// Orbit iteration, cycle detection and canonical cycles, branch statistics.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pdyn/bigint.hpp"
#include "pdyn/mapdef.hpp"

namespace pdyn {

struct OrbitLimits {
    std::uint64_t max_steps = 1'000'000;
    unsigned max_magnitude_bits = 1024;   // stop when |term| > 2^bits
    std::optional<BigInt> stop_target;

    BigInt magnitude_bound() const { return pow_ui(BigInt(2), max_magnitude_bits); }
};

enum class TruncationReason { StepLimit, MagnitudeLimit, CycleClosed, TargetReached };

/// A finite orbit prefix alpha_0 = seed, alpha_{i+1} = f(alpha_i).
/// branch_tags[i] classifies terms[i] (the branch f takes from it).
struct Orbit {
    BigInt seed;
    std::vector<BigInt> terms;
    std::vector<BranchTag> branch_tags;
    TruncationReason reason = TruncationReason::StepLimit;

    std::uint64_t steps() const { return terms.size() - 1; }
};

/// Iterates until a limit fires, a produced term repeats an earlier
/// produced term (CycleClosed), or stop_target appears (the target is kept
/// as the last term; a seed equal to the target yields the one-term orbit).
Orbit iterate(const Map& map, const BigInt& seed, const OrbitLimits& limits = {});

enum class CycleErrorKind { NotACycle, DuplicateMember };

class CycleError : public std::runtime_error {
public:
    CycleError(CycleErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    CycleErrorKind kind() const { return kind_; }

private:
    CycleErrorKind kind_;
};

/// A verified cycle in canonical rotation (minimum member first). Members
/// of a cycle under a deterministic map are distinct, so the rotation is
/// unique.
struct Cycle {
    std::vector<BigInt> members;
    Map map;

    size_t length() const { return members.size(); }
    const BigInt& min_member() const { return members.front(); }
};

/// Verifies that each member maps to the next (last to first) and rotates
/// to canonical form. Throws CycleError otherwise.
Cycle canonicalize(const Map& map, std::vector<BigInt> members);

/// Brent probing with O(1) memory, then an exact confirmation pass through
/// canonicalize(). Returns the cycle the orbit from `seed` enters, or
/// nullopt if it does not close within max_steps map applications or a
/// term exceeds the magnitude bound first.
std::optional<Cycle> detect_cycle(const Map& map, const BigInt& seed,
                                  const OrbitLimits& limits = {});

/// Count, sum and power sums over the members of one branch class.
/// power_sums[k] = sum of alpha^k, so power_sums[0] is the count and
/// power_sums[1] the plain sum.
struct BranchStats {
    BigInt count = 0;
    BigInt sum = 0;
    std::vector<BigInt> power_sums;
};

struct CycleStats {
    BigInt sum = 0;  // over all members
    BranchStats divisible;
    BranchStats nondivisible;

    const BranchStats& branch(BranchTag tag) const {
        return tag == BranchTag::Divisible ? divisible : nondivisible;
    }
};

/// Exact statistics of a PiecewiseMap cycle, with power sums up to max_k
/// (max_k >= 1). A SpecialMap cycle has no divisibility statistics;
/// passing one is invalid_argument.
CycleStats cycle_stats(const Cycle& cycle, unsigned max_k);

/// max_k defaulted to the map's largest coefficient degree (at least 1).
CycleStats cycle_stats(const Cycle& cycle);

}  // namespace pdyn
