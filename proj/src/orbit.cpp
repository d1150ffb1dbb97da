#include "pdyn/orbit.hpp"

#include <algorithm>
#include <unordered_set>

namespace pdyn {

Orbit iterate(const Map& map, const BigInt& seed, const OrbitLimits& limits) {
    Orbit orbit;
    orbit.seed = seed;
    orbit.terms.push_back(seed);
    orbit.branch_tags.push_back(classify(map, seed));

    if (limits.stop_target && seed == *limits.stop_target) {
        orbit.reason = TruncationReason::TargetReached;
        return orbit;
    }

    const BigInt bound = limits.magnitude_bound();
    std::unordered_set<BigInt, BigIntHash> seen;  // produced terms only
    orbit.reason = TruncationReason::StepLimit;
    for (std::uint64_t step = 0; step < limits.max_steps; ++step) {
        BigInt next = eval(map, orbit.terms.back()).value;
        orbit.branch_tags.push_back(classify(map, next));
        orbit.terms.push_back(next);
        if (limits.stop_target && next == *limits.stop_target) {
            orbit.reason = TruncationReason::TargetReached;
            break;
        }
        if (abs_greater(next, bound)) {
            orbit.reason = TruncationReason::MagnitudeLimit;
            break;
        }
        if (seen.contains(next)) {
            orbit.reason = TruncationReason::CycleClosed;
            break;
        }
        seen.insert(std::move(next));
    }
    return orbit;
}

Cycle canonicalize(const Map& map, std::vector<BigInt> members) {
    if (members.empty())
        throw CycleError(CycleErrorKind::NotACycle, "empty member list");

    std::unordered_set<BigInt, BigIntHash> distinct(members.begin(),
                                                    members.end());
    if (distinct.size() != members.size())
        throw CycleError(CycleErrorKind::DuplicateMember,
                         "cycle members must be distinct");

    for (size_t i = 0; i < members.size(); ++i) {
        const BigInt& from = members[i];
        const BigInt& to = members[(i + 1) % members.size()];
        BigInt image = eval(map, from).value;
        if (image != to)
            throw CycleError(CycleErrorKind::NotACycle,
                             to_string(from) + " maps to " + to_string(image) +
                                 ", not " + to_string(to));
    }

    auto min_it = std::min_element(members.begin(), members.end());
    std::rotate(members.begin(), min_it, members.end());
    return Cycle{std::move(members), map};
}

std::optional<Cycle> detect_cycle(const Map& map, const BigInt& seed,
                                  const OrbitLimits& limits) {
    const BigInt bound = limits.magnitude_bound();
    if (abs_greater(seed, bound)) return std::nullopt;

    // Brent phase 1: hare walks every position in order; tortoise teleports
    // to hare at powers of two. Meets once tortoise sits in the cycle and
    // the leg length (power) covers the period, i.e. by position ~2(mu+lam)
    // plus the leg tail. A budget of 4*max_steps map applications therefore
    // certifies mu + lam > max_steps on miss.
    const std::uint64_t budget = limits.max_steps > (UINT64_MAX - 8) / 4
                                     ? UINT64_MAX
                                     : 4 * limits.max_steps + 8;
    BigInt tortoise = seed;
    BigInt hare = eval(map, seed).value;
    if (abs_greater(hare, bound)) return std::nullopt;
    std::uint64_t power = 1, lam = 1, applications = 1;
    while (tortoise != hare) {
        if (applications >= budget) return std::nullopt;
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = eval(map, hare).value;
        ++applications;
        ++lam;
        if (abs_greater(hare, bound)) return std::nullopt;
    }

    // Phase 2: position of the first repeat is mu + lam; enforce the step
    // budget on it so the outcome matches a straight walk with max_steps
    // applications.
    BigInt ptr1 = seed;
    BigInt ptr2 = seed;
    for (std::uint64_t i = 0; i < lam; ++i) ptr2 = eval(map, ptr2).value;
    std::uint64_t mu = 0;
    while (ptr1 != ptr2) {
        ptr1 = eval(map, ptr1).value;
        ptr2 = eval(map, ptr2).value;
        ++mu;
    }
    if (mu + lam > limits.max_steps) return std::nullopt;

    std::vector<BigInt> members;
    members.reserve(lam);
    BigInt cur = ptr1;
    for (std::uint64_t i = 0; i < lam; ++i) {
        members.push_back(cur);
        cur = eval(map, cur).value;
    }
    return canonicalize(map, std::move(members));
}

CycleStats cycle_stats(const Cycle& cycle, unsigned max_k) {
    const auto* map = std::get_if<PiecewiseMap>(&cycle.map);
    if (map == nullptr)
        throw std::invalid_argument(
            "cycle_stats requires a PiecewiseMap cycle");
    if (max_k < 1) throw std::invalid_argument("max_k must be >= 1");

    CycleStats stats;
    stats.divisible.power_sums.assign(max_k + 1, BigInt(0));
    stats.nondivisible.power_sums.assign(max_k + 1, BigInt(0));
    for (const BigInt& alpha : cycle.members) {
        BranchStats& branch = classify(*map, alpha) == BranchTag::Divisible
                                  ? stats.divisible
                                  : stats.nondivisible;
        stats.sum += alpha;
        branch.count += 1;
        branch.sum += alpha;
        BigInt pw = 1;
        for (unsigned k = 0; k <= max_k; ++k) {
            branch.power_sums[k] += pw;
            pw *= alpha;
        }
    }
    return stats;
}

CycleStats cycle_stats(const Cycle& cycle) {
    const auto* map = std::get_if<PiecewiseMap>(&cycle.map);
    unsigned max_k = 1;
    if (map != nullptr)
        max_k = static_cast<unsigned>(
            std::max<size_t>({map->a.size(), map->b.size(), 2}) - 1);
    return cycle_stats(cycle, max_k);
}

}  // namespace pdyn
