// Shared fixtures and independent oracles for the test suites. Everything
// here must stay independent of the library code paths it checks: plain
// loops, plain hash maps, no reuse of the iteration/search internals.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "pdyn/bigint.hpp"
#include "pdyn/mapdef.hpp"

namespace test_util {

using pdyn::BigInt;

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Hand-written Collatz step, the oracle for eval(collatz, .).
inline BigInt collatz_step(const BigInt& n) {
    if (mpz_odd_p(n.get_mpz_t())) return 3 * n + 1;
    return n / 2;
}

/// Power-summation polynomial evaluation, the oracle for Horner.
inline BigInt naive_poly_eval(const std::vector<BigInt>& coeffs,
                              const BigInt& x) {
    BigInt sum = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        BigInt term = coeffs[i];
        for (size_t j = 0; j < i; ++j) term *= x;
        sum += term;
    }
    return sum;
}

/// Random map satisfying the type invariants: p from `primes`,
/// coefficients in [-span, span] with a0 forced to a multiple of p,
/// degrees at most max_degree.
inline pdyn::PiecewiseMap random_valid_map(Rng& rng,
                                           const std::vector<int>& primes,
                                           int span, int max_degree) {
    const int p = primes[static_cast<size_t>(
        rand_int(rng, 0, static_cast<int>(primes.size()) - 1))];
    std::vector<BigInt> a, b;
    const int deg_a = rand_int(rng, 0, max_degree);
    const int deg_b = rand_int(rng, 0, max_degree);
    for (int i = 0; i <= deg_a; ++i) a.emplace_back(rand_int(rng, -span, span));
    for (int i = 0; i <= deg_b; ++i) b.emplace_back(rand_int(rng, -span, span));
    // force p | a0 without leaving [-span, span]
    a[0] = BigInt(p * rand_int(rng, -span / p, span / p));
    return pdyn::validate(p, a, b);
}

/// Straight-line orbit walk with a value -> position table; finds the first
/// repeat within max_steps applications, rejecting any term whose absolute
/// value exceeds the bound. Returns the cycle members starting at the first
/// repeated value, in orbit order, or nullopt.
inline std::optional<std::vector<BigInt>> naive_find_cycle(
    const pdyn::Map& map, const BigInt& seed, std::uint64_t max_steps,
    const BigInt& magnitude_bound) {
    std::unordered_map<BigInt, std::uint64_t, pdyn::BigIntHash> position;
    std::vector<BigInt> trail;
    BigInt value = seed;
    for (std::uint64_t step = 0;; ++step) {
        if (pdyn::abs_greater(value, magnitude_bound)) return std::nullopt;
        auto [it, inserted] = position.try_emplace(value, step);
        if (!inserted)
            return std::vector<BigInt>(trail.begin() + it->second, trail.end());
        trail.push_back(value);
        if (step == max_steps) return std::nullopt;
        value = pdyn::eval(map, value).value;
    }
}

/// Minimum-member-first rotation, reimplemented for oracle independence.
inline std::vector<BigInt> naive_canonical(std::vector<BigInt> members) {
    auto min_it = std::min_element(members.begin(), members.end());
    std::rotate(members.begin(), min_it, members.end());
    return members;
}

struct NaiveCensus {
    std::vector<std::vector<BigInt>> cycles;  // canonical, sorted
    std::uint64_t unresolved = 0;
};

/// Single-threaded reference search over [lo, hi].
inline NaiveCensus naive_search(const pdyn::Map& map, const BigInt& lo,
                                const BigInt& hi, std::uint64_t max_steps,
                                unsigned magnitude_bits) {
    const BigInt bound = pdyn::pow_ui(BigInt(2), magnitude_bits);
    std::map<std::vector<BigInt>, bool> seen;
    NaiveCensus census;
    for (BigInt seed = lo; seed <= hi; ++seed) {
        auto members = naive_find_cycle(map, seed, max_steps, bound);
        if (!members) {
            ++census.unresolved;
            continue;
        }
        seen.emplace(naive_canonical(*members), true);
    }
    for (const auto& [members, _] : seen) census.cycles.push_back(members);
    return census;
}

}  // namespace test_util
