// Exhaustive cycle enumeration over seed ranges: static contiguous
// chunking across workers, canonical-form dedup, certificate cross-checks.
#pragma once

#include <cstdint>
#include <vector>

#include "pdyn/bigint.hpp"
#include "pdyn/certify.hpp"
#include "pdyn/orbit.hpp"

namespace pdyn {

enum class CheckKind { RotationIdentity, SumIdentity, Eq1, Inverse };

struct SearchConfig {
    BigInt lo;
    BigInt hi;  // inclusive, lo <= hi
    OrbitLimits limits;
    unsigned threads = 1;
    // Requested certificates; the ones a map cannot support are skipped
    // (coefficient checks for SpecialMap, eq1 for non-Collatz, inverse for
    // PiecewiseMap).
    std::vector<CheckKind> checks = {CheckKind::RotationIdentity,
                                     CheckKind::SumIdentity, CheckKind::Eq1,
                                     CheckKind::Inverse};
};

struct CycleRecord {
    Cycle cycle;
    std::vector<CertificateReport> certificates;
};

/// Result payload. Identical (including serialized form) for any worker
/// count: cycles are sorted by minimum member then length, certificates
/// run after the merge.
struct SearchResult {
    std::vector<CycleRecord> cycles;
    std::uint64_t unresolved = 0;  // seeds exhausted by limits
    BigInt scanned = 0;
};

struct SeedRange {
    BigInt lo;
    BigInt hi;
};

/// Contiguous, disjoint, covering subranges with sizes differing by at
/// most one; excess chunks beyond the range size are omitted.
std::vector<SeedRange> partition_range(const BigInt& lo, const BigInt& hi,
                                       unsigned chunks);

/// Runs detect_cycle on every seed in [lo, hi]. Cycles whose members leave
/// the range are still reported; the range bounds seeds, not members.
SearchResult search_range(const Map& map, const SearchConfig& config);

}  // namespace pdyn
