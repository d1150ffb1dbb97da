#include "pdyn/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace pdyn {

std::vector<SeedRange> partition_range(const BigInt& lo, const BigInt& hi,
                                       unsigned chunks) {
    if (chunks < 1) throw std::invalid_argument("chunks must be >= 1");
    if (lo > hi) throw std::invalid_argument("lo must be <= hi");

    const BigInt total = hi - lo + 1;
    BigInt base, extra;
    mpz_fdiv_qr(base.get_mpz_t(), extra.get_mpz_t(), total.get_mpz_t(),
                BigInt(chunks).get_mpz_t());

    std::vector<SeedRange> out;
    BigInt start = lo;
    for (unsigned i = 0; i < chunks && start <= hi; ++i) {
        BigInt size = base + (BigInt(i) < extra ? 1 : 0);
        if (size == 0) break;
        out.push_back({start, start + size - 1});
        start += size;
    }
    return out;
}

namespace {

struct WorkerOutput {
    // Keyed by canonical members, so the merge is order-independent.
    std::map<std::vector<BigInt>, Cycle> cycles;
    std::uint64_t unresolved = 0;
};

void scan_chunk(const Map& map, const SeedRange& range,
                const OrbitLimits& limits, WorkerOutput& out) {
    for (BigInt seed = range.lo; seed <= range.hi; ++seed) {
        std::optional<Cycle> cycle = detect_cycle(map, seed, limits);
        if (!cycle) {
            ++out.unresolved;
            continue;
        }
        std::vector<BigInt> key = cycle->members;
        out.cycles.try_emplace(std::move(key), std::move(*cycle));
    }
}

std::vector<CertificateReport> run_checks(const Map& map, const Cycle& cycle,
                                          const std::vector<CheckKind>& checks) {
    std::vector<CertificateReport> reports;
    const auto* pw = std::get_if<PiecewiseMap>(&map);
    for (CheckKind check : checks) {
        switch (check) {
            case CheckKind::RotationIdentity:
                if (pw) reports.push_back(verify_rotation_identity(*pw, cycle));
                break;
            case CheckKind::SumIdentity:
                if (pw) reports.push_back(verify_sum_identity(*pw, cycle));
                break;
            case CheckKind::Eq1:
                if (pw && is_collatz(*pw)) reports.push_back(verify_eq1(cycle));
                break;
            case CheckKind::Inverse:
                if (!pw) reports.push_back(verify_inverse_identities(cycle));
                break;
        }
    }
    return reports;
}

}  // namespace

SearchResult search_range(const Map& map, const SearchConfig& config) {
    if (config.lo > config.hi)
        throw std::invalid_argument("search range lo must be <= hi");
    if (config.threads < 1)
        throw std::invalid_argument("worker count must be >= 1");

    const std::vector<SeedRange> chunks =
        partition_range(config.lo, config.hi, config.threads);
    std::vector<WorkerOutput> outputs(chunks.size());

    if (chunks.size() == 1) {
        scan_chunk(map, chunks[0], config.limits, outputs[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(chunks.size());
        for (size_t i = 0; i < chunks.size(); ++i)
            workers.emplace_back(scan_chunk, std::cref(map),
                                 std::cref(chunks[i]), std::cref(config.limits),
                                 std::ref(outputs[i]));
        for (auto& worker : workers) worker.join();
    }

    // Single-threaded merge in canonical-key order.
    std::map<std::vector<BigInt>, Cycle> merged;
    SearchResult result;
    for (WorkerOutput& out : outputs) {
        result.unresolved += out.unresolved;
        for (auto& [key, cycle] : out.cycles)
            merged.try_emplace(key, std::move(cycle));
    }

    result.scanned = config.hi - config.lo + 1;
    result.cycles.reserve(merged.size());
    for (auto& [key, cycle] : merged)
        result.cycles.push_back(
            {std::move(cycle), {}});
    std::sort(result.cycles.begin(), result.cycles.end(),
              [](const CycleRecord& x, const CycleRecord& y) {
                  if (x.cycle.min_member() != y.cycle.min_member())
                      return x.cycle.min_member() < y.cycle.min_member();
                  if (x.cycle.length() != y.cycle.length())
                      return x.cycle.length() < y.cycle.length();
                  return x.cycle.members < y.cycle.members;
              });
    for (CycleRecord& record : result.cycles)
        record.certificates = run_checks(map, record.cycle, config.checks);
    return result;
}

}  // namespace pdyn
