#include "pdyn/certify.hpp"

namespace pdyn {

namespace {

const PiecewiseMap& require_piecewise(const Cycle& cycle) {
    const auto* map = std::get_if<PiecewiseMap>(&cycle.map);
    if (map == nullptr)
        throw CertifyError(CertifyErrorKind::UnsupportedMap,
                           "coefficient certificates need a PiecewiseMap "
                           "cycle; special maps carry no coefficients");
    return *map;
}

void require_same_map(const PiecewiseMap& map, const Cycle& cycle) {
    if (require_piecewise(cycle) != map)
        throw std::invalid_argument("cycle does not belong to this map");
}

BigInt coeff(const std::vector<BigInt>& c, size_t i) {
    return i < c.size() ? c[i] : BigInt(0);
}

void set_headline(CertificateReport& report) {
    if (report.lines.empty()) return;
    report.lhs = report.lines.front().lhs;
    report.rhs = report.lines.front().rhs;
    for (const CheckLine& line : report.lines) {
        if (line.status == CheckStatus::Fail) {
            report.lhs = line.lhs;
            report.rhs = line.rhs;
            report.status = CheckStatus::Fail;
            if (report.note.empty()) report.note = "failed: " + line.name;
            return;
        }
    }
}

}  // namespace

CertificateReport verify_rotation_identity(const PiecewiseMap& map,
                                           const Cycle& cycle) {
    require_same_map(map, cycle);
    const size_t m = cycle.length();
    const BigInt pm_minus_1 = pow_ui(map.p, m) - 1;

    CertificateReport report;
    report.check = "rotation-identity";
    for (size_t j = 0; j < m; ++j) {
        BigInt lhs = cycle.members[j] * pm_minus_1;
        BigInt rhs = 0;
        BigInt weight = 1;
        for (size_t i = 0; i < m; ++i, weight *= map.p)
            rhs += identity_term(map, cycle.members[(i + j) % m]) * weight;
        report.lines.push_back({"j=" + std::to_string(j),
                                lhs == rhs ? CheckStatus::Pass
                                           : CheckStatus::Fail,
                                std::move(lhs), std::move(rhs)});
    }
    set_headline(report);
    return report;
}

CertificateReport verify_sum_identity(const PiecewiseMap& map,
                                      const Cycle& cycle) {
    require_same_map(map, cycle);
    const unsigned max_k = static_cast<unsigned>(
        std::max<size_t>({map.a.size(), map.b.size(), 2}) - 1);
    CycleStats stats = cycle_stats(cycle, max_k);

    BigInt lhs = (map.p - 1) * stats.sum;

    BigInt per_term = 0;
    for (const BigInt& alpha : cycle.members)
        per_term += identity_term(map, alpha);

    const BranchStats& div = stats.divisible;
    const BranchStats& nondiv = stats.nondivisible;
    BigInt from_stats = coeff(map.a, 0) * div.count +
                        (coeff(map.a, 1) - 1) * div.sum +
                        map.p * coeff(map.b, 0) * nondiv.count +
                        (map.p * coeff(map.b, 1) - 1) * nondiv.sum;
    for (size_t k = 2; k < map.a.size(); ++k)
        from_stats += map.a[k] * div.power_sums[k];
    for (size_t k = 2; k < map.b.size(); ++k)
        from_stats += map.p * map.b[k] * nondiv.power_sums[k];

    CertificateReport report;
    report.check = "sum-identity";
    report.lines.push_back({"per-term",
                            lhs == per_term ? CheckStatus::Pass
                                            : CheckStatus::Fail,
                            lhs, per_term});
    report.lines.push_back({"statistics",
                            lhs == from_stats ? CheckStatus::Pass
                                              : CheckStatus::Fail,
                            lhs, from_stats});
    report.stats = std::move(stats);
    set_headline(report);
    return report;
}

CertificateReport verify_eq1(const Cycle& cycle) {
    if (!is_collatz(cycle.map))
        throw CertifyError(CertifyErrorKind::NotCollatz,
                           "eq1 is specific to the Collatz map");
    CycleStats stats = cycle_stats(cycle, 1);
    BigInt lhs = stats.sum;
    BigInt rhs = 5 * stats.nondivisible.sum + 2 * stats.nondivisible.count;

    CertificateReport report;
    report.check = "eq1";
    report.lines.push_back({"S = 5*S_odd + 2*N_odd",
                            lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail,
                            std::move(lhs), std::move(rhs)});
    report.stats = std::move(stats);
    set_headline(report);
    return report;
}

InverseCycleStats inverse_cycle_stats(const Cycle& cycle) {
    const auto* map = std::get_if<SpecialMap>(&cycle.map);
    if (map == nullptr || map->kind != SpecialMapKind::InverseCollatz)
        throw CertifyError(CertifyErrorKind::NotAnInverseCycle,
                           "not an inverse-Collatz cycle");
    InverseCycleStats stats;
    for (const BigInt& member : cycle.members) {
        stats.sum += member;
        if (classify(*map, member) == BranchTag::Divisible) {
            stats.sum_d += member;
            stats.count_d += 1;
        } else {
            stats.sum_dbl += member;
            stats.count_dbl += 1;
        }
    }
    return stats;
}

CertificateReport verify_inverse_identities(const Cycle& cycle) {
    InverseCycleStats stats = inverse_cycle_stats(cycle);

    CertificateReport report;
    report.check = "inverse-identities";

    BigInt id_lhs = 3 * stats.sum;
    BigInt id_rhs = 5 * stats.sum_d + stats.count_d;
    report.lines.push_back({"3*S = 5*S_D + N_D",
                            id_lhs == id_rhs ? CheckStatus::Pass
                                             : CheckStatus::Fail,
                            std::move(id_lhs), std::move(id_rhs)});

    bool all_positive = true;
    for (const BigInt& member : cycle.members)
        if (member <= 0) all_positive = false;
    BigInt ineq_lhs = 2 * stats.sum;
    BigInt ineq_rhs = 5 * stats.sum_d - stats.count_dbl;
    if (all_positive) {
        report.lines.push_back({"2*S <= 5*S_D - N_dbl",
                                ineq_lhs <= ineq_rhs ? CheckStatus::Pass
                                                     : CheckStatus::Fail,
                                std::move(ineq_lhs), std::move(ineq_rhs)});
    } else {
        report.lines.push_back({"2*S <= 5*S_D - N_dbl",
                                CheckStatus::NotApplicable,
                                std::move(ineq_lhs), std::move(ineq_rhs)});
        report.note = "inequality needs all members positive";
    }

    report.inverse_stats = stats;
    set_headline(report);
    return report;
}

CertificateReport orbit_identity_check(const BigInt& n,
                                       const OrbitLimits& limits) {
    if (n < 1) throw std::invalid_argument("orbit identity needs n >= 1");
    OrbitLimits with_target = limits;
    with_target.stop_target = BigInt(2);
    Map collatz = builtin("collatz");
    Orbit orbit = iterate(collatz, n, with_target);

    CertificateReport report;
    report.check = "orbit-identity";
    if (orbit.reason != TruncationReason::TargetReached) {
        report.status = CheckStatus::Unresolved;
        report.note = "orbit did not reach 2 within the limits";
        return report;
    }

    BigInt sum = 0, sum_odd = 0, count_odd = 0;
    for (size_t i = 0; i < orbit.terms.size(); ++i) {
        sum += orbit.terms[i];
        if (orbit.branch_tags[i] == BranchTag::NonDivisible) {
            sum_odd += orbit.terms[i];
            count_odd += 1;
        }
    }
    BigInt lhs = sum - (5 * sum_odd + 2 * count_odd);
    BigInt rhs = 2 * (n - 1);
    report.lines.push_back({"S - (5*S_odd + 2*N_odd) = 2*(n - 1)",
                            lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail,
                            std::move(lhs), std::move(rhs)});
    set_headline(report);
    return report;
}

BigInt orbit_gap(const PiecewiseMap& map, const Orbit& orbit) {
    BigInt sum = 0, rhs = 0;
    for (const BigInt& alpha : orbit.terms) {
        sum += alpha;
        rhs += identity_term(map, alpha);
    }
    return (map.p - 1) * sum - rhs;
}

std::vector<GapRow> orbit_gap_scan(const PiecewiseMap& map, const BigInt& lo,
                                   const BigInt& hi,
                                   const BigInt& absorbing_value,
                                   const OrbitLimits& limits) {
    OrbitLimits with_target = limits;
    with_target.stop_target = absorbing_value;
    Map as_map = map;

    std::vector<GapRow> rows;
    for (BigInt n = lo; n <= hi; ++n) {
        Orbit orbit = iterate(as_map, n, with_target);
        if (orbit.reason != TruncationReason::TargetReached) continue;
        rows.push_back({n, orbit_gap(map, orbit)});
    }
    return rows;
}

}  // namespace pdyn
