// pdyn: CLI over the piecewise-map library. Subcommands: orbit, verify,
// padic-verify, cycles, identity. JSON on stdout (CSV where offered),
// messages on stderr.
//
// Exit codes: 0 success / all checks pass, 1 certificate or identity
// failure, 2 usage, 3 map error, 4 invalid cycle.
#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "pdyn/certify.hpp"
#include "pdyn/mapdsl.hpp"
#include "pdyn/orbit.hpp"
#include "pdyn/padic.hpp"
#include "pdyn/search.hpp"
#include "pdyn/serialize.hpp"

namespace {

using pdyn::BigInt;
using Json = pdyn::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMapError = 3;
constexpr int kExitBadCycle = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigInt parse_bigint(const std::string& text) {
    try {
        return BigInt(text, 10);
    } catch (const std::invalid_argument&) {
        throw UsageError("not an integer: '" + text + "'");
    }
}

std::pair<BigInt, BigInt> parse_range(const std::string& text) {
    const size_t sep = text.find("..", 1);  // allow a leading '-'
    if (sep == std::string::npos)
        throw UsageError("malformed range '" + text + "', expected lo..hi");
    BigInt lo = parse_bigint(text.substr(0, sep));
    BigInt hi = parse_bigint(text.substr(sep + 2));
    if (lo > hi)
        throw UsageError("malformed range '" + text + "': lo > hi");
    return {std::move(lo), std::move(hi)};
}

std::vector<BigInt> parse_cycle_list(const std::string& text) {
    std::vector<BigInt> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string item = text.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start);
        out.push_back(parse_bigint(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        out.push_back(text.substr(start, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void print_document(const std::string& command,
                    const std::vector<std::string>& argv, Json result,
                    std::chrono::steady_clock::time_point started) {
    const double ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - started)
            .count();
    std::cout << pdyn::io::make_document(command, argv, std::move(result), ms)
                     .dump(2)
              << "\n";
}

struct CommonArgs {
    std::string map_arg = "collatz";
    std::uint64_t max_steps = 1'000'000;
    unsigned magnitude_bits = 1024;

    pdyn::OrbitLimits limits() const {
        pdyn::OrbitLimits limits;
        limits.max_steps = max_steps;
        limits.max_magnitude_bits = magnitude_bits;
        return limits;
    }
};

int cmd_orbit(const std::vector<std::string>& argv, const CommonArgs& common,
              const std::string& seed_text, std::uint64_t steps,
              const std::string& stop_target) {
    auto started = std::chrono::steady_clock::now();
    pdyn::Map map = pdyn::load_map(common.map_arg);
    pdyn::OrbitLimits limits = common.limits();
    limits.max_steps = steps;
    if (!stop_target.empty()) limits.stop_target = parse_bigint(stop_target);

    pdyn::Orbit orbit = pdyn::iterate(map, parse_bigint(seed_text), limits);
    Json result;
    result["map"] = pdyn::io::map_json(map);
    result["orbit"] = pdyn::io::orbit_json(orbit);
    print_document("orbit", argv, std::move(result), started);
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& argv, const CommonArgs& common,
               const std::string& cycle_text, std::string checks_text) {
    auto started = std::chrono::steady_clock::now();
    pdyn::Map map = pdyn::load_map(common.map_arg);
    pdyn::Cycle cycle = pdyn::canonicalize(map, parse_cycle_list(cycle_text));

    const auto* pw = std::get_if<pdyn::PiecewiseMap>(&map);
    if (checks_text.empty()) {
        if (pw == nullptr)
            checks_text = "inv";
        else
            checks_text = pdyn::is_collatz(*pw) ? "t3,t4,eq1" : "t3,t4";
    }

    std::vector<pdyn::CertificateReport> reports;
    for (const std::string& token : split_tokens(checks_text)) {
        if (token == "t3") {
            if (pw == nullptr)
                throw pdyn::CertifyError(
                    pdyn::CertifyErrorKind::UnsupportedMap,
                    "check t3 needs a coefficient map");
            reports.push_back(pdyn::verify_rotation_identity(*pw, cycle));
        } else if (token == "t4") {
            if (pw == nullptr)
                throw pdyn::CertifyError(
                    pdyn::CertifyErrorKind::UnsupportedMap,
                    "check t4 needs a coefficient map");
            reports.push_back(pdyn::verify_sum_identity(*pw, cycle));
        } else if (token == "eq1") {
            reports.push_back(pdyn::verify_eq1(cycle));
        } else if (token == "inv") {
            reports.push_back(pdyn::verify_inverse_identities(cycle));
        } else {
            throw UsageError("unknown check '" + token +
                             "' (expected t3, t4, eq1 or inv)");
        }
    }

    bool all_ok = true;
    Json report_list = Json::array();
    for (const pdyn::CertificateReport& report : reports) {
        all_ok = all_ok && report.ok();
        report_list.push_back(pdyn::io::report_json(report));
    }
    Json result;
    result["map"] = pdyn::io::map_json(map);
    result["cycle"] = pdyn::io::cycle_json(cycle);
    result["checks"] = std::move(report_list);
    result["all_pass"] = all_ok;
    print_document("verify", argv, std::move(result), started);
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_padic(const std::vector<std::string>& argv, const CommonArgs& common,
              const std::string& seed_text, unsigned precision) {
    auto started = std::chrono::steady_clock::now();
    pdyn::Map map = pdyn::load_map(common.map_arg);
    pdyn::PadicTrunc residual =
        pdyn::correspondence_residual(map, parse_bigint(seed_text), precision);

    Json result;
    result["map"] = pdyn::io::map_json(map);
    result["n"] = seed_text;
    result["residual"] = pdyn::io::padic_json(residual);
    result["pass"] = residual.is_zero();
    print_document("padic-verify", argv, std::move(result), started);
    return residual.is_zero() ? kExitOk : kExitCheckFailed;
}

int cmd_cycles(const std::vector<std::string>& argv, const CommonArgs& common,
               const std::string& range_text, unsigned threads,
               const std::string& checks_text, const std::string& format) {
    auto started = std::chrono::steady_clock::now();
    pdyn::Map map = pdyn::load_map(common.map_arg);

    pdyn::SearchConfig config;
    std::tie(config.lo, config.hi) = parse_range(range_text);
    config.limits = common.limits();
    config.threads = threads;
    if (!checks_text.empty()) {
        config.checks.clear();
        for (const std::string& token : split_tokens(checks_text)) {
            if (token == "t3")
                config.checks.push_back(pdyn::CheckKind::RotationIdentity);
            else if (token == "t4")
                config.checks.push_back(pdyn::CheckKind::SumIdentity);
            else if (token == "eq1")
                config.checks.push_back(pdyn::CheckKind::Eq1);
            else if (token == "inv")
                config.checks.push_back(pdyn::CheckKind::Inverse);
            else
                throw UsageError("unknown check '" + token + "'");
        }
    }

    pdyn::SearchResult found = pdyn::search_range(map, config);
    bool all_ok = true;
    for (const pdyn::CycleRecord& record : found.cycles)
        for (const pdyn::CertificateReport& report : record.certificates)
            all_ok = all_ok && report.ok();

    if (format == "csv") {
        std::cout << pdyn::io::cycles_csv(found);
    } else {
        Json result;
        result["map"] = pdyn::io::map_json(map);
        result["range"] = Json{{"lo", pdyn::to_string(config.lo)},
                               {"hi", pdyn::to_string(config.hi)}};
        Json payload = pdyn::io::search_result_json(found);
        for (auto& [key, value] : payload.items()) result[key] = value;
        print_document("cycles", argv, std::move(result), started);
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_identity(const std::vector<std::string>& argv,
                 const CommonArgs& common, const std::string& range_text,
                 const std::string& absorbing_text,
                 const std::string& format) {
    auto started = std::chrono::steady_clock::now();
    pdyn::Map map = pdyn::load_map(common.map_arg);
    const auto* pw = std::get_if<pdyn::PiecewiseMap>(&map);
    if (pw == nullptr)
        throw pdyn::CertifyError(pdyn::CertifyErrorKind::UnsupportedMap,
                                 "identity needs a coefficient map");

    auto [lo, hi] = parse_range(range_text);
    const BigInt absorbing = parse_bigint(absorbing_text);
    const bool asserted = pdyn::is_collatz(*pw) && absorbing == 2;

    pdyn::OrbitLimits limits = common.limits();
    limits.stop_target = absorbing;

    std::vector<pdyn::io::IdentityRow> rows;
    bool all_pass = true;
    for (BigInt n = lo; n <= hi; ++n) {
        pdyn::io::IdentityRow row;
        row.n = n;
        pdyn::Orbit orbit = pdyn::iterate(map, n, limits);
        row.reached = orbit.reason == pdyn::TruncationReason::TargetReached;
        if (row.reached) row.gap = pdyn::orbit_gap(*pw, orbit);
        if (asserted) {
            row.asserted = true;
            row.expected = 2 * (n - 1);
            row.pass = row.reached && row.gap == row.expected;
            all_pass = all_pass && row.pass;
        }
        rows.push_back(std::move(row));
    }

    if (format == "csv") {
        std::cout << pdyn::io::identity_csv(rows);
    } else {
        Json result;
        result["map"] = pdyn::io::map_json(map);
        result["absorbing"] = pdyn::to_string(absorbing);
        result["asserted"] = asserted;
        result["rows"] = pdyn::io::identity_rows_json(rows);
        if (asserted) result["all_pass"] = all_pass;
        print_document("identity", argv, std::move(result), started);
    }
    return (!asserted || all_pass) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> argv_echo(argv, argv + argc);

    CLI::App app{"piecewise polynomial integer dynamics toolkit"};
    app.require_subcommand(1);

    CommonArgs common;

    auto* orbit_cmd = app.add_subcommand("orbit", "iterate an orbit");
    std::string orbit_seed;
    std::uint64_t orbit_steps = 1'000'000;
    std::string orbit_stop;
    orbit_cmd->add_option("n", orbit_seed, "seed")->required();
    orbit_cmd->add_option("--map", common.map_arg, "builtin name or map file");
    orbit_cmd->add_option("--steps", orbit_steps, "maximum map applications");
    orbit_cmd->add_option("--stop-target", orbit_stop,
                          "stop when this value appears");
    orbit_cmd->add_option("--max-magnitude-bits", common.magnitude_bits,
                          "stop when |term| exceeds 2^bits");

    auto* verify_cmd = app.add_subcommand("verify", "certify a cycle");
    std::string verify_cycle, verify_checks;
    verify_cmd->add_option("--map", common.map_arg, "builtin name or map file");
    verify_cmd->add_option("--cycle", verify_cycle,
                           "comma-separated cycle members")
        ->required();
    verify_cmd->add_option("--checks", verify_checks,
                           "comma-separated subset of t3,t4,eq1,inv");

    auto* padic_cmd = app.add_subcommand(
        "padic-verify", "finite-precision orbit series residual");
    std::string padic_seed;
    unsigned padic_precision = 64;
    padic_cmd->add_option("n", padic_seed, "seed")->required();
    padic_cmd->add_option("--map", common.map_arg, "builtin name or map file");
    padic_cmd->add_option("--precision", padic_precision,
                          "number of base-p digits");

    auto* cycles_cmd =
        app.add_subcommand("cycles", "exhaustive cycle search over seeds");
    std::string cycles_range, cycles_checks, cycles_format = "json";
    unsigned cycles_threads = 1;
    cycles_cmd->add_option("--map", common.map_arg, "builtin name or map file");
    cycles_cmd->add_option("--range", cycles_range, "seed range lo..hi")
        ->required();
    cycles_cmd->add_option("--threads", cycles_threads, "worker count");
    cycles_cmd->add_option("--max-steps", common.max_steps,
                           "per-seed map application budget");
    cycles_cmd->add_option("--max-magnitude-bits", common.magnitude_bits,
                           "per-term magnitude bound, in bits");
    cycles_cmd->add_option("--checks", cycles_checks,
                           "comma-separated subset of t3,t4,eq1,inv");
    cycles_cmd->add_option("--format", cycles_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* identity_cmd = app.add_subcommand(
        "identity", "orbit gap table; asserts gap = 2(n-1) for Collatz");
    std::string identity_range, identity_absorbing = "2",
                identity_format = "json";
    identity_cmd->add_option("--range", identity_range, "seed range lo..hi")
        ->required();
    identity_cmd->add_option("--map", common.map_arg,
                             "builtin name or map file");
    identity_cmd->add_option("--absorbing", identity_absorbing,
                             "orbit stop value");
    identity_cmd->add_option("--max-steps", common.max_steps,
                             "per-seed map application budget");
    identity_cmd->add_option("--format", identity_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (orbit_cmd->parsed())
            return cmd_orbit(argv_echo, common, orbit_seed, orbit_steps,
                             orbit_stop);
        if (verify_cmd->parsed())
            return cmd_verify(argv_echo, common, verify_cycle, verify_checks);
        if (padic_cmd->parsed())
            return cmd_padic(argv_echo, common, padic_seed, padic_precision);
        if (cycles_cmd->parsed())
            return cmd_cycles(argv_echo, common, cycles_range, cycles_threads,
                              cycles_checks, cycles_format);
        if (identity_cmd->parsed())
            return cmd_identity(argv_echo, common, identity_range,
                                identity_absorbing, identity_format);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pdyn::CycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadCycle;
    } catch (const pdyn::MapFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMapError;
    } catch (const pdyn::MapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMapError;
    } catch (const pdyn::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMapError;
    } catch (const pdyn::CertifyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMapError;
    } catch (const pdyn::PadicError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMapError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
