// JSON and CSV views of the library values, shared by the CLI and the
// tests. Integers that may exceed 64 bits are emitted as decimal strings.
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "pdyn/certify.hpp"
#include "pdyn/orbit.hpp"
#include "pdyn/padic.hpp"
#include "pdyn/search.hpp"

namespace pdyn::io {

using Json = nlohmann::ordered_json;

std::string status_str(CheckStatus status);
std::string branch_str(BranchTag tag);
std::string reason_str(TruncationReason reason);

Json map_json(const Map& map);
Json orbit_json(const Orbit& orbit);
Json cycle_json(const Cycle& cycle);
Json stats_json(const CycleStats& stats);
Json inverse_stats_json(const InverseCycleStats& stats);
Json report_json(const CertificateReport& report);
Json padic_json(const PadicTrunc& value);
Json search_result_json(const SearchResult& result);

/// Envelope every command prints: schema_version, command echo, result,
/// timing.
Json make_document(const std::string& command,
                   const std::vector<std::string>& argv, Json result,
                   double elapsed_ms);

/// One row of the identity table. Assertion fields are meaningful only
/// when `asserted` is set (Collatz with absorbing value 2).
struct IdentityRow {
    BigInt n;
    bool reached = false;
    BigInt gap;       // valid when reached
    bool asserted = false;
    BigInt expected;  // valid when asserted
    bool pass = false;
};

Json identity_rows_json(const std::vector<IdentityRow>& rows);

// RFC 4180: header row; fields quoted when they contain separators.
std::string csv_escape(const std::string& field);
std::string cycles_csv(const SearchResult& result);
std::string identity_csv(const std::vector<IdentityRow>& rows);

}  // namespace pdyn::io
