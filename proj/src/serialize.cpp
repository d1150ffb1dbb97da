#include "pdyn/serialize.hpp"

#include "pdyn/mapdsl.hpp"

namespace pdyn::io {

namespace {

std::string str(const BigInt& x) { return to_string(x); }

Json bigints(const std::vector<BigInt>& xs) {
    Json out = Json::array();
    for (const BigInt& x : xs) out.push_back(str(x));
    return out;
}

Json branch_stats_json(const BranchStats& stats) {
    Json out;
    out["count"] = str(stats.count);
    out["sum"] = str(stats.sum);
    if (!stats.power_sums.empty()) out["power_sums"] = bigints(stats.power_sums);
    return out;
}

}  // namespace

std::string status_str(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "not-applicable";
        case CheckStatus::Unresolved: return "unresolved";
    }
    return "?";
}

std::string branch_str(BranchTag tag) {
    return tag == BranchTag::Divisible ? "divisible" : "nondivisible";
}

std::string reason_str(TruncationReason reason) {
    switch (reason) {
        case TruncationReason::StepLimit: return "step-limit";
        case TruncationReason::MagnitudeLimit: return "magnitude-limit";
        case TruncationReason::CycleClosed: return "cycle-closed";
        case TruncationReason::TargetReached: return "target-reached";
    }
    return "?";
}

Json map_json(const Map& map) {
    Json out;
    if (const auto* pw = std::get_if<PiecewiseMap>(&map)) {
        out["kind"] = "piecewise";
        if (!pw->name.empty()) out["name"] = pw->name;
        out["p"] = str(pw->p);
        out["divisible"] = print_poly(Polynomial{pw->a});
        out["otherwise"] = print_poly(Polynomial{pw->b});
    } else {
        out["kind"] = "special";
        out["name"] = "inverse-collatz";
    }
    return out;
}

Json orbit_json(const Orbit& orbit) {
    Json out;
    out["seed"] = str(orbit.seed);
    out["terms"] = bigints(orbit.terms);
    Json tags = Json::array();
    for (BranchTag tag : orbit.branch_tags) tags.push_back(branch_str(tag));
    out["branch_tags"] = std::move(tags);
    out["truncation_reason"] = reason_str(orbit.reason);
    out["steps"] = orbit.steps();

    BigInt sum = 0, sum_div = 0, count_div = 0, sum_nondiv = 0,
           count_nondiv = 0;
    for (size_t i = 0; i < orbit.terms.size(); ++i) {
        sum += orbit.terms[i];
        if (orbit.branch_tags[i] == BranchTag::Divisible) {
            sum_div += orbit.terms[i];
            count_div += 1;
        } else {
            sum_nondiv += orbit.terms[i];
            count_nondiv += 1;
        }
    }
    Json stats;
    stats["sum"] = str(sum);
    stats["divisible"] = Json{{"count", str(count_div)}, {"sum", str(sum_div)}};
    stats["nondivisible"] =
        Json{{"count", str(count_nondiv)}, {"sum", str(sum_nondiv)}};
    out["stats"] = std::move(stats);
    return out;
}

Json cycle_json(const Cycle& cycle) {
    Json out;
    out["members"] = bigints(cycle.members);
    out["length"] = cycle.length();
    out["min_member"] = str(cycle.min_member());
    return out;
}

Json stats_json(const CycleStats& stats) {
    Json out;
    out["sum"] = str(stats.sum);
    out["divisible"] = branch_stats_json(stats.divisible);
    out["nondivisible"] = branch_stats_json(stats.nondivisible);
    return out;
}

Json inverse_stats_json(const InverseCycleStats& stats) {
    Json out;
    out["sum"] = str(stats.sum);
    out["sum_d"] = str(stats.sum_d);
    out["count_d"] = str(stats.count_d);
    out["sum_dbl"] = str(stats.sum_dbl);
    out["count_dbl"] = str(stats.count_dbl);
    return out;
}

Json report_json(const CertificateReport& report) {
    Json out;
    out["check"] = report.check;
    out["status"] = status_str(report.status);
    out["lhs"] = str(report.lhs);
    out["rhs"] = str(report.rhs);
    Json lines = Json::array();
    for (const CheckLine& line : report.lines) {
        Json row;
        row["name"] = line.name;
        row["status"] = status_str(line.status);
        row["lhs"] = str(line.lhs);
        row["rhs"] = str(line.rhs);
        lines.push_back(std::move(row));
    }
    out["lines"] = std::move(lines);
    if (report.stats) out["stats"] = stats_json(*report.stats);
    if (report.inverse_stats)
        out["inverse_stats"] = inverse_stats_json(*report.inverse_stats);
    if (!report.note.empty()) out["note"] = report.note;
    return out;
}

Json padic_json(const PadicTrunc& value) {
    Json out;
    out["p"] = str(value.base());
    out["precision"] = value.precision();
    out["residue"] = str(value.residue());
    Json digits = Json::array();
    for (const BigInt& digit : value.digits()) {
        if (digit.fits_ulong_p())
            digits.push_back(digit.get_ui());
        else
            digits.push_back(str(digit));
    }
    out["digits"] = std::move(digits);
    out["is_zero"] = value.is_zero();
    return out;
}

Json search_result_json(const SearchResult& result) {
    Json out;
    Json cycles = Json::array();
    for (const CycleRecord& record : result.cycles) {
        Json entry = cycle_json(record.cycle);
        Json reports = Json::array();
        for (const CertificateReport& report : record.certificates)
            reports.push_back(report_json(report));
        entry["certificates"] = std::move(reports);
        cycles.push_back(std::move(entry));
    }
    out["cycles"] = std::move(cycles);
    out["unresolved"] = result.unresolved;
    out["scanned"] = str(result.scanned);
    return out;
}

Json make_document(const std::string& command,
                   const std::vector<std::string>& argv, Json result,
                   double elapsed_ms) {
    Json doc;
    doc["schema_version"] = 1;
    doc["command"] = command;
    Json echo = Json::array();
    for (const std::string& arg : argv) echo.push_back(arg);
    doc["argv"] = std::move(echo);
    doc["result"] = std::move(result);
    doc["elapsed_ms"] = elapsed_ms;
    return doc;
}

Json identity_rows_json(const std::vector<IdentityRow>& rows) {
    Json out = Json::array();
    for (const IdentityRow& row : rows) {
        Json entry;
        entry["n"] = str(row.n);
        entry["reached"] = row.reached;
        if (row.reached) entry["gap"] = str(row.gap);
        if (row.asserted) {
            entry["expected"] = str(row.expected);
            entry["pass"] = row.pass;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string cycles_csv(const SearchResult& result) {
    std::string out = "index,min_member,length,members,certificates,all_ok\r\n";
    for (size_t i = 0; i < result.cycles.size(); ++i) {
        const CycleRecord& record = result.cycles[i];
        std::string members;
        for (const BigInt& member : record.cycle.members) {
            if (!members.empty()) members += " ";
            members += to_string(member);
        }
        std::string checks;
        bool all_ok = true;
        for (const CertificateReport& report : record.certificates) {
            if (!checks.empty()) checks += " ";
            checks += report.check + "=" + status_str(report.status);
            all_ok = all_ok && report.ok();
        }
        out += std::to_string(i) + "," + to_string(record.cycle.min_member()) +
               "," + std::to_string(record.cycle.length()) + "," +
               csv_escape(members) + "," + csv_escape(checks) + "," +
               (all_ok ? "true" : "false") + "\r\n";
    }
    return out;
}

std::string identity_csv(const std::vector<IdentityRow>& rows) {
    std::string out = "n,reached,gap,expected,pass\r\n";
    for (const IdentityRow& row : rows) {
        out += to_string(row.n);
        out += row.reached ? ",true," + to_string(row.gap) : ",false,";
        if (row.asserted)
            out += "," + to_string(row.expected) + "," +
                   (row.pass ? "true" : "false");
        else
            out += ",,";
        out += "\r\n";
    }
    return out;
}

}  // namespace pdyn::io
