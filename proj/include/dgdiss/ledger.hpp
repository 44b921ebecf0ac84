#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "dgdiss/errors.hpp"

namespace dgdiss {

/// One row of the per-step energy balance record. slack is
/// E(u^{n-1}(t^{n-1})) - E(u^n(t^n)) - int_slab D dt and is expected to be
/// nonnegative up to time-quadrature error and rounding. Row 0 carries the
/// initial energy with zero dissipation and slack.
struct LedgerRow {
    int step = 0;
    double t = 0.0;
    double energy = 0.0;
    double dissipation_integral = 0.0;
    double slack = 0.0;
    int newton_iters = 0;
    double residual_norm = 0.0;
};

using EnergyLedger = std::vector<LedgerRow>;

namespace detail {

/// Shortest-round-trip decimal rendering at 17 significant digits,
/// locale-independent.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s, int line) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw IoError("ledger csv line " + std::to_string(line) + ": bad float field '" + s + "'");
    return v;
}

inline long parse_int(const std::string& s, int line) {
    long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw IoError("ledger csv line " + std::to_string(line) + ": bad integer field '" + s + "'");
    return v;
}

}  // namespace detail

inline constexpr const char* kLedgerCsvHeader = "step,t,energy,dissipation_integral,slack,newton_iters,residual_norm";

inline void write_csv(const EnergyLedger& ledger, std::ostream& out) {
    out << kLedgerCsvHeader << "\n";
    for (const auto& row : ledger) {
        out << row.step << ',' << detail::format_double(row.t) << ',' << detail::format_double(row.energy) << ','
            << detail::format_double(row.dissipation_integral) << ',' << detail::format_double(row.slack) << ','
            << row.newton_iters << ',' << detail::format_double(row.residual_norm) << "\n";
    }
}

inline void write_csv(const EnergyLedger& ledger, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: keep LF endings everywhere
    if (!out) throw IoError("write_csv: cannot open '" + path + "' for writing");
    write_csv(ledger, out);
    out.flush();
    if (!out) throw IoError("write_csv: write to '" + path + "' failed");
}

inline EnergyLedger parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("parse_csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kLedgerCsvHeader) throw IoError("parse_csv: unexpected header '" + line + "'");

    EnergyLedger ledger;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 7) throw IoError("ledger csv line " + std::to_string(lineno) + ": expected 7 fields");
        LedgerRow row;
        row.step = static_cast<int>(detail::parse_int(fields[0], lineno));
        row.t = detail::parse_double(fields[1], lineno);
        row.energy = detail::parse_double(fields[2], lineno);
        row.dissipation_integral = detail::parse_double(fields[3], lineno);
        row.slack = detail::parse_double(fields[4], lineno);
        row.newton_iters = static_cast<int>(detail::parse_int(fields[5], lineno));
        row.residual_norm = detail::parse_double(fields[6], lineno);
        ledger.push_back(row);
    }
    return ledger;
}

inline EnergyLedger parse_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("parse_csv: cannot open '" + path + "'");
    return parse_csv(in);
}

}  // namespace dgdiss
