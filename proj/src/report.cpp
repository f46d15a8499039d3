#include "blockcensus/report.hpp"

#include <ostream>
#include <set>

namespace blockcensus {

ordered_json json_count(const BigCount& v) {
    if (fits_json_number(v)) return static_cast<std::int64_t>(v);
    return v.str();
}

ordered_json json_partition(const Partition& p) {
    ordered_json a = ordered_json::array();
    for (int part : p) a.push_back(part);
    return a;
}

ordered_json json_symbol(const Symbol& s) {
    ordered_json a = ordered_json::array();
    a.push_back(s.x);
    a.push_back(s.y);
    return a;
}

void VerificationReport::add(ordered_json row) {
    bool bad = false;
    if (auto it = row.find("verdict"); it != row.end() && *it == "violation") bad = true;
    if (auto it = row.find("ok"); it != row.end() && it->is_boolean() && !it->get<bool>())
        bad = true;
    if (bad) ++violations;
    rows.push_back(std::move(row));
}

void VerificationReport::merge(VerificationReport&& other) {
    violations += other.violations;
    for (auto& r : other.rows) rows.push_back(std::move(r));
    other.rows.clear();
    other.violations = 0;
}

void append_certificate_fields(ordered_json& row, const BoundCertificate& cert, Verdict verdict,
                               int p) {
    row["ell"] = json_count(certified_count(cert));
    row["ell_kind"] = cert.ell_exact ? "exact" : "upper";
    row["s_lower"] = cert.s_lower;
    row["p_pow_s"] = pow_big(p, static_cast<unsigned>(cert.s_lower)).str();
    row["verdict"] = verdict_name(verdict);
    if (!cert.trace.empty()) row["trace"] = cert.trace;
}

void write_jsonl(const VerificationReport& report, std::ostream& os) {
    for (auto& row : report.rows) os << row.dump() << '\n';
    ordered_json summary;
    summary["summary"]["rows"] = report.rows.size();
    summary["summary"]["violations"] = report.violations;
    os << summary.dump() << '\n';
}

namespace {

std::string csv_escape(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_cell(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return csv_escape(v.get<std::string>());
    return csv_escape(v.dump());
}

}  // namespace

void write_csv(const VerificationReport& report, std::ostream& os) {
    // Column set: union of keys in first-appearance order.
    std::vector<std::string> cols;
    std::set<std::string> seen;
    for (auto& row : report.rows)
        for (auto& [k, v] : row.items())
            if (seen.insert(k).second) cols.push_back(k);
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_escape(cols[i]);
    os << '\n';
    for (auto& row : report.rows) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) os << ',';
            if (auto it = row.find(cols[i]); it != row.end()) os << csv_cell(*it);
        }
        os << '\n';
    }
}

}  // namespace blockcensus
