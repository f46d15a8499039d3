#pragma once

#include "blockcensus/bigint.hpp"
#include "blockcensus/certificate.hpp"
#include "blockcensus/partition.hpp"
#include "blockcensus/symbols.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace blockcensus {

using ordered_json = nlohmann::ordered_json;

// Counts below 2^53 become JSON numbers; larger ones become decimal strings.
ordered_json json_count(const BigCount& v);
ordered_json json_partition(const Partition& p);
ordered_json json_symbol(const Symbol& s);

struct VerificationReport {
    std::vector<ordered_json> rows;
    long long violations = 0;  // verdict "violation" or a failed identity ("ok": false)

    void add(ordered_json row);
    void merge(VerificationReport&& other);
};

// Appends the comparison fields shared by certificate-bearing rows:
// ell, ell_kind, s_lower, p_pow_s, verdict (and trace when present).
void append_certificate_fields(ordered_json& row, const BoundCertificate& cert, Verdict verdict,
                               int p);

void write_jsonl(const VerificationReport& report, std::ostream& os);
void write_csv(const VerificationReport& report, std::ostream& os);

}  // namespace blockcensus
