#pragma once

#include <map>
#include <string>
#include <vector>

#include "dslice/obstruct.hpp"

#include "json.hpp"

namespace dslice::io {

using nlohmann::json;

/// Named knot records loaded from a knot file.
struct KnotFile {
    std::vector<std::string> order;                 // declaration order
    std::map<std::string, KnotDesc> descs;          // leaf records
    std::map<std::string, std::vector<std::pair<std::string, long>>> sums;

    bool has(const std::string& name) const;
};

KnotFile load_knot_file(const std::string& path);       // throws MalformedInput
KnotFile parse_knot_file(const json& j);

/// Resolve a record name (leaf or sum) to an expression.
KnotExpr resolve(const KnotFile& kf, const std::string& name);

/// Parse "K + (-1)K_3 + 2trefoil" against the loaded records.
KnotExpr parse_sum_expr(const KnotFile& kf, const std::string& expr);

DSource load_d_records(const std::string& path);        // throws MalformedRecord
DSource parse_d_records(const json& j);

json to_json(const LinkedGroup& h);
LinkedGroup group_from_json(const json& j);

json report_json(const Verdict& v);
json report_json(const SplitVerdict& v);
std::string report_text(const Verdict& v);
std::string report_text(const SplitVerdict& v);

/// Report for the cover command: group, linking form, deck action, metabolizers.
json cover_report_json(const std::string& subject, const LinkedGroup& h,
                       const std::vector<Subgroup>& mets,
                       const std::vector<MetabolizerPair>& pairs, bool lambda_only);
std::string cover_report_text(const std::string& subject, const LinkedGroup& h,
                              const std::vector<Subgroup>& mets,
                              const std::vector<MetabolizerPair>& pairs, bool lambda_only);

/// Re-run a report's claims from the report content alone.
bool verify_report(const json& report, std::string& diagnostics);

}  // namespace dslice::io
