#pragma once

// JSON interchange. Point sets are {"dim": n, "points": [["3/2", "1/2"], ...]}
// with every number in the canonical rational grammar. Pair indices inside
// JSON documents are 0-based.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "oddset/geometry.hpp"
#include "oddset/rationalize.hpp"
#include "oddset/search.hpp"

namespace oddset {

using Json = nlohmann::ordered_json;

Json to_json(const PointSet& ps);
/// Throws std::invalid_argument on schema errors, dimension mismatches and
/// duplicate points.
PointSet point_set_from_json(const Json& doc);

/// Same layout with decimal coordinate strings and an optional
/// "distances": [[i, j, d], ...].
DecimalPointSet decimal_point_set_from_json(const Json& doc);

Json to_json(const OddCertificate& cert);
Json to_json(const ParityAudit& audit);
Json to_json(const CliqueResult& result, const BoundReport& report, const LatticeBox& box);
Json to_json(const RationalizeResult& result);
Json to_json(const DyadicResult& result);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);

// Plain-text renderings for people; never parsed back.
std::string format_text(const PointSet& ps);
std::string format_text(const OddCertificate& cert);
std::string format_text(const ParityAudit& audit);

}  // namespace oddset
