#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "latin/bounds.hpp"
#include "latin/codes.hpp"
#include "latin/cuboid.hpp"
#include "latin/enumeration.hpp"

namespace latin {

// JSON document schemas. Cells are stored 0-based, EMPTY as null; the
// oneBased flag shifts symbols and word coordinates by +1 on output only.

nlohmann::json cuboidToJson(const Hypercuboid& c, bool oneBased = false);
Hypercuboid cuboidFromJson(const nlohmann::json& doc);

nlohmann::json codeToJson(const MixedCode& c, bool oneBased = false);
MixedCode codeFromJson(const nlohmann::json& doc);

nlohmann::json verdictToJson(const ExistenceVerdict& v);
nlohmann::json boundReportToJson(const BoundReport& rep);
nlohmann::json countResultToJson(const CountResult& res);

/// CSV row for count tables: sizes;class,semiReduced,total,nodes,millis.
std::string countResultToCsvRow(const CuboidShape& shape, const CountResult& res);
std::string countResultCsvHeader();

Hypercuboid loadCuboid(const std::string& path);
MixedCode loadCode(const std::string& path);

} // namespace latin
