#pragma once

// JSON views of the pipeline's results. Every number is an integer.

#include "besforge/degsearch.hpp"
#include "besforge/driver.hpp"
#include "besforge/unpack.hpp"

#include "json.hpp"

namespace besforge {

using Json = nlohmann::ordered_json;

Json to_json(const Configuration & cfg);
Json to_json(const CandidateF & f);
Json to_json(const SearchResult & r);
Json to_json(const LemmaBoundsReport & r);
Json to_json(const InvolvementAudit & a);
Json to_json(const DriverParams & p);
Json to_json(const DriverReport & r);

/// Array of step records keyed i, vertex, side, d, class, dE, dV, apexes,
/// new_edges, new_vertices.
Json trace_to_json(const UnpackTrace & trace);

} // namespace besforge
