#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/suites.hpp"

namespace nilorb {

using Json = nlohmann::json;

// All payloads funnel through JSON; the table and CSV renderers read the
// payload back, so a cached payload and a cold computation produce identical
// output in every format.

// One row per catalog entry, classification-backed, stable field names:
// {type, rank, label:{partition|wdd, family, name}, dim, even, richardson,
//  rigid, extreme, lonely, dMin, dDy, dMax}.
Json orbitsPayload(const TypeContext& ctx, uint64_t seed, int jobs);

// Selects the row for `label` out of orbitsPayload and rewraps it; throws
// std::invalid_argument when the label names no orbit of the type.
Json orbitInfoFromPayload(const Json& orbits, const OrbitLabel& label);

// Ideal report: always the total count; with `classified`, one class object
// {orbit, idealCount, dims:[...], maximal:[generatorLists],
//  minimal:[generatorLists], hasseConnected} per orbit.
Json idealsPayload(const TypeContext& ctx, uint64_t seed, int jobs, bool classified);

Json suitesPayload(const std::vector<SuiteResult>& results);

std::string renderTable(const Json& payload);
std::string renderCsv(const Json& payload);
std::string renderJson(const Json& payload);

}  // namespace nilorb
