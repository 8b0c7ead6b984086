#pragma once

#include <json.hpp>
#include <string>

#include "indlab/constructions.hpp"
#include "indlab/counting.hpp"
#include "indlab/decomposition.hpp"
#include "indlab/optimizer.hpp"
#include "indlab/verifier.hpp"

namespace indlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// Payload records. Vertices, roles and parts are 1-indexed; rationals are
// exact "p/q" strings next to a decimal rendering.

Json rational_json(const Rational& q);
Json pattern_json(const Pattern& p);
/// [[u, v, color], ...] over non-empty pairs.
Json graph_json(const ColoredGraph& g);
Json tree_json(const BlowupTree& t);

Json count_json(const Pattern& p, const ColoredGraph& h, const RoleStats& s, const GlobalStats& g);
Json audit_json(const Decomposition& d);
Json search_json(const SearchReport& r);
Json exact_json(const ExactResult& r);
Json battery_json(const BatteryReport& r, const PropertiesReport& props);

enum class Format { Json, Table, Csv };

/// JSON is canonical; table and csv are views derived from it.
std::string render(const Json& report, Format format);

}  // namespace indlab
