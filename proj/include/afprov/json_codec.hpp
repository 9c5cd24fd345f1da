#pragma once

// nlohmann::json fragments shared by the document serializer and the HTTP
// service. Object keys are sorted by nlohmann's default std::map backing.

#include <json.hpp>

#include "afprov/document.hpp"

namespace afprov::json {

using Json = nlohmann::json;

Json to_json(const ArgumentationFramework& af);
Json to_json(const GroundedSolution& sol);
Json to_json(const StableSolution& s);
Json to_json(const CriticalSetFamily& family);
Json to_json(const ProvenanceOverlay& overlay);
Json to_json(const LayoutEntry& entry);
Json to_json(const LayeredLayout& layout);
Json to_json(const SolutionDocument& doc);
Json edge_json(const AttackEdge& edge);

/// Throw Error(SchemaError).
ArgumentationFramework af_from_json(const Json& j);
std::vector<AttackEdge> edges_from_json(const Json& j);
SolutionDocument document_from_json(const Json& j);

/// Compact dump plus trailing newline.
std::string dump(const Json& j);

}  // namespace afprov::json
