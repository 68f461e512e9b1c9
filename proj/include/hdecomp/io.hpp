#pragma once

#include <string>

#include "json.hpp"

#include "hdecomp/decomposition.hpp"
#include "hdecomp/hypergraph.hpp"
#include "hdecomp/intersection_graph.hpp"
#include "hdecomp/packing.hpp"
#include "hdecomp/verification.hpp"

namespace hdecomp {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"n": int, "r": int, "edges": [[int, ...], ...]}, 0-based, each edge strictly ascending.
Json to_json(const Hypergraph& g);
// Rejects unsorted edges, duplicate edges and out-of-range labels with FormatError.
Hypergraph hypergraph_from_json(const Json& j);

// {"value", "copies", "leftover", "optimal"}
Json to_json(const PackingCertificate& cert);
PackingCertificate certificate_from_json(const Json& j);

// {"phi", "source", "parts": [{"type": "single", "edge"} | {"type": "copy", "edges"}]}
Json to_json(const Decomposition& d, std::int64_t phi);
Decomposition decomposition_from_json(const Json& j);

// Adjacency lists plus an EdgeId -> REdge label table.
Json to_json(const IntersectionGraph& g);

Json to_json(const VerificationReport& report, bool with_timing);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace hdecomp
