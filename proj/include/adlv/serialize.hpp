#pragma once

#include <string>

#include "json.hpp"

#include "adlv/appendix_verify.hpp"

namespace adlv {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(const DatumConfig& c);
// Accepts {"type": "E", "rank": 8, "isogeny": "adjoint"}; throws StructuralError.
DatumConfig datum_config_from_json(const Json& j);
Isogeny parse_isogeny(const std::string& s);
const char* to_string(Isogeny iso);

Json to_json(const RootDatum& d, const Coweight& v);
Json to_json(const RootDatum& d, const Root& a);
Json to_json(SimpleSubset J);
// Integer array of length d.rank(); throws StructuralError with the offending position.
Coweight coweight_from_json(const RootDatum& d, const Json& j);
SimpleSubset subset_from_json(const RootDatum& d, const Json& j);

// {"mu": [...], "w": reduced word}; length-zero elements also carry "pi1".
Json to_json(const RootDatum& d, const ExtAffineElement& x);
ExtAffineElement element_from_json(const RootDatum& d, const Json& j);

Json to_json(const RootDatum& d, const AdmissibleSet& adm);
Json to_json(const RootDatum& d, const ShortDatum& sd);
Json to_json(const HNClass& c);

// Folded elements carry both coordinate systems.
Json to_json(const FoldingDatum& fd, const ExtAffineElement& folded);

struct DotEdge {
  int a = 0, b = 0;
  std::string label;
};
// Undirected DOT; vertices are emitted in the given order.
std::string render_dot(const std::vector<std::string>& labels, const std::vector<DotEdge>& edges);

// Vertices are reduced words; vertices sorted by (length, word), edges by endpoints.
std::string graph_to_dot(const ConnectivityGraph& g);
Json graph_to_json(const ConnectivityGraph& g);
Json to_json(const ConnectivityGraph& g, const HypReport& r);
// Stable hex digest of a certificate.
std::string certificate_digest(const RootDatum& d, const EdgeCertificate& c);

Json to_json(const SeqSweep& s);
Json to_json(const EmptySweep& s);
Json to_json(const SuiteReport& r);
Json to_json(const G2Report& r);

}  // namespace adlv
