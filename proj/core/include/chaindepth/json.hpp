#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "chaindepth/chains.hpp"
#include "chaindepth/formulas.hpp"
#include "chaindepth/lattice.hpp"
#include "chaindepth/numtheory.hpp"

namespace chaindepth {

using Json = nlohmann::json;

inline constexpr int kJsonSchema = 1;

// Every result document carries "schema": 1. Parsing rejects other schemas.
void to_json(Json& j, const FactoredInt& x);
void from_json(const Json& j, FactoredInt& x);
void to_json(Json& j, const FamilyDescriptor& x);
void from_json(const Json& j, FamilyDescriptor& x);
void to_json(Json& j, const DepthResult& x);
void from_json(const Json& j, DepthResult& x);
void to_json(Json& j, const Depth3Verdict& x);
void from_json(const Json& j, Depth3Verdict& x);
void to_json(Json& j, const BoundReport& x);
void from_json(const Json& j, BoundReport& x);
void to_json(Json& j, const Thm38Report& x);
void from_json(const Json& j, Thm38Report& x);
void to_json(Json& j, const ChainStep& x);
void from_json(const Json& j, ChainStep& x);
void to_json(Json& j, const ChainDescriptor& x);
void from_json(const Json& j, ChainDescriptor& x);
void to_json(Json& j, const GoldbachTriple& x);
void from_json(const Json& j, GoldbachTriple& x);
void to_json(Json& j, const Thm16Witness& x);
void from_json(const Json& j, Thm16Witness& x);
void to_json(Json& j, const Prop18Witness& x);
void from_json(const Json& j, Prop18Witness& x);

/// Nodes with generator words, cover edges, depth, length, cd, cr and the
/// witness chains.
Json lattice_document(const SubgroupLattice& lat);
/// Hasse diagram in Graphviz syntax, top at the top.
std::string lattice_dot(const SubgroupLattice& lat);

}  // namespace chaindepth
