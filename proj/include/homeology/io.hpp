#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "homeology/blocks.hpp"
#include "homeology/chain.hpp"
#include "homeology/checks.hpp"
#include "homeology/complex.hpp"
#include "homeology/maps.hpp"
#include "homeology/spectral.hpp"

namespace hml {

using Json = nlohmann::json;

/// Throws Error(Parse) with "line L, column C" for malformed text.
Json parse_json(const std::string& text, const std::string& source = "input");

/// {"vertices": [...], "facets": [[...], ...]}; vertex order is array order.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& k);

Json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const Json& j);
/// Degree -> group.
Json graded_to_json(const GradedGroup& g);
/// {"page": r, "cells": {"p,q": {"rank": .., "torsion": [..]}}}
Json table_to_json(const BigradedTable& t);
BigradedTable table_from_json(const Json& j);

/// p on rows, q on columns, zero cells blank.
std::string table_to_markdown(const BigradedTable& t);
std::string graded_to_markdown(const GradedGroup& g);
/// "(0,2)=Z (2,2)=Z", or "0".
std::string table_summary(const BigradedTable& t);

/// {"blocks": [{"faces": [[labels]...], "positive": [labels]}]}; positive is optional.
std::vector<BlockSpec> blocks_from_json(const SimplicialComplex& k, const Json& j);
Json blocks_to_json(const SimplicialComplex& k, const std::vector<BlockSpec>& blocks);

/// {"vertex_map": {"a": "b", ...}}
std::map<std::string, std::string> vertex_map_from_json(const Json& j);

Json report_to_json(const CheckReport& r);
Json invariance_to_json(const InvarianceReport& r);
Json induced_to_json(const InducedMap& m);

}  // namespace hml
